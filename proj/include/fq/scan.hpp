#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fq/commands.hpp"

namespace fq::cli {

inline constexpr const char *toolkit_version = "0.1.0";
inline constexpr int cache_schema_version = 1;

enum class OutputFormat { csv, jsonl };

// Renders rows as CSV (header first) or one JSON object per line.
class RecordWriter {
public:
    RecordWriter(std::ostream &out, OutputFormat format, std::vector<std::string> columns);

    void write(const Row &row);

private:
    std::ostream &out_;
    OutputFormat format_;
    std::vector<std::string> columns_;
};

// Reals use 17 significant digits; lists become one quoted, semicolon-joined field.
std::string csv_cell(const Json &value);

struct CacheEntry {
    int schema_version = cache_schema_version;
    std::uint64_t p = 0;
    std::string command;
    std::map<std::string, std::string> params;
    Json result;
    std::string toolkit_version = cli::toolkit_version;
};

Json to_json(const CacheEntry &e);
// Throws CacheCorrupt on a missing field or a wrong schema version.
CacheEntry cache_entry_from_json(const Json &j);

// Append-only JSONL store keyed by (p, command, params). Later lines win.
class ResultCache {
public:
    ResultCache() = default;
    // Loads an existing file; a missing file is an empty cache.
    explicit ResultCache(std::filesystem::path path);

    const Json *find(std::uint64_t p, const std::string &command,
                     const std::map<std::string, std::string> &params) const;

    // Writes one whole line and flushes.
    void append(const CacheEntry &e);

    std::size_t size() const { return entries_.size(); }

private:
    static std::string key(std::uint64_t p, const std::string &command,
                           const std::map<std::string, std::string> &params);

    std::optional<std::filesystem::path> path_;
    std::unordered_map<std::string, Json> entries_;
};

struct ScanConfig {
    std::uint64_t p_min = 3;
    std::uint64_t p_max = 3;
    std::string command;
    Params params;
    int workers = 1;
    std::optional<std::filesystem::path> cache_path;
    OutputFormat format = OutputFormat::csv;
};

struct ScanSummary {
    std::size_t primes = 0;
    std::size_t records = 0;
    std::size_t computed = 0; // primes not served from the cache
    std::size_t appended = 0; // cache lines written
    bool granville_violation = false;
};

// Runs a per-prime command over every prime in [p_min, p_max]. Primes are
// distributed over `workers` threads; output is always in ascending p order.
ScanSummary scan(const ScanConfig &config, std::ostream &out);

} // namespace fq::cli
