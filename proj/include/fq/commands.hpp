#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fq/modarith.hpp"

namespace fq::cli {

// Parameters shared by every subcommand; each command reads the ones it needs.
struct Params {
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> s;
    std::vector<std::uint64_t> u; // sorted, unique
    std::optional<double> alpha;
    bool include_p_term = true;
    bool brute = false;
};

// Insertion-ordered JSON; reports and rows keep their field order.
using Json = nlohmann::ordered_json;

// One output record; key order is the CSV column order.
using Row = Json;

// A subcommand that runs once per prime.
struct PerPrimeCommand {
    std::string name;
    std::vector<std::string> columns;
    // Canonical, key-sorted parameter map; part of the cache key.
    std::map<std::string, std::string> (*key)(const Params &);
    // Full report for one prime, as stored in the cache.
    Json (*compute)(const PrimeContext &, const Params &);
    // Output records derived from a stored report.
    std::vector<Row> (*rows)(const Json &);
};

// nullptr for unknown names and for the prime-free commands (taus, mertens).
const PerPrimeCommand *find_command(const std::string &name);

std::vector<std::string> per_prime_command_names();

// True if any row is a violated Granville record in the l = p excluded variant.
bool has_granville_violation(const std::vector<Row> &rows);

// The prime-free commands.
std::vector<std::string> taus_columns();
Row taus_row(std::uint64_t n, std::uint64_t s);
std::vector<std::string> mertens_columns();
Row mertens_row(std::uint64_t n);

} // namespace fq::cli
