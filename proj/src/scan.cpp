#include "fq/scan.hpp"

#include <cstdio>
#include <exception>
#include <fstream>

#include <omp.h>

#include "fq/error.hpp"
#include "fq/primes.hpp"

namespace fq::cli {

namespace {

constexpr std::size_t chunk_size = 512;

std::string quote_csv(const std::string &s)
{
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string csv_cell(const Json &value)
{
    switch (value.type()) {
    case Json::value_t::number_unsigned: return std::to_string(value.get<std::uint64_t>());
    case Json::value_t::number_integer: return std::to_string(value.get<std::int64_t>());
    case Json::value_t::number_float: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
        return buf;
    }
    case Json::value_t::boolean: return value.get<bool>() ? "true" : "false";
    case Json::value_t::string: {
        const auto &s = value.get_ref<const std::string &>();
        return s.find_first_of(",\"\n") == std::string::npos ? s : quote_csv(s);
    }
    case Json::value_t::array: {
        std::string joined;
        for (const Json &item : value) {
            if (!joined.empty()) joined += ';';
            joined += csv_cell(item);
        }
        return quote_csv(joined);
    }
    case Json::value_t::null: return "";
    default: return value.dump();
    }
}

RecordWriter::RecordWriter(std::ostream &out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns))
{
    if (format_ == OutputFormat::csv) {
        std::string header;
        for (const std::string &c : columns_) header += (header.empty() ? "" : ",") + c;
        out_ << header << '\n';
    }
}

void RecordWriter::write(const Row &row)
{
    if (format_ == OutputFormat::jsonl) {
        out_ << row.dump() << '\n';
        return;
    }
    std::string line;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i != 0) line += ',';
        line += csv_cell(row.at(columns_[i]));
    }
    out_ << line << '\n';
}

Json to_json(const CacheEntry &e)
{
    Json params = Json::object();
    for (const auto &[k, v] : e.params) params[k] = v;
    return Json{{"schema_version", e.schema_version},
                {"p", e.p},
                {"command", e.command},
                {"params", params},
                {"result", e.result},
                {"toolkit_version", e.toolkit_version}};
}

CacheEntry cache_entry_from_json(const Json &j)
{
    try {
        CacheEntry e;
        e.schema_version = j.at("schema_version").get<int>();
        if (e.schema_version != cache_schema_version) {
            throw CacheCorrupt("unsupported schema_version " + std::to_string(e.schema_version));
        }
        e.p = j.at("p").get<std::uint64_t>();
        e.command = j.at("command").get<std::string>();
        for (const auto &[k, v] : j.at("params").items()) e.params[k] = v.get<std::string>();
        e.result = j.at("result");
        e.toolkit_version = j.at("toolkit_version").get<std::string>();
        return e;
    } catch (const Json::exception &ex) {
        throw CacheCorrupt(std::string("malformed cache entry: ") + ex.what());
    }
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(*path_);
    if (!in) return;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::parse_error &) {
            throw CacheCorrupt(path_->string() + ":" + std::to_string(line_no) + ": unparsable line");
        }
        CacheEntry e;
        try {
            e = cache_entry_from_json(j);
        } catch (const CacheCorrupt &ex) {
            throw CacheCorrupt(path_->string() + ":" + std::to_string(line_no) + ": " + ex.what());
        }
        entries_[key(e.p, e.command, e.params)] = std::move(e.result);
    }
}

std::string ResultCache::key(std::uint64_t p, const std::string &command,
                             const std::map<std::string, std::string> &params)
{
    std::string k = std::to_string(p) + '\x1f' + command;
    for (const auto &[name, value] : params) k += '\x1f' + name + '=' + value;
    return k;
}

const Json *ResultCache::find(std::uint64_t p, const std::string &command,
                              const std::map<std::string, std::string> &params) const
{
    const auto it = entries_.find(key(p, command, params));
    return it == entries_.end() ? nullptr : &it->second;
}

void ResultCache::append(const CacheEntry &e)
{
    entries_[key(e.p, e.command, e.params)] = e.result;
    if (!path_) return;
    const std::string line = to_json(e).dump() + '\n';
    std::ofstream out(*path_, std::ios::app | std::ios::binary);
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
    if (!out) throw Error("cannot append to cache " + path_->string());
}

ScanSummary scan(const ScanConfig &config, std::ostream &out)
{
    const PerPrimeCommand *cmd = find_command(config.command);
    if (cmd == nullptr) throw UsageError("unknown per-prime command '" + config.command + "'");
    if (config.p_min < 3 || config.p_min > config.p_max) {
        throw UsageError("need 3 <= p_min <= p_max");
    }
    if (config.p_max >= (std::uint64_t(1) << 32)) throw UsageError("p_max must be below 2^32");
    if (config.workers < 1) throw UsageError("workers must be >= 1");

    const std::map<std::string, std::string> params = cmd->key(config.params);
    ResultCache cache = config.cache_path ? ResultCache(*config.cache_path) : ResultCache();
    const std::vector<std::uint64_t> primes = primes_in_range(config.p_min, config.p_max);

    RecordWriter writer(out, config.format, cmd->columns);
    ScanSummary summary;
    summary.primes = primes.size();

    for (std::size_t begin = 0; begin < primes.size(); begin += chunk_size) {
        const std::size_t end = std::min(primes.size(), begin + chunk_size);
        std::vector<Json> results(end - begin);
        std::vector<char> fresh(end - begin, 0);
        for (std::size_t i = begin; i < end; ++i) {
            if (const Json *hit = cache.find(primes[i], cmd->name, params)) {
                results[i - begin] = *hit;
            } else {
                fresh[i - begin] = 1;
            }
        }

        std::vector<std::exception_ptr> errors(end - begin);
#pragma omp parallel for num_threads(config.workers) schedule(dynamic)
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(end - begin); ++j) {
            const auto idx = static_cast<std::size_t>(j);
            if (!fresh[idx]) continue;
            try {
                // Round-trip so fresh and cached results render identically.
                results[idx] = Json::parse(cmd->compute(PrimeContext(primes[begin + idx]), config.params).dump());
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
        for (const std::exception_ptr &e : errors) {
            if (e) std::rethrow_exception(e);
        }

        for (std::size_t idx = 0; idx < results.size(); ++idx) {
            if (fresh[idx]) {
                CacheEntry entry;
                entry.p = primes[begin + idx];
                entry.command = cmd->name;
                entry.params = params;
                entry.result = results[idx];
                if (config.cache_path) {
                    cache.append(entry);
                    ++summary.appended;
                }
                ++summary.computed;
            }
            const std::vector<Row> rows = cmd->rows(results[idx]);
            summary.granville_violation = summary.granville_violation || has_granville_violation(rows);
            for (const Row &row : rows) writer.write(row);
            summary.records += rows.size();
        }
    }
    out.flush();
    return summary;
}

} // namespace fq::cli
