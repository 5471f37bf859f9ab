#include "fq/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"

#include "fq/bounds.hpp"
#include "fq/error.hpp"
#include "fq/modarith.hpp"
#include "fq/scan.hpp"

namespace fq::cli {

namespace {

std::vector<std::uint64_t> parse_u_list(const std::string &text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception &) {
            throw UsageError("--u: '" + item + "' is not an integer");
        }
        if (used != item.size() || v == 0 || item.front() == '-') {
            throw UsageError("--u: entries must be integers >= 1");
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool parse_bool(const std::string &text, const char *name)
{
    if (text == "true") return true;
    if (text == "false") return false;
    throw UsageError(std::string("--") + name + " expects true or false");
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Fermat quotients, vanishing sets, Ihara sums and bound diagnostics", "fq"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t p = 0, p_min = 0, p_max = 0, n = 0, k = 0, s = 0;
    double alpha = default_alpha;
    int workers = omp_get_num_procs();
    std::string u_text, cache, format = "csv", output = "-", include_p = "true", command;
    bool brute = false;

    auto *opt_p = app.add_option("--p", p, "Single prime");
    auto *opt_min = app.add_option("--p-min", p_min, "Lower end of the prime range");
    auto *opt_max = app.add_option("--p-max", p_max, "Upper end of the prime range");
    auto *opt_n = app.add_option("--n", n, "N, or the argument u for quotient");
    auto *opt_k = app.add_option("--k", k, "K for countt / ratios");
    auto *opt_s = app.add_option("--s", s, "s for taus");
    auto *opt_u = app.add_option("--u", u_text, "Comma-separated u values for granville");
    auto *opt_alpha = app.add_option("--alpha", alpha, "Exponent parameter alpha");
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    auto *opt_cache = app.add_option("--cache", cache, "JSONL result cache (default: $FQ_CACHE)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_option("--output", output, "Output path, '-' for standard output");
    app.add_option("--include-p-term", include_p, "Count multiples of p as vanishing (true|false)");
    app.add_flag("--brute", brute, "Force definitional code paths");

    for (const std::string &name : per_prime_command_names()) app.add_subcommand(name, name + " per prime");
    app.add_subcommand("taus", "ordered factorization count tau_s(n) with the divisor-bound main term");
    app.add_subcommand("mertens", "sum of Lambda(n)/n for n <= N");
    CLI::App *scan_cmd = app.add_subcommand("scan", "run a per-prime command over a range with caching");
    scan_cmd->add_option("--command", command, "Per-prime command to run")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const std::string sub = app.get_subcommands().front()->get_name();

        std::ofstream file;
        std::ostream *sink = &out;
        if (output != "-") {
            file.open(output, std::ios::binary);
            if (!file) throw UsageError("cannot open --output " + output);
            sink = &file;
        }
        const OutputFormat fmt = format == "jsonl" ? OutputFormat::jsonl : OutputFormat::csv;

        if (sub == "taus") {
            if (!opt_n->count() || !opt_s->count()) throw UsageError("taus needs --n and --s");
            RecordWriter w(*sink, fmt, taus_columns());
            w.write(taus_row(n, s));
            return exit_ok;
        }
        if (sub == "mertens") {
            if (!opt_n->count() || n == 0) throw UsageError("mertens needs --n >= 1");
            RecordWriter w(*sink, fmt, mertens_columns());
            w.write(mertens_row(n));
            return exit_ok;
        }

        ScanConfig config;
        config.command = sub == "scan" ? command : sub;
        if (find_command(config.command) == nullptr) {
            throw UsageError("unknown command '" + config.command + "'");
        }
        if (opt_p->count() && (opt_min->count() || opt_max->count())) {
            throw UsageError("use either --p or --p-min/--p-max");
        }
        if (opt_p->count()) {
            if (p < 3 || p >= (std::uint64_t(1) << 32) || !is_prime_u64(p)) {
                throw UsageError("--p must be an odd prime below 2^32");
            }
            config.p_min = config.p_max = p;
        } else if (opt_min->count() && opt_max->count()) {
            config.p_min = p_min;
            config.p_max = p_max;
        } else {
            throw UsageError("give --p or both --p-min and --p-max");
        }

        Params &params = config.params;
        if (opt_n->count()) params.n = n;
        if (opt_k->count()) params.k = k;
        if (opt_s->count()) params.s = s;
        if (opt_u->count()) params.u = parse_u_list(u_text);
        if (opt_alpha->count()) {
            params.alpha = alpha;
            if (!(alpha > alpha_threshold)) {
                err << "warning: alpha = " << alpha << " does not exceed 463/252; ratios are reported anyway\n";
            }
        }
        if (params.n && *params.n == 0) throw UsageError("--n must be >= 1");
        if (params.k && *params.k == 0) throw UsageError("--k must be >= 1");
        params.include_p_term = parse_bool(include_p, "include-p-term");
        params.brute = brute;

        config.workers = workers;
        config.format = fmt;
        if (opt_cache->count()) {
            config.cache_path = cache;
        } else if (const char *env = std::getenv("FQ_CACHE"); env != nullptr && *env != '\0') {
            config.cache_path = env;
        }

        const ScanSummary summary = scan(config, *sink);
        return summary.granville_violation ? exit_violation : exit_ok;
    } catch (const UsageError &e) {
        err << "fq: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError &e) {
        err << "fq: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "fq: error: " << e.what() << '\n';
        return exit_failure;
    }
}

int run_command(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_command(args, std::cout, std::cerr);
}

} // namespace fq::cli
