// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "fq/bounds.hpp"
#include "fq/divisor.hpp"
#include "fq/fermatq.hpp"
#include "fq/ihara.hpp"
#include "fq/index.hpp"
#include "fq/primes.hpp"
#include "fq/scan.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using fq::PrimeContext;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string &title, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d. %s (%.1f s) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *f, double a, double b = 0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

} // namespace

int main()
{
    criterion(1, "Montgomery path equals big-integer definition for p <= 200, u in [1, p^2]", [] {
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t checked = 0;
        for (const std::uint64_t p : fq::primes_in_range(3, 200)) {
            const PrimeContext ctx(p);
            for (std::uint64_t u = 1; u <= ctx.p_squared(); ++u) {
                if (fq::fermat_quotient(ctx, u).value != oracle::fermat_quotient(p, u)) {
                    return Outcome{false, "mismatch at p=" + std::to_string(p) + " u=" + std::to_string(u)};
                }
                ++checked;
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return Outcome{secs < 60.0, std::to_string(checked) + " pairs, " + fmt("%.1f s (target < 60 s)", secs)};
    });

    criterion(2, "Wieferich regression: 1093 and 3511 vanish at 2, l_1093 = 3", [] {
        const bool v1093 = fq::is_vanishing(PrimeContext(1093), 2);
        const bool v3511 = fq::is_vanishing(PrimeContext(3511), 2);
        const std::uint64_t ell = fq::smallest_nonvanishing(PrimeContext(1093));
        // Big-integer confirmation, independent of the Montgomery path.
        const bool oracle_ok = oracle::fermat_quotient(1093, 2) == 0 && oracle::fermat_quotient(3511, 2) == 0 &&
                               oracle::fermat_quotient(1093, 3) != 0;
        return Outcome{v1093 && v3511 && ell == 3 && oracle_ok, "l_1093 = " + std::to_string(ell)};
    });

    criterion(3, "Desk-scale exact values at p = 5 and p = 11", [] {
        const double log3 = std::log(3.0), log5 = std::log(5.0), log11 = std::log(11.0);
        const PrimeContext c5(5), c11(11);
        std::string bad;
        if (fq::enumerate_Q(c11, 11).members != std::vector<std::uint64_t>{1, 3, 9, 11}) bad += " Q_11(11)";
        if (std::abs(fq::ihara_full(c11).s_p_full - (4.0 / 9.0 * log3 + log11 / 11.0)) > 1e-9) bad += " S_11";
        if (std::abs(fq::log_index(c11).log_index - 17.0 * log3) > 1e-9) bad += " logI_11";
        if (std::abs(fq::ihara_full(c5).s_p_full - log5 / 5.0) > 1e-9) bad += " S_5";
        if (fq::log_index(c5).log_index != 0.0) bad += " logI_5";
        if (fq::alpha_p(11, 3) != 15) bad += " alpha_11(3)";
        if (fq::alpha_p(11, 9) != 2) bad += " alpha_11(9)";
        if (fq::count_T(c11, 121) != 10) bad += " T_11(121)";
        return Outcome{bad.empty(), bad.empty() ? "all 8 values" : "wrong:" + bad};
    });

    criterion(4, "Additive relation on 10^4 random (p, m, n)", [] {
        std::mt19937_64 rng(20100401);
        const auto primes = fq::primes_in_range(3, 1000000);
        for (int i = 0; i < 10000; ++i) {
            const std::uint64_t p = primes[rng() % primes.size()];
            const PrimeContext ctx(p);
            std::uint64_t m, n;
            do {
                m = rng() % 1000000000 + 1;
                n = rng() % 1000000000 + 1;
            } while (m % p == 0 || n % p == 0);
            const auto mn = static_cast<std::uint64_t>(static_cast<unsigned __int128>(m) * n % ctx.p_squared());
            const std::uint64_t lhs = fq::fermat_quotient(ctx, mn).value;
            const std::uint64_t rhs = (fq::fermat_quotient(ctx, m).value + fq::fermat_quotient(ctx, n).value) % p;
            if (lhs != rhs) return Outcome{false, "p=" + std::to_string(p)};
        }
        return Outcome{true, "10000 triples"};
    });

    criterion(5, "Granville sweep p in [3, 10^4], u in {1,2,3}, l = p excluded", [] {
        const auto start = std::chrono::steady_clock::now();
        std::size_t records = 0, violated = 0;
        for (const std::uint64_t p : fq::primes_in_range(3, 10000)) {
            for (const auto &r : fq::granville_check(p, {1, 2, 3})) {
                if (r.variant != "excl_p") continue;
                ++records;
                if (r.verdict != fq::Verdict::holds) ++violated;
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        // Same sweep through the scan engine at 8 workers.
        const auto par_start = std::chrono::steady_clock::now();
        fq::cli::ScanConfig cfg;
        cfg.p_min = 3;
        cfg.p_max = 10000;
        cfg.command = "granville";
        cfg.params.u = {1, 2, 3};
        cfg.workers = 8;
        std::ostringstream sink;
        const auto summary = fq::cli::scan(cfg, sink);
        const double par_secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - par_start).count();

        return Outcome{violated == 0 && !summary.granville_violation && secs < 600.0 && par_secs < 120.0,
                       std::to_string(records) + " records, " + std::to_string(violated) + " violated, " +
                           fmt("%.1f s single-threaded (< 600 s), %.1f s at 8 workers (< 120 s)", secs, par_secs)};
    });

    criterion(6, "log I_p <= (p^2/2) S_p for every prime p <= 2000", [] {
        double worst = 0.0;
        for (const std::uint64_t p : fq::primes_in_range(3, 2000)) {
            const auto r = fq::log_index(PrimeContext(p));
            if (r.log_index > r.half_p2_sp * (1.0 + 1e-9)) return Outcome{false, "p=" + std::to_string(p)};
            if (r.half_p2_sp > 0) worst = std::max(worst, r.log_index / r.half_p2_sp);
        }
        return Outcome{true, fmt("max log I_p / ((p^2/2) S_p) = %.6f", worst)};
    });

    criterion(7, "alpha_p integrality and closed form for p <= 10^3, n <= p", [] {
        std::uint64_t checked = 0;
        for (const std::uint64_t p : fq::primes_in_range(3, 1000)) {
            for (std::uint64_t n = 1; n <= p; ++n) {
                const mpq_class exact = oracle::alpha_rational(p, n);
                if (exact.get_den() != 1) return Outcome{false, "non-integer at p=" + std::to_string(p)};
                const std::uint64_t q = p / n, r = p % n;
                const std::uint64_t closed = q * r + n * q * (q - 1) / 2;
                if (exact.get_num() != static_cast<unsigned long>(closed) || fq::alpha_p(p, n) != closed) {
                    return Outcome{false, "mismatch at p=" + std::to_string(p) + " n=" + std::to_string(n)};
                }
                ++checked;
            }
        }
        return Outcome{true, std::to_string(checked) + " pairs"};
    });

    criterion(8, "tau_s equals tuple enumeration (n <= 200, s <= 4); multiplicative on 10^3 pairs", [] {
        for (std::uint64_t n = 1; n <= 200; ++n) {
            for (unsigned s = 1; s <= 4; ++s) {
                if (fq::tau_s(n, s) != static_cast<unsigned long>(oracle::count_tuples(n, s))) {
                    return Outcome{false, "n=" + std::to_string(n) + " s=" + std::to_string(s)};
                }
            }
        }
        std::mt19937_64 rng(463);
        int pairs = 0;
        while (pairs < 1000) {
            const std::uint64_t m = rng() % 1000000 + 1, n = rng() % 1000000 + 1;
            if (std::gcd(m, n) != 1) continue;
            const std::uint64_t s = rng() % 8 + 1;
            if (fq::tau_s(m * n, s) != fq::tau_s(m, s) * fq::tau_s(n, s)) return Outcome{false, "multiplicativity"};
            ++pairs;
        }
        return Outcome{true, "800 enumerations, 1000 coprime pairs"};
    });

    criterion(9, "Mertens window |sum_{n<=N} Lambda(n)/n - log N| <= 2", [] {
        std::string detail;
        bool ok = true;
        for (const std::uint64_t n : {100ULL, 1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
            const double d = fq::mertens_sum(n) - std::log(static_cast<double>(n));
            ok = ok && std::abs(d) <= 2.0;
            detail += fmt(" %.0e:%.4f", static_cast<double>(n), d);
        }
        // Independent sieve at N = 10^6 (numpy) gave -0.5776180269698372.
        const double d6 = fq::mertens_sum(1000000) - std::log(1e6);
        ok = ok && std::abs(d6 - -0.5776180269698372) <= 1e-9;
        return Outcome{ok, detail};
    });

    criterion(10, "Scan determinism: ihara over [3, 10^4] at 1 and 8 workers; warm cache appends 0", [] {
        const fs::path dir = fs::temp_directory_path() / ("fq_accept_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const fs::path cache = dir / "cache.jsonl";

        fq::cli::ScanConfig cfg;
        cfg.p_min = 3;
        cfg.p_max = 10000;
        cfg.command = "ihara";
        cfg.workers = 1;
        std::ostringstream serial;
        fq::cli::scan(cfg, serial);

        cfg.workers = 8;
        cfg.cache_path = cache;
        std::ostringstream parallel;
        const auto cold = fq::cli::scan(cfg, parallel);
        std::ostringstream warm_out;
        const auto warm = fq::cli::scan(cfg, warm_out);
        fs::remove_all(dir);

        const bool identical = serial.str() == parallel.str() && parallel.str() == warm_out.str();
        return Outcome{identical && cold.appended == 1228 && warm.appended == 0 && warm.computed == 0,
                       std::string(identical ? "byte-identical" : "outputs differ") + ", cold appended " +
                           std::to_string(cold.appended) + ", warm appended " + std::to_string(warm.appended)};
    });

    criterion(11, "S_p / ((463/252) log log p) finite and recorded for every p in [17, 10^4]", [] {
        std::size_t recorded = 0;
        double lo = INFINITY, hi = 0.0;
        const auto primes = fq::primes_in_range(17, 10000);
        for (const std::uint64_t p : primes) {
            const auto recs = fq::sp_bound_report(PrimeContext(p));
            const auto &r = recs.front();
            if (r.name != fq::BoundName::cor_sp2 || !std::isfinite(r.ratio) || r.ratio < 0 ||
                r.verdict != fq::Verdict::diagnostic_only) {
                return Outcome{false, "p=" + std::to_string(p)};
            }
            lo = std::min(lo, r.ratio);
            hi = std::max(hi, r.ratio);
            ++recorded;
        }
        return Outcome{recorded == primes.size(),
                       std::to_string(recorded) + " ratios" + fmt(", range [%.4f, %.4f]", lo, hi)};
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
