#include "fq/ihara.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fq/error.hpp"
#include "fq/primes.hpp"
#include "fq/summation.hpp"

namespace fq {

namespace {

constexpr double unconditional_exponent = 463.0 / 252.0;
constexpr double tail_exponent = 252.0 / 463.0;

void check_cutoff(const PrimeContext &ctx, std::uint64_t n)
{
    if (n == 0 || n > ctx.p()) {
        throw DomainError("cutoff N = " + std::to_string(n) + " outside [1, p]");
    }
}

// log l * sum_{l^k <= n} l^-k
double prime_power_block(std::uint64_t l, std::uint64_t n)
{
    const double log_l = std::log(static_cast<double>(l));
    KahanSum inner;
    double inv = 1.0 / static_cast<double>(l);
    double power_inv = inv;
    for (std::uint64_t power = l; power <= n; power *= l) {
        inner += power_inv;
        power_inv *= inv;
        if (power > n / l) break;
    }
    return log_l * inner.value();
}

} // namespace

double ihara_partial(const PrimeContext &ctx, std::uint64_t n, Convention conv)
{
    check_cutoff(ctx, n);
    KahanSum sum;
    for (const std::uint64_t l : enumerate_R(ctx, n, conv).members) {
        sum += prime_power_block(l, n);
    }
    return sum.value();
}

double ihara_partial_brute(const PrimeContext &ctx, std::uint64_t n, Convention conv)
{
    check_cutoff(ctx, n);
    std::vector<double> weight(n + 1, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 2; i <= static_cast<std::int64_t>(n); ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        const Mangoldt lam = von_mangoldt(u);
        if (!lam.is_prime_power) continue;
        const bool multiple = u % ctx.p() == 0;
        const bool vanishes = multiple ? conv.include_multiples_of_p : fermat_quotient(ctx, u).value == 0;
        if (vanishes) weight[u] = lam.value / static_cast<double>(u);
    }
    KahanSum sum;
    for (const double w : weight) sum += w;
    return sum.value();
}

IharaReport tail_report(const PrimeContext &ctx, std::uint64_t n, Convention conv)
{
    check_cutoff(ctx, n);
    const std::uint64_t p = ctx.p();
    IharaReport rep;
    rep.p = p;
    rep.n = n;
    rep.includes_p_term = conv.include_multiples_of_p;

    for (const std::uint64_t l : enumerate_R(ctx, p, conv).members) {
        const double log_l = std::log(static_cast<double>(l));
        for (std::uint64_t power = l; power <= p; power *= l) {
            rep.contributing_terms.push_back({power, log_l, log_l / static_cast<double>(power)});
            if (power > p / l) break;
        }
    }
    std::sort(rep.contributing_terms.begin(), rep.contributing_terms.end(),
              [](const IharaTerm &a, const IharaTerm &b) { return a.n < b.n; });

    KahanSum partial, tail;
    for (const IharaTerm &t : rep.contributing_terms) {
        (t.n <= n ? partial : tail) += t.weight;
    }
    rep.s_p_partial = partial.value();
    rep.tail = tail.value();
    KahanSum full = partial;
    full += tail.value();
    rep.s_p_full = full.value();

    rep.mertens_at_n = mertens_sum(n);
    const double log_log_p = std::log(std::log(static_cast<double>(p)));
    rep.grh_reference = 2.0 * log_log_p + 2.0;
    rep.unconditional_reference = unconditional_exponent * log_log_p;
    rep.tail_ratio =
        rep.tail / (std::pow(static_cast<double>(n), -tail_exponent) * std::log(static_cast<double>(p)));
    return rep;
}

double mertens_sum(std::uint64_t n)
{
    if (n == 0) throw DomainError("N must be >= 1");
    KahanSum sum;
    for (const std::uint64_t l : primes_up_to(n)) sum += prime_power_block(l, n);
    return sum.value();
}

} // namespace fq
