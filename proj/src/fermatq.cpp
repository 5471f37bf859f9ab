#include "fq/fermatq.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fq/error.hpp"
#include "fq/primes.hpp"

namespace fq {

namespace {

// Marks a multiple of p in the quotient table.
constexpr std::uint32_t multiple_of_p = std::numeric_limits<std::uint32_t>::max();

void require_positive(std::uint64_t n, const char *what)
{
    if (n == 0) throw DomainError(std::string(what) + " must be >= 1");
}

} // namespace

const char *to_string(SetKind kind)
{
    switch (kind) {
    case SetKind::Q: return "Q";
    case SetKind::R: return "R";
    case SetKind::T: return "T";
    }
    return "?";
}

QuotientValue fermat_quotient(const PrimeContext &ctx, std::uint64_t u)
{
    const std::uint64_t p = ctx.p();
    if (u % p == 0) return {p, u, 0};
    // u^(p-1) = 1 mod p, so the residue is 1 + p*q with 0 <= q < p.
    const std::uint64_t x = modexp_p2(ctx, u, p - 1);
    return {p, u, (x - 1) / p};
}

mpz_class fermat_quotient_big(const mpz_class &p, const mpz_class &u)
{
    if (u % p == 0) return 0;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), u.get_mpz_t(), mpz_class(p - 1).get_ui());
    mpz_class numer = power - 1;
    mpz_class quot;
    mpz_divexact(quot.get_mpz_t(), numer.get_mpz_t(), p.get_mpz_t());
    mpz_class r;
    mpz_mod(r.get_mpz_t(), quot.get_mpz_t(), p.get_mpz_t());
    return r;
}

bool is_vanishing(const PrimeContext &ctx, std::uint64_t u)
{
    return u % ctx.p() == 0 || modexp_p2(ctx, u, ctx.p() - 1) == 1;
}

std::uint64_t smallest_nonvanishing(const PrimeContext &ctx)
{
    // If q_p vanishes on every prime below x it vanishes on every integer below x.
    const std::uint64_t cap = ctx.p_squared();
    for (std::uint64_t u = 2; u <= cap; ++u) {
        if (is_prime_u64(u) && !is_vanishing(ctx, u)) return u;
    }
    throw SearchExhausted("no non-vanishing Fermat quotient below p^2 for p = " +
                          std::to_string(ctx.p()));
}

VanishingReport enumerate_Q(const PrimeContext &ctx, std::uint64_t n, Convention conv, bool brute)
{
    require_positive(n, "N");
    const std::uint64_t p = ctx.p();
    VanishingReport report{p, n, SetKind::Q, {}, 0, conv.include_multiples_of_p};

    if (brute) {
        std::vector<char> hit(n + 1, 0);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i) {
            const auto u = static_cast<std::uint64_t>(i);
            if (u % p == 0) {
                hit[u] = conv.include_multiples_of_p;
            } else {
                hit[u] = fermat_quotient(ctx, u).value == 0;
            }
        }
        for (std::uint64_t u = 1; u <= n; ++u) {
            if (hit[u]) report.members.push_back(u);
        }
        report.cardinality = report.members.size();
        return report;
    }

    // Quotients on [1, L]; beyond p^2 membership repeats with period p^2.
    const std::uint64_t limit = std::min(n, ctx.p_squared());
    std::vector<std::uint32_t> q(limit + 1, 0);
    std::vector<std::uint32_t> spf(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        primes.push_back(i);
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(primes.size()); ++i) {
        const std::uint64_t l = primes[static_cast<std::size_t>(i)];
        q[l] = l == p ? multiple_of_p : static_cast<std::uint32_t>(fermat_quotient(ctx, l).value);
    }

    for (std::uint64_t m = 4; m <= limit; ++m) {
        const std::uint64_t l = spf[m];
        if (l == m) continue;
        const std::uint32_t a = q[l];
        const std::uint32_t b = q[m / l];
        q[m] = (a == multiple_of_p || b == multiple_of_p)
                   ? multiple_of_p
                   : static_cast<std::uint32_t>((std::uint64_t(a) + b) % p);
    }

    auto vanishes = [&](std::uint64_t u) {
        const std::uint64_t r = u <= limit ? u : u % ctx.p_squared();
        if (r == 0 || q[r] == multiple_of_p) return conv.include_multiples_of_p;
        return q[r] == 0;
    };
    for (std::uint64_t u = 1; u <= n; ++u) {
        if (vanishes(u)) report.members.push_back(u);
    }
    report.cardinality = report.members.size();
    return report;
}

VanishingReport enumerate_R(const PrimeContext &ctx, std::uint64_t n, Convention conv)
{
    require_positive(n, "N");
    const std::uint64_t p = ctx.p();
    VanishingReport report{p, n, SetKind::R, {}, 0, conv.include_multiples_of_p};

    const std::vector<std::uint64_t> primes = primes_up_to(n);
    std::vector<char> hit(primes.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(primes.size()); ++i) {
        const std::uint64_t l = primes[static_cast<std::size_t>(i)];
        hit[static_cast<std::size_t>(i)] = l == p ? conv.include_multiples_of_p : is_vanishing(ctx, l);
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (hit[i]) report.members.push_back(primes[i]);
    }
    report.cardinality = report.members.size();
    return report;
}

std::vector<std::uint64_t> unit_roots_p2(const PrimeContext &ctx)
{
    const std::uint64_t p = ctx.p();
    std::vector<std::uint64_t> roots(p - 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
        roots[static_cast<std::size_t>(a - 1)] = modexp_p2(ctx, static_cast<std::uint64_t>(a), p);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::uint64_t count_T(const PrimeContext &ctx, std::uint64_t k)
{
    require_positive(k, "K");
    if (k < ctx.p()) return count_T_brute(ctx, k);
    const std::vector<std::uint64_t> roots = unit_roots_p2(ctx);
    const std::uint64_t periods = k / ctx.p_squared();
    const std::uint64_t rest = k % ctx.p_squared();
    const auto partial = static_cast<std::uint64_t>(
        std::upper_bound(roots.begin(), roots.end(), rest) - roots.begin());
    return periods * (ctx.p() - 1) + partial;
}

std::uint64_t count_T_brute(const PrimeContext &ctx, std::uint64_t k)
{
    require_positive(k, "K");
    const std::uint64_t p = ctx.p();
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(k); ++i) {
        const auto w = static_cast<std::uint64_t>(i);
        if (w % p != 0 && modexp_p2(ctx, w, p - 1) == 1) ++count;
    }
    return count;
}

} // namespace fq
