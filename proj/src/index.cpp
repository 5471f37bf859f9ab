#include "fq/index.hpp"

#include <cmath>

#include "fq/ihara.hpp"
#include "fq/summation.hpp"

namespace fq {

std::uint64_t alpha_p(std::uint64_t p, std::uint64_t n)
{
    if (n == 0 || n > p) return 0;
    const std::uint64_t q = p / n;
    const std::uint64_t r = p % n;
    // q (q-1) is even, so the halving is exact.
    return q * r + n * (q * (q - 1) / 2);
}

IndexReport log_index(const PrimeContext &ctx)
{
    const std::uint64_t p = ctx.p();
    const IharaReport ihara = ihara_full(ctx);

    IndexReport rep;
    rep.p = p;
    KahanSum sum;
    for (const IharaTerm &t : ihara.contributing_terms) {
        const std::uint64_t a = alpha_p(p, t.n);
        rep.terms.push_back({t.n, a, t.lambda});
        sum += static_cast<double>(a) * t.lambda;
    }
    rep.log_index = sum.value();

    const double p2 = static_cast<double>(p) * static_cast<double>(p);
    const double log_log_p = std::log(std::log(static_cast<double>(p)));
    rep.half_p2_sp = p2 / 2.0 * ihara.s_p_full;
    rep.unconditional_bound_main = 463.0 / 504.0 * p2 * log_log_p;
    rep.conditional_reference = p2 * log_log_p;
    return rep;
}

} // namespace fq
