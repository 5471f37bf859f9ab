#pragma once

#include <cstdint>
#include <vector>

#include "fq/fermatq.hpp"
#include "fq/modarith.hpp"

namespace fq {

// One prime power n in Q_p(p) with its contribution Lambda(n)/n.
struct IharaTerm {
    std::uint64_t n;
    double lambda;
    double weight;
};

struct IharaReport {
    std::uint64_t p = 0;
    std::uint64_t n = 0;             // cutoff N of the partial sum
    double s_p_partial = 0.0;        // S_p(N)
    double s_p_full = 0.0;           // S_p = S_p(p)
    double tail = 0.0;               // S_p - S_p(N), summed separately
    double mertens_at_n = 0.0;       // sum_{n <= N} Lambda(n)/n
    double grh_reference = 0.0;      // 2 log log p + 2
    double unconditional_reference = 0.0; // (463/252) log log p
    double tail_ratio = 0.0;         // tail / (N^(-252/463) log p)
    bool includes_p_term = true;     // whether (log p)/p is part of S_p
    std::vector<IharaTerm> contributing_terms; // ascending n, all of Q_p(p)
};

// S_p(N) for 1 <= N <= p, grouped by prime: sum over l in R_p(N) of
// log l * sum_{l^k <= N} l^-k. Every l^k <= p has k < p, so q_p(l^k) = k q_p(l)
// vanishes exactly when q_p(l) does.
double ihara_partial(const PrimeContext &ctx, std::uint64_t n, Convention conv = {});

// Definitional S_p(N): every n <= N with Lambda(n) != 0 and q_p(n) = 0, ascending.
double ihara_partial_brute(const PrimeContext &ctx, std::uint64_t n, Convention conv = {});

// Full report at cutoff N (1 <= N <= p).
IharaReport tail_report(const PrimeContext &ctx, std::uint64_t n, Convention conv = {});

inline IharaReport ihara_full(const PrimeContext &ctx, Convention conv = {})
{
    return tail_report(ctx, ctx.p(), conv);
}

// sum_{n <= N} Lambda(n)/n over prime powers, N >= 1.
double mertens_sum(std::uint64_t n);

} // namespace fq
