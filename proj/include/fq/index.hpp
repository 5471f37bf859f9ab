#pragma once

#include <cstdint>
#include <vector>

#include "fq/modarith.hpp"

namespace fq {

// alpha_p(n) = floor(p/n) (p - n/2 - floor(p/n) n/2), evaluated as q r + n q (q-1) / 2
// with q = floor(p/n), r = p mod n. Zero for n >= p.
std::uint64_t alpha_p(std::uint64_t p, std::uint64_t n);

struct IndexTerm {
    std::uint64_t n;
    std::uint64_t alpha;
    double lambda;
};

struct IndexReport {
    std::uint64_t p = 0;
    double log_index = 0.0;                // sum over Q_p(p) of alpha_p(n) Lambda(n)
    double half_p2_sp = 0.0;               // (p^2/2) S_p
    double unconditional_bound_main = 0.0; // (463/504) p^2 log log p
    double conditional_reference = 0.0;    // p^2 log log p
    std::vector<IndexTerm> terms;          // prime powers of Q_p(p), ascending
};

// log I_p by the exact-weight identity over the prime powers of Q_p(p).
IndexReport log_index(const PrimeContext &ctx);

} // namespace fq
