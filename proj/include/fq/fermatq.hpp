#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fq/modarith.hpp"

namespace fq {

struct QuotientValue {
    std::uint64_t p;
    std::uint64_t u;
    std::uint64_t value; // in [0, p-1]; 0 when p | u
};

enum class SetKind { Q, R, T };

const char *to_string(SetKind kind);

struct VanishingReport {
    std::uint64_t p = 0;
    std::uint64_t bound = 0; // N for Q and R, K for T
    SetKind kind = SetKind::Q;
    std::vector<std::uint64_t> members; // empty for T
    std::uint64_t cardinality = 0;
    bool includes_multiples_of_p = true;
};

// Whether multiples of p count as vanishing (q_p(u) = 0 for p | u).
struct Convention {
    bool include_multiples_of_p = true;
};

// Fast path: q_p(u) = ((u^(p-1) mod p^2) - 1) / p.
QuotientValue fermat_quotient(const PrimeContext &ctx, std::uint64_t u);

// Definitional path with exact big integers: ((u^(p-1) - 1) / p) mod p, no reduction
// mod p^2 along the way. Works for any prime p.
mpz_class fermat_quotient_big(const mpz_class &p, const mpz_class &u);

// p | u, or u^(p-1) = 1 mod p^2.
bool is_vanishing(const PrimeContext &ctx, std::uint64_t u);

// Least u >= 2 with q_p(u) != 0. Scans primes only; throws SearchExhausted past p^2.
std::uint64_t smallest_nonvanishing(const PrimeContext &ctx);

// Q_p(N) = {n <= N : q_p(n) = 0}. The fast path evaluates q_p at primes and extends
// to composites through q_p(mn) = q_p(m) + q_p(n); brute evaluates every n.
VanishingReport enumerate_Q(const PrimeContext &ctx, std::uint64_t n, Convention conv = {},
                            bool brute = false);

// R_p(N) = primes l <= N with q_p(l) = 0.
VanishingReport enumerate_R(const PrimeContext &ctx, std::uint64_t n, Convention conv = {});

// T_p(K) = #{w in [1, K] : gcd(w, p) = 1, w^(p-1) = 1 mod p^2}.
std::uint64_t count_T(const PrimeContext &ctx, std::uint64_t k);

// Same count by direct parallel evaluation of every w <= K.
std::uint64_t count_T_brute(const PrimeContext &ctx, std::uint64_t k);

// The p-1 residues of G_p in [1, p^2), ascending: a^p mod p^2 for 1 <= a < p.
std::vector<std::uint64_t> unit_roots_p2(const PrimeContext &ctx);

} // namespace fq
