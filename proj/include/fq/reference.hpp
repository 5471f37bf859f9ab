#pragma once

// Serial reference kernels. Straightforward single-threaded versions of the
// parallel kernels, kept for cross-checking in tests and as benchmark baselines.

#include <cstdint>
#include <vector>

#include "fq/fermatq.hpp"
#include "fq/modarith.hpp"

namespace fq::reference {

// Plain Eratosthenes over one byte array.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Right-to-left binary exponentiation with 128-bit remainders; no Montgomery form.
std::uint64_t modexp_p2(std::uint64_t p, std::uint64_t base, std::uint64_t exp);

// q_p(u) through the plain exponentiation above.
std::uint64_t fermat_quotient(std::uint64_t p, std::uint64_t u);

// Definition of Q_p(N), one quotient per n, serial.
std::vector<std::uint64_t> enumerate_Q(std::uint64_t p, std::uint64_t n, Convention conv = {});

std::vector<std::uint64_t> enumerate_R(std::uint64_t p, std::uint64_t n, Convention conv = {});

// Direct count over every w <= K, serial.
std::uint64_t count_T(std::uint64_t p, std::uint64_t k);

} // namespace fq::reference
