#pragma once

#include <cstdint>
#include <vector>

namespace fq {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

// Prime factorization sorted by prime, ascending. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Primes in [2, n], ascending. Segmented sieve; segments are sieved in parallel.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Trial division up to sqrt(n). n >= 1.
Factorization factorize(std::uint64_t n);

struct Mangoldt {
    bool is_prime_power = false;
    std::uint64_t prime = 0; // the prime l when n = l^k, else 0
    double value = 0.0;      // log l, or 0
};

// von Mangoldt function, natural log. n >= 1.
Mangoldt von_mangoldt(std::uint64_t n);

} // namespace fq
