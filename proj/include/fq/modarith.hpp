#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace fq {

// Deterministic Miller-Rabin for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Immutable arithmetic context for the modulus p^2, 3 <= p < 2^32.
//
// Residues are held in Montgomery form with radix R = 2^64. Since p^2 < 2^64
// every product of two reduced residues fits a 128-bit intermediate.
class PrimeContext {
public:
    // Throws OutOfRange for p < 3 or p >= 2^32, CompositeInput if p is not prime.
    explicit PrimeContext(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t p_squared() const { return m_; }

    // p^-2 mod 2^64.
    std::uint64_t modulus_inverse() const { return m_inv_; }
    // R^2 mod p^2.
    std::uint64_t r_squared() const { return r2_; }

    std::uint64_t to_montgomery(std::uint64_t a) const { return mul(a % m_, r2_); }
    std::uint64_t from_montgomery(std::uint64_t a) const { return redc(a, 0); }

    // Montgomery product a*b/R mod p^2 for a, b < p^2.
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        return redc(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(t >> 64));
    }

    // Montgomery form of 1.
    std::uint64_t one() const { return one_; }

private:
    // (hi*R + lo) / R mod p^2, requires hi < p^2.
    std::uint64_t redc(std::uint64_t lo, std::uint64_t hi) const
    {
        const std::uint64_t u = lo * m_inv_;
        const std::uint64_t um_hi =
            static_cast<std::uint64_t>((static_cast<unsigned __int128>(u) * m_) >> 64);
        const std::uint64_t r = hi - um_hi;
        return hi < um_hi ? r + m_ : r;
    }

    std::uint64_t p_;
    std::uint64_t m_;
    std::uint64_t m_inv_;
    std::uint64_t r2_;
    std::uint64_t one_;
};

inline PrimeContext make_context(std::uint64_t p) { return PrimeContext(p); }

// base^exp mod p^2 by fixed-window (width 4) left-to-right exponentiation.
std::uint64_t modexp_p2(const PrimeContext &ctx, std::uint64_t base, std::uint64_t exp);

// Generic big-integer path for any p; shares no code with the Montgomery path.
mpz_class modexp_p2_big(const mpz_class &p, const mpz_class &base, const mpz_class &exp);

} // namespace fq
