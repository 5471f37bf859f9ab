#include "fq/modarith.hpp"

#include <array>
#include <string>

#include "fq/error.hpp"

namespace fq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n)
{
    std::uint64_t r = 1 % n;
    a %= n;
    while (e != 0) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

// Inverse of odd m modulo 2^64 by Newton iteration; m*m = 1 mod 8 seeds 3 bits.
std::uint64_t inverse_mod_r(std::uint64_t m)
{
    std::uint64_t x = m;
    for (int i = 0; i < 5; ++i) x *= 2 - m * x;
    return x;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const std::uint64_t b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (const std::uint64_t b : bases) {
        std::uint64_t x = powmod(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeContext::PrimeContext(std::uint64_t p) : p_(p)
{
    if (p < 3 || p >= (std::uint64_t(1) << 32)) {
        throw OutOfRange("p = " + std::to_string(p) + " outside [3, 2^32)");
    }
    if (!is_prime_u64(p)) {
        throw CompositeInput("p = " + std::to_string(p) + " is not prime");
    }
    m_ = p * p;
    m_inv_ = inverse_mod_r(m_);
    const std::uint64_t r1 = (0 - m_) % m_; // 2^64 mod m
    r2_ = mulmod(r1, r1, m_);
    one_ = r1;
}

std::uint64_t modexp_p2(const PrimeContext &ctx, std::uint64_t base, std::uint64_t exp)
{
    constexpr int window = 4;
    if (exp == 0) return 1 % ctx.p_squared();

    std::array<std::uint64_t, 1 << window> table;
    table[0] = ctx.one();
    table[1] = ctx.to_montgomery(base);
    for (std::size_t i = 2; i < table.size(); ++i) table[i] = ctx.mul(table[i - 1], table[1]);

    int top = 63 - __builtin_clzll(exp);
    int shift = (top / window) * window;
    std::uint64_t acc = table[(exp >> shift) & 0xF];
    for (shift -= window; shift >= 0; shift -= window) {
        for (int i = 0; i < window; ++i) acc = ctx.mul(acc, acc);
        const std::uint64_t digit = (exp >> shift) & 0xF;
        if (digit != 0) acc = ctx.mul(acc, table[digit]);
    }
    return ctx.from_montgomery(acc);
}

mpz_class modexp_p2_big(const mpz_class &p, const mpz_class &base, const mpz_class &exp)
{
    const mpz_class m = p * p;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace fq
