#include "fq/reference.hpp"

namespace fq::reference {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<char> composite(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

std::uint64_t modexp_p2(std::uint64_t p, std::uint64_t base, std::uint64_t exp)
{
    const unsigned __int128 m = static_cast<unsigned __int128>(p) * p;
    unsigned __int128 b = base % m;
    unsigned __int128 r = 1;
    while (exp != 0) {
        if (exp & 1) r = r * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t fermat_quotient(std::uint64_t p, std::uint64_t u)
{
    if (u % p == 0) return 0;
    return (modexp_p2(p, u, p - 1) - 1) / p;
}

std::vector<std::uint64_t> enumerate_Q(std::uint64_t p, std::uint64_t n, Convention conv)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 1; u <= n; ++u) {
        const bool vanishes = u % p == 0 ? conv.include_multiples_of_p : fermat_quotient(p, u) == 0;
        if (vanishes) out.push_back(u);
    }
    return out;
}

std::vector<std::uint64_t> enumerate_R(std::uint64_t p, std::uint64_t n, Convention conv)
{
    std::vector<std::uint64_t> out;
    for (const std::uint64_t l : primes_up_to(n)) {
        const bool vanishes = l == p ? conv.include_multiples_of_p : fermat_quotient(p, l) == 0;
        if (vanishes) out.push_back(l);
    }
    return out;
}

std::uint64_t count_T(std::uint64_t p, std::uint64_t k)
{
    std::uint64_t count = 0;
    for (std::uint64_t w = 1; w <= k; ++w) {
        if (w % p != 0 && modexp_p2(p, w, p - 1) == 1) ++count;
    }
    return count;
}

} // namespace fq::reference
