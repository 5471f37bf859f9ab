#include "fq/primes.hpp"

#include <algorithm>
#include <cmath>

#include "fq/error.hpp"

namespace fq {

namespace {

constexpr std::uint64_t segment_size = std::uint64_t(1) << 18;

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t n)
{
    std::vector<char> composite(n + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

} // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo) return {};
    if (hi >= (std::uint64_t(1) << 62)) throw DomainError("sieve bound too large");

    const std::vector<std::uint64_t> base = small_primes(isqrt(hi));
    const std::uint64_t count = (hi - lo) / segment_size + 1;
    std::vector<std::vector<std::uint64_t>> found(count);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t seg = 0; seg < static_cast<std::int64_t>(count); ++seg) {
        const std::uint64_t begin = lo + static_cast<std::uint64_t>(seg) * segment_size;
        const std::uint64_t end = std::min(hi, begin + segment_size - 1);
        std::vector<char> composite(end - begin + 1, 0);
        for (const std::uint64_t q : base) {
            if (q * q > end) break;
            std::uint64_t start = std::max(q * q, (begin + q - 1) / q * q);
            for (std::uint64_t j = start; j <= end; j += q) composite[j - begin] = 1;
        }
        auto &out = found[static_cast<std::size_t>(seg)];
        for (std::uint64_t i = begin; i <= end; ++i) {
            if (!composite[i - begin]) out.push_back(i);
        }
    }

    std::vector<std::uint64_t> primes;
    for (const auto &part : found) primes.insert(primes.end(), part.begin(), part.end());
    return primes;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) { return primes_in_range(2, n); }

Factorization factorize(std::uint64_t n)
{
    Factorization f;
    auto strip = [&](std::uint64_t d) {
        unsigned k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        if (k != 0) f.push_back({d, k});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

Mangoldt von_mangoldt(std::uint64_t n)
{
    if (n < 2) return {};
    const Factorization f = factorize(n);
    if (f.size() != 1) return {};
    return {true, f.front().prime, std::log(static_cast<double>(f.front().prime))};
}

} // namespace fq
