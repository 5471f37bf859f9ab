#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"

#include "fq/divisor.hpp"
#include "fq/error.hpp"
#include "oracles.hpp"

TEST_SUITE("divisor")
{
    TEST_CASE("tau_s examples")
    {
        CHECK(fq::tau_s(1, 7) == 1);
        CHECK(fq::tau_s(6, 2) == 4);
        CHECK(fq::tau_s(4, 3) == 6);
        for (const std::uint64_t l : {2ULL, 3ULL, 1093ULL, 4294967291ULL}) {
            for (std::uint64_t s = 1; s <= 9; ++s) REQUIRE(fq::tau_s(l, s) == static_cast<unsigned long>(s));
        }
        CHECK(fq::tau_s(720720, 1) == 1);
        CHECK_THROWS_AS(fq::tau_s(0, 2), fq::DomainError);
        CHECK_THROWS_AS(fq::tau_s(5, 0), fq::DomainError);
    }

    TEST_CASE("values beyond 64 bits stay exact")
    {
        // 2^40 with s = 40: C(79, 39).
        mpz_class expected;
        mpz_bin_uiui(expected.get_mpz_t(), 79, 39);
        CHECK(fq::tau_s(1ULL << 40, 40) == expected);
        CHECK(expected > mpz_class("18446744073709551615"));
    }

    TEST_CASE("prime-power formula against tuple enumeration")
    {
        for (const std::uint64_t l : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            for (std::uint64_t pw = l; pw <= 256; pw *= l) {
                for (unsigned s = 1; s <= 5; ++s) {
                    REQUIRE(fq::tau_s(pw, s) == static_cast<unsigned long>(oracle::count_tuples(pw, s)));
                }
            }
        }
    }

    TEST_CASE("multiplicativity on coprime pairs")
    {
        std::mt19937_64 rng(5);
        int checked = 0;
        while (checked < 1000) {
            const std::uint64_t m = rng() % 1000000 + 1;
            const std::uint64_t n = rng() % 1000000 + 1;
            if (std::gcd(m, n) != 1) continue;
            const std::uint64_t s = rng() % 6 + 1;
            REQUIRE(fq::tau_s(m * n, s) == fq::tau_s(m, s) * fq::tau_s(n, s));
            ++checked;
        }
    }

    TEST_CASE("recurrence tau_{s+1}(n) = sum over d | n of tau_s(d)")
    {
        for (std::uint64_t n = 1; n <= 10000; n += (n < 500 ? 1 : 37)) {
            for (std::uint64_t s = 1; s <= 4; ++s) {
                mpz_class sum = 0;
                for (std::uint64_t d = 1; d <= n; ++d) {
                    if (n % d == 0) sum += fq::tau_s(d, s);
                }
                REQUIRE(fq::tau_s(n, s + 1) == sum);
            }
        }
    }

    TEST_CASE("tau_bound_report")
    {
        const auto r = fq::tau_bound_report(1000000, 2);
        CHECK(r.tau == 49);
        CHECK(r.exponent == doctest::Approx(0.2817).epsilon(1e-4));
        CHECK(r.exponent == doctest::Approx(std::log(49.0) / std::log(1e6)).epsilon(1e-14));
        const double log_n = std::log(1e6);
        CHECK(r.bound_main_term == doctest::Approx(std::exp(log_n * std::log(2.0) / std::log(log_n))));

        const auto one = fq::tau_bound_report(16, 1);
        CHECK(one.tau == 1);
        CHECK(one.bound_main_term == 1.0);
        CHECK(one.exponent == 0.0);

        CHECK_THROWS_AS(fq::tau_bound_report(2, 2), fq::DomainError);
        CHECK_THROWS_AS(fq::tau_bound_report(1, 2), fq::DomainError);
        CHECK_NOTHROW(fq::tau_bound_report(3, 2));
    }
}
