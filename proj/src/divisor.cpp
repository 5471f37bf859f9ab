#include "fq/divisor.hpp"

#include <cmath>

#include "fq/error.hpp"
#include "fq/primes.hpp"

namespace fq {

namespace {

double mpz_log(const mpz_class &x)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

} // namespace

mpz_class tau_s(std::uint64_t n, std::uint64_t s)
{
    if (n == 0 || s == 0) throw DomainError("tau_s needs n >= 1 and s >= 1");
    mpz_class result = 1;
    for (const PrimePower &pp : factorize(n)) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), pp.exponent + s - 1, s - 1);
        result *= c;
    }
    return result;
}

TauRecord tau_bound_report(std::uint64_t n, std::uint64_t s)
{
    if (n <= 2) throw DomainError("log log n is not positive for n = " + std::to_string(n));
    if (s == 0) throw DomainError("s must be >= 1");
    TauRecord rec;
    rec.n = n;
    rec.s = s;
    rec.tau = tau_s(n, s);
    const double log_n = std::log(static_cast<double>(n));
    rec.log_bound_main_term = log_n * std::log(static_cast<double>(s)) / std::log(log_n);
    rec.bound_main_term = std::exp(rec.log_bound_main_term);
    rec.exponent = mpz_log(rec.tau) / log_n;
    return rec;
}

} // namespace fq
