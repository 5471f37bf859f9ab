#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace fq {

// Number of ordered s-tuples of positive integers with product n, exact.
// Product over l^k || n of C(k+s-1, s-1).
mpz_class tau_s(std::uint64_t n, std::uint64_t s);

struct TauRecord {
    std::uint64_t n = 0;
    std::uint64_t s = 0;
    mpz_class tau;
    // log n * log s / log log n; the bound's main term is exp of this.
    double log_bound_main_term = 0.0;
    // exp(log_bound_main_term); may be +inf for large s.
    double bound_main_term = 0.0;
    // log tau / log n, the "n^{o(1)}" exponent.
    double exponent = 0.0;
};

// Throws DomainError for n <= 2 (log log n <= 0) or s = 0.
TauRecord tau_bound_report(std::uint64_t n, std::uint64_t s);

} // namespace fq
