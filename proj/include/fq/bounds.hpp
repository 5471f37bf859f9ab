#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fq/fermatq.hpp"
#include "fq/modarith.hpp"

namespace fq {

enum class BoundName {
    granville,  // #R_p(p^(1/u)) <= u p^(1/(2u)), the only explicit inequality
    thm_Qp,     // #Q_p(N) << u N p^(-1/s)
    thm_Rp,     // #R_p(N) << u N p^(-1/s)
    cor_Qp,     // #Q_p(N) <= N^(211/463 + o(1))
    cor_Rp,     // #R_p(N) <= N^(211/463 + o(1)) log p
    lemma_sols, // T_p(K) << K/p
    cor_sp2,    // S_p <= (463/252 + o(1)) log log p
    thm_ip,     // log I_p <= (463/504 + o(1)) p^2 log log p
    grh_sp,     // S_p <= 2 log log p + 2 + o(1), conditional
    grh_ip,     // log I_p <= (1 + o(1)) p^2 log log p, conditional
};

enum class Verdict { holds, violated, diagnostic_only };

const char *to_string(BoundName name);
const char *to_string(Verdict verdict);

// Smallest alpha admitted by the counting theorems is anything above this.
inline constexpr double alpha_threshold = 463.0 / 252.0;
inline constexpr double default_alpha = alpha_threshold + 1e-6;

struct BoundRecord {
    std::uint64_t p = 0;
    BoundName name = BoundName::granville;
    std::string variant; // "incl_p" / "excl_p" for granville, else empty
    std::uint64_t n = 0; // N, 0 when unused
    std::uint64_t k = 0; // K, 0 when unused
    double u = 0.0;
    double alpha = 0.0;
    std::uint64_t s = 0; // ceil(alpha u)
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    Verdict verdict = Verdict::diagnostic_only;
    bool hypothesis_met = true;
    std::string note;
};

// Largest N with N^u <= p.
std::uint64_t integer_root(std::uint64_t p, std::uint64_t u);

// count <= u p^(1/(2u)), decided exactly as count^(2u) <= p u^(2u).
bool granville_inequality_holds(std::uint64_t count, std::uint64_t u, std::uint64_t p);

// For each u: N = floor(p^(1/u)), lhs = #R_p(N) with and without the l = p term,
// rhs = u p^(1/(2u)). The verdict comes from granville_inequality_holds.
std::vector<BoundRecord> granville_check(std::uint64_t p, const std::vector<std::uint64_t> &u_values);

// The counting-theorem diagnostics at cutoff 2 <= N <= p.
std::vector<BoundRecord> theorem_ratio_report(const PrimeContext &ctx, std::uint64_t n,
                                              double alpha = default_alpha, Convention conv = {});

BoundRecord lemma_sols_ratio(const PrimeContext &ctx, std::uint64_t k);

// S_p and log I_p against the unconditional and conditional main terms.
std::vector<BoundRecord> sp_bound_report(const PrimeContext &ctx);

} // namespace fq
