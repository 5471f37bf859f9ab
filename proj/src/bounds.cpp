#include "fq/bounds.hpp"

#include <cmath>

#include <gmpxx.h>

#include "fq/error.hpp"
#include "fq/ihara.hpp"
#include "fq/index.hpp"

namespace fq {

namespace {

constexpr double corollary_exponent = 211.0 / 463.0;

BoundRecord diagnostic(std::uint64_t p, BoundName name, double lhs, double rhs)
{
    BoundRecord r;
    r.p = p;
    r.name = name;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = lhs / rhs;
    r.verdict = Verdict::diagnostic_only;
    return r;
}

} // namespace

const char *to_string(BoundName name)
{
    switch (name) {
    case BoundName::granville: return "granville";
    case BoundName::thm_Qp: return "thm_Qp";
    case BoundName::thm_Rp: return "thm_Rp";
    case BoundName::cor_Qp: return "cor_Qp";
    case BoundName::cor_Rp: return "cor_Rp";
    case BoundName::lemma_sols: return "lemma_sols";
    case BoundName::cor_sp2: return "cor_sp2";
    case BoundName::thm_ip: return "thm_ip";
    case BoundName::grh_sp: return "grh_sp";
    case BoundName::grh_ip: return "grh_ip";
    }
    return "?";
}

const char *to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::diagnostic_only: return "diagnostic-only";
    }
    return "?";
}

std::uint64_t integer_root(std::uint64_t p, std::uint64_t u)
{
    if (u == 0) throw DomainError("u must be >= 1");
    const mpz_class target = static_cast<unsigned long>(p);
    mpz_class root;
    mpz_root(root.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(u));
    return root.get_ui();
}

bool granville_inequality_holds(std::uint64_t count, std::uint64_t u, std::uint64_t p)
{
    mpz_class left, right;
    mpz_ui_pow_ui(left.get_mpz_t(), count, 2 * u);
    mpz_ui_pow_ui(right.get_mpz_t(), u, 2 * u);
    right *= static_cast<unsigned long>(p);
    return left <= right;
}

std::vector<BoundRecord> granville_check(std::uint64_t p, const std::vector<std::uint64_t> &u_values)
{
    const PrimeContext ctx(p);
    std::vector<BoundRecord> out;
    for (const std::uint64_t u : u_values) {
        const std::uint64_t n = integer_root(p, u);
        const double rhs = static_cast<double>(u) * std::pow(static_cast<double>(p), 1.0 / (2.0 * u));
        for (const bool include : {true, false}) {
            const std::uint64_t lhs = n == 0 ? 0 : enumerate_R(ctx, n, Convention{include}).cardinality;
            BoundRecord r;
            r.p = p;
            r.name = BoundName::granville;
            r.variant = include ? "incl_p" : "excl_p";
            r.n = n;
            r.u = static_cast<double>(u);
            r.lhs = static_cast<double>(lhs);
            r.rhs = rhs;
            r.ratio = r.lhs / rhs;
            r.verdict = granville_inequality_holds(lhs, u, p) ? Verdict::holds : Verdict::violated;
            out.push_back(r);
        }
    }
    return out;
}

std::vector<BoundRecord> theorem_ratio_report(const PrimeContext &ctx, std::uint64_t n, double alpha,
                                              Convention conv)
{
    const std::uint64_t p = ctx.p();
    if (n < 2 || n > p) {
        throw DomainError("theorem ratios need 2 <= N <= p, got N = " + std::to_string(n));
    }
    const double log_p = std::log(static_cast<double>(p));
    const double u = log_p / std::log(static_cast<double>(n));
    const auto s = static_cast<std::uint64_t>(std::ceil(alpha * u));
    const bool alpha_ok = alpha > alpha_threshold;

    const auto q_count = static_cast<double>(enumerate_Q(ctx, n, conv).cardinality);
    const auto r_count = static_cast<double>(enumerate_R(ctx, n, conv).cardinality);
    const double nd = static_cast<double>(n);
    const double main = u * nd * std::pow(static_cast<double>(p), -1.0 / static_cast<double>(s));
    const double cor = std::pow(nd, corollary_exponent);

    std::vector<BoundRecord> out = {
        diagnostic(p, BoundName::thm_Qp, q_count, main),
        diagnostic(p, BoundName::thm_Rp, r_count, main),
        diagnostic(p, BoundName::cor_Qp, q_count, cor),
        diagnostic(p, BoundName::cor_Rp, r_count, cor * log_p),
    };
    for (BoundRecord &r : out) {
        r.n = n;
        r.u = u;
        r.alpha = alpha;
        r.s = s;
        r.hypothesis_met = alpha_ok;
        if (!alpha_ok) r.note = "alpha not above 463/252";
    }
    return out;
}

BoundRecord lemma_sols_ratio(const PrimeContext &ctx, std::uint64_t k)
{
    const std::uint64_t p = ctx.p();
    BoundRecord r = diagnostic(p, BoundName::lemma_sols, static_cast<double>(count_T(ctx, k)),
                               static_cast<double>(k) / static_cast<double>(p));
    r.k = k;
    r.alpha = alpha_threshold;
    r.hypothesis_met = std::log(static_cast<double>(k)) >= alpha_threshold * std::log(static_cast<double>(p));
    if (!r.hypothesis_met) r.note = "K below p^(463/252)";
    return r;
}

std::vector<BoundRecord> sp_bound_report(const PrimeContext &ctx)
{
    const std::uint64_t p = ctx.p();
    const IharaReport ihara = ihara_full(ctx);
    const IndexReport index = log_index(ctx);
    const double p2 = static_cast<double>(p) * static_cast<double>(p);
    const double log_log_p = std::log(std::log(static_cast<double>(p)));

    std::vector<BoundRecord> out = {
        diagnostic(p, BoundName::cor_sp2, ihara.s_p_full, alpha_threshold * log_log_p),
        diagnostic(p, BoundName::grh_sp, ihara.s_p_full, 2.0 * log_log_p + 2.0),
        diagnostic(p, BoundName::thm_ip, index.log_index, 463.0 / 504.0 * p2 * log_log_p),
        diagnostic(p, BoundName::grh_ip, index.log_index, p2 * log_log_p),
    };
    for (BoundRecord &r : out) {
        r.n = p;
        r.hypothesis_met = log_log_p >= 1.0;
        if (!r.hypothesis_met) r.note = "log log p < 1";
    }
    return out;
}

} // namespace fq
