#include "fq/commands.hpp"

#include <cmath>

#include "fq/bounds.hpp"
#include "fq/divisor.hpp"
#include "fq/error.hpp"
#include "fq/fermatq.hpp"
#include "fq/ihara.hpp"
#include "fq/index.hpp"
#include "fq/primes.hpp"

namespace fq::cli {

namespace {

using json = Json;
using KeyMap = std::map<std::string, std::string>;

std::string flag(bool b) { return b ? "true" : "false"; }

std::uint64_t require(const std::optional<std::uint64_t> &v, const char *name)
{
    if (!v) throw UsageError(std::string("--") + name + " is required");
    return *v;
}

std::string opt_string(const std::optional<std::uint64_t> &v, const char *fallback)
{
    return v ? std::to_string(*v) : fallback;
}

// ---- quotient

KeyMap quotient_key(const Params &pr)
{
    return {{"n", std::to_string(require(pr.n, "n"))}, {"brute", flag(pr.brute)}};
}

json quotient_compute(const PrimeContext &ctx, const Params &pr)
{
    const std::uint64_t u = require(pr.n, "n");
    std::uint64_t value = 0;
    if (pr.brute) {
        value = fermat_quotient_big(static_cast<unsigned long>(ctx.p()), static_cast<unsigned long>(u)).get_ui();
    } else {
        value = fermat_quotient(ctx, u).value;
    }
    return {{"p", ctx.p()}, {"u", u}, {"value", value}};
}

std::vector<Row> quotient_rows(const json &r)
{
    return {Row{{"p", r["p"]}, {"u", r["u"]}, {"value", r["value"]}}};
}

// ---- ell

KeyMap ell_key(const Params &pr) { return {{"brute", flag(pr.brute)}}; }

json ell_compute(const PrimeContext &ctx, const Params &pr)
{
    std::uint64_t ell = 0;
    if (pr.brute) {
        const mpz_class p = static_cast<unsigned long>(ctx.p());
        for (std::uint64_t u = 2; u <= ctx.p_squared() && ell == 0; ++u) {
            if (is_prime_u64(u) && fermat_quotient_big(p, static_cast<unsigned long>(u)) != 0) ell = u;
        }
        if (ell == 0) throw SearchExhausted("no witness below p^2");
    } else {
        ell = smallest_nonvanishing(ctx);
    }
    return {{"p", ctx.p()}, {"ell", ell}};
}

std::vector<Row> ell_rows(const json &r) { return {Row{{"p", r["p"]}, {"ell", r["ell"]}}}; }

// ---- setq / setr

KeyMap set_key(const Params &pr)
{
    return {{"n", opt_string(pr.n, "p")}, {"include_p_term", flag(pr.include_p_term)}, {"brute", flag(pr.brute)}};
}

json vanishing_json(const VanishingReport &v)
{
    return {{"p", v.p},
            {"N", v.bound},
            {"set_kind", to_string(v.kind)},
            {"members", v.members},
            {"cardinality", v.cardinality},
            {"includes_multiples_of_p", v.includes_multiples_of_p}};
}

json setq_compute(const PrimeContext &ctx, const Params &pr)
{
    const std::uint64_t n = pr.n.value_or(ctx.p());
    return vanishing_json(enumerate_Q(ctx, n, Convention{pr.include_p_term}, pr.brute));
}

json setr_compute(const PrimeContext &ctx, const Params &pr)
{
    const std::uint64_t n = pr.n.value_or(ctx.p());
    const Convention conv{pr.include_p_term};
    if (!pr.brute) return vanishing_json(enumerate_R(ctx, n, conv));
    // Definitional route: primes of the brute-force Q_p(N).
    VanishingReport q = enumerate_Q(ctx, n, conv, true);
    VanishingReport r{q.p, q.bound, SetKind::R, {}, 0, q.includes_multiples_of_p};
    for (const std::uint64_t m : q.members) {
        if (is_prime_u64(m)) r.members.push_back(m);
    }
    r.cardinality = r.members.size();
    return vanishing_json(r);
}

std::vector<Row> set_rows(const json &r)
{
    return {Row{{"p", r["p"]},
                {"N", r["N"]},
                {"cardinality", r["cardinality"]},
                {"includes_multiples_of_p", r["includes_multiples_of_p"]},
                {"members", r["members"]}}};
}

// ---- countt

KeyMap countt_key(const Params &pr) { return {{"k", opt_string(pr.k, "p^2")}, {"brute", flag(pr.brute)}}; }

json countt_compute(const PrimeContext &ctx, const Params &pr)
{
    const std::uint64_t k = pr.k.value_or(ctx.p_squared());
    const std::uint64_t count = pr.brute ? count_T_brute(ctx, k) : count_T(ctx, k);
    return {{"p", ctx.p()}, {"K", k}, {"count", count}};
}

std::vector<Row> countt_rows(const json &r) { return {Row{{"p", r["p"]}, {"K", r["K"]}, {"count", r["count"]}}}; }

// ---- ihara

KeyMap ihara_key(const Params &pr)
{
    return {{"n", opt_string(pr.n, "p")}, {"include_p_term", flag(pr.include_p_term)}, {"brute", flag(pr.brute)}};
}

json ihara_compute(const PrimeContext &ctx, const Params &pr)
{
    // A cutoff above p is clamped so one N can drive a whole range.
    const std::uint64_t n = std::min(pr.n.value_or(ctx.p()), ctx.p());
    const Convention conv{pr.include_p_term};
    IharaReport rep = tail_report(ctx, n, conv);
    if (pr.brute) {
        rep.s_p_partial = ihara_partial_brute(ctx, n, conv);
        rep.s_p_full = ihara_partial_brute(ctx, ctx.p(), conv);
        rep.tail = rep.s_p_full - rep.s_p_partial;
    }
    json terms = json::array();
    for (const IharaTerm &t : rep.contributing_terms) terms.push_back({t.n, t.lambda, t.weight});
    return {{"p", rep.p},
            {"N", rep.n},
            {"s_p_partial", rep.s_p_partial},
            {"s_p_full", rep.s_p_full},
            {"tail", rep.tail},
            {"mertens_at_N", rep.mertens_at_n},
            {"grh_reference", rep.grh_reference},
            {"unconditional_reference", rep.unconditional_reference},
            {"tail_ratio", rep.tail_ratio},
            {"includes_p_term", rep.includes_p_term},
            {"contributing_terms", terms}};
}

std::vector<Row> ihara_rows(const json &r)
{
    Row row;
    for (const char *c : {"p", "N", "s_p_partial", "s_p_full", "tail", "mertens_at_N", "grh_reference",
                          "unconditional_reference"}) {
        row[c] = r[c];
    }
    return {row};
}

// ---- index

KeyMap index_key(const Params &) { return {}; }

json index_compute(const PrimeContext &ctx, const Params &)
{
    const IndexReport rep = log_index(ctx);
    json terms = json::array();
    for (const IndexTerm &t : rep.terms) terms.push_back({t.n, t.alpha, t.lambda});
    return {{"p", rep.p},
            {"log_index", rep.log_index},
            {"half_p2_sp", rep.half_p2_sp},
            {"unconditional_bound_main", rep.unconditional_bound_main},
            {"conditional_reference", rep.conditional_reference},
            {"terms", terms}};
}

std::vector<Row> index_rows(const json &r)
{
    Row row;
    for (const char *c :
         {"p", "log_index", "half_p2_sp", "unconditional_bound_main", "conditional_reference"}) {
        row[c] = r[c];
    }
    return {row};
}

// ---- granville / ratios

const std::vector<std::string> bound_columns = {"p",  "bound_name", "variant", "N",     "K",
                                                "u",  "alpha",      "s",       "lhs",   "rhs",
                                                "ratio", "verdict", "hypothesis_met", "note"};

json bound_json(const std::vector<BoundRecord> &records)
{
    json out = json::array();
    for (const BoundRecord &b : records) {
        out.push_back({{"p", b.p},
                       {"bound_name", to_string(b.name)},
                       {"variant", b.variant},
                       {"N", b.n},
                       {"K", b.k},
                       {"u", b.u},
                       {"alpha", b.alpha},
                       {"s", b.s},
                       {"lhs", b.lhs},
                       {"rhs", b.rhs},
                       {"ratio", b.ratio},
                       {"verdict", to_string(b.verdict)},
                       {"hypothesis_met", b.hypothesis_met},
                       {"note", b.note}});
    }
    return out;
}

std::vector<Row> bound_rows(const json &r)
{
    std::vector<Row> rows;
    for (const json &rec : r) {
        Row row;
        for (const std::string &c : bound_columns) row[c] = rec[c];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::uint64_t> u_or_default(const Params &pr)
{
    return pr.u.empty() ? std::vector<std::uint64_t>{1, 2, 3} : pr.u;
}

KeyMap granville_key(const Params &pr)
{
    std::string list;
    for (const std::uint64_t u : u_or_default(pr)) list += (list.empty() ? "" : ",") + std::to_string(u);
    return {{"u", list}};
}

json granville_compute(const PrimeContext &ctx, const Params &pr)
{
    return bound_json(granville_check(ctx.p(), u_or_default(pr)));
}

std::string real_key(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

KeyMap ratios_key(const Params &pr)
{
    return {{"n", opt_string(pr.n, "p")},
            {"k", opt_string(pr.k, "p^2")},
            {"alpha", real_key(pr.alpha.value_or(default_alpha))},
            {"include_p_term", flag(pr.include_p_term)}};
}

json ratios_compute(const PrimeContext &ctx, const Params &pr)
{
    const std::uint64_t n = std::min(pr.n.value_or(ctx.p()), ctx.p());
    std::vector<BoundRecord> all =
        theorem_ratio_report(ctx, n, pr.alpha.value_or(default_alpha), Convention{pr.include_p_term});
    all.push_back(lemma_sols_ratio(ctx, pr.k.value_or(ctx.p_squared())));
    for (const BoundRecord &b : sp_bound_report(ctx)) all.push_back(b);
    return bound_json(all);
}

const std::vector<PerPrimeCommand> &registry()
{
    static const std::vector<PerPrimeCommand> commands = {
        {"quotient", {"p", "u", "value"}, quotient_key, quotient_compute, quotient_rows},
        {"ell", {"p", "ell"}, ell_key, ell_compute, ell_rows},
        {"setq", {"p", "N", "cardinality", "includes_multiples_of_p", "members"}, set_key, setq_compute, set_rows},
        {"setr", {"p", "N", "cardinality", "includes_multiples_of_p", "members"}, set_key, setr_compute, set_rows},
        {"countt", {"p", "K", "count"}, countt_key, countt_compute, countt_rows},
        {"ihara",
         {"p", "N", "s_p_partial", "s_p_full", "tail", "mertens_at_N", "grh_reference", "unconditional_reference"},
         ihara_key,
         ihara_compute,
         ihara_rows},
        {"index",
         {"p", "log_index", "half_p2_sp", "unconditional_bound_main", "conditional_reference"},
         index_key,
         index_compute,
         index_rows},
        {"granville", bound_columns, granville_key, granville_compute, bound_rows},
        {"ratios", bound_columns, ratios_key, ratios_compute, bound_rows},
    };
    return commands;
}

} // namespace

const PerPrimeCommand *find_command(const std::string &name)
{
    for (const PerPrimeCommand &c : registry()) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::vector<std::string> per_prime_command_names()
{
    std::vector<std::string> names;
    for (const PerPrimeCommand &c : registry()) names.push_back(c.name);
    return names;
}

bool has_granville_violation(const std::vector<Row> &rows)
{
    for (const Row &r : rows) {
        if (r.contains("bound_name") && r["bound_name"] == "granville" && r["variant"] == "excl_p" &&
            r["verdict"] == "violated") {
            return true;
        }
    }
    return false;
}

std::vector<std::string> taus_columns() { return {"n", "s", "tau", "bound_main_term", "exponent"}; }

Row taus_row(std::uint64_t n, std::uint64_t s)
{
    const TauRecord rec = tau_bound_report(n, s);
    return Row{{"n", n},
               {"s", s},
               {"tau", rec.tau.get_str()},
               {"bound_main_term", rec.bound_main_term},
               {"exponent", rec.exponent}};
}

std::vector<std::string> mertens_columns() { return {"N", "mertens_sum", "log_N", "difference"}; }

Row mertens_row(std::uint64_t n)
{
    const double m = mertens_sum(n);
    const double log_n = std::log(static_cast<double>(n));
    return Row{{"N", n}, {"mertens_sum", m}, {"log_N", log_n}, {"difference", m - log_n}};
}

} // namespace fq::cli
