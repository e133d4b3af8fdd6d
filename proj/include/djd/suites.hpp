#ifndef DJD_SUITES_HPP
#define DJD_SUITES_HPP

#include "djd/algebras.hpp"
#include "djd/distinguished.hpp"
#include "djd/hopf.hpp"
#include "djd/report.hpp"
#include "djd/reps.hpp"
#include "djd/sl2_map.hpp"
#include "djd/weyl_map.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace djd {

/// Per-run parameters; negative values mean "use the suite's default".
struct SuiteOptions {
    long max_n = -1;
    long depth = -1;
    long samples = -1;
    std::uint64_t seed = 7;

    long max_n_or(long d) const { return max_n < 0 ? d : max_n; }
    long depth_or(long d) const { return depth < 0 ? d : depth; }
    long samples_or(long d) const { return samples < 0 ? d : samples; }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "relations",       "confluence",      "hopf",        "ore-tower",
        "comm-formulas",   "normal-central",  "center-relation",
        "center-independence", "pi",          "phi",         "w-modules",
        "verma",           "g1-nilpotency",   "ln",          "kn"};
    return names;
}

namespace detail {

inline Report suite_relations() {
    Report rep("relations");
    for (const auto& [p, rels, tag] :
         {std::tuple<const Presentation*, const std::vector<NamedRelation>*, const char*>(
              &dj_presentation(), &dj_relations(), "dj"),
          {&sl2_presentation(), &sl2_relations(), "sl2"},
          {&a2s_presentation(), &a2s_relations(), "a2s"}}) {
        for (const auto& rel : *rels)
            rep.add(std::string(tag) + "." + rel.id,
                    evaluate_in_own_algebra(*p, rel.poly).is_zero());
    }
    return rep;
}

inline Report suite_confluence() {
    Report rep("confluence");
    for (const auto& [p, tag] :
         {std::pair<const Presentation*, const char*>(&dj_presentation(), "dj"),
          {&sl2_presentation(), "sl2"},
          {&a2s_presentation(), "a2s"}}) {
        const ConfluenceReport r = check_local_confluence(*p);
        rep.add(std::string(tag) + ".triples", r.ok(),
                std::to_string(r.triples) + " triples, " + std::to_string(r.failures.size()) +
                    " failures");
    }
    return rep;
}

inline Report suite_normal_central() {
    using namespace dj;
    const Presentation& p = dj_presentation();
    const DistinguishedElements& d = distinguished();
    Report rep("normal-central");
    rep.add("normal.q", check_normal(d.q, gamma_q()));
    rep.add("normal.s", check_normal(d.s, gamma_q()));
    rep.add("central.z", is_central(d.z));
    rep.add("central.theta", is_central(d.theta));
    rep.add("central.omega", is_central(d.omega));
    rep.add("not-central.q", !is_central(d.q));
    rep.add("not-central.s", !is_central(d.s));
    rep.add("degree0.all",
            d.q.degree() == 0 && d.z.degree() == 0 && d.s.degree() == 0 &&
                d.theta.degree() == 0 && d.omega.degree() == 0);
    auto gen = [&](int g) { return Element::generator(p, g); };
    const auto orders =
        ad_nilpotency(gen(X), {gen(Y), gen(V), gen(U), gen(ZETA), gen(X), gen(G)}, 10);
    rep.add("adx.y", orders[0] == 2);
    rep.add("adx.v", orders[1] == 2);
    rep.add("adx.u", orders[2] == 1);
    rep.add("adx.zeta", orders[3] == 2);
    rep.add("adx.x", orders[4] == 1);
    rep.add("adx.g", orders[5] == 1);
    return rep;
}

inline Report suite_center_relation() {
    Report rep("center-relation");
    rep.add("z-theta-eq-omega2", center_relation_holds());
    return rep;
}

inline Report suite_pi(const SuiteOptions& o) {
    Report rep("pi");
    rep.merge(verify_pi());
    const DistinguishedElements& d = distinguished();
    rep.merge(pi_center_consistency(d.q, d.z, d.s, d.theta, d.omega));
    rep.merge(ln_pullback_check(o.max_n_or(8)));
    return rep;
}

inline Report suite_phi(const SuiteOptions& o) {
    Report rep("phi");
    rep.merge(verify_phi());
    rep.merge(center_map_check());
    rep.merge(degree0_consistency(o.samples_or(30), o.seed));
    return rep;
}

inline Report suite_verma(const SuiteOptions& o) {
    // Fixed (a, c) samples, the degenerate a = 1 always included.
    const std::vector<std::pair<Scalar, Scalar>> samples = {
        {Scalar(2), Scalar(0)},  {Scalar(3), Scalar(1)}, {Scalar(5), Scalar(-1)},
        {Scalar(-1), Scalar(2)}, {frac(1, 2), Scalar(7)}, {Scalar(1), Scalar(2)}};
    return verma_identity_suite(o.max_n_or(6), samples);
}

inline Report suite_g1(const SuiteOptions& o) {
    Report rep("g1-nilpotency");
    for (const Scalar& c : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(7)}) {
        const Report r = g_minus_1_nilpotency(c, o.depth_or(8));
        bool all = r.ok();
        rep.add("c" + scalar_str(c), all,
                std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()));
    }
    return rep;
}

inline Report suite_ln(const SuiteOptions& o) {
    Report rep("ln");
    for (long n = 0; n <= o.max_n_or(6); ++n) {
        const MatrixRep L = build_Ln(n);
        const std::string tag = "n" + std::to_string(n);
        rep.add("valid." + tag, validate_rep(L).ok());
        rep.add("simple." + tag, is_simple(L),
                "Burnside span " + std::to_string(L.dim * L.dim));
        const NilpotencyOrders ords = nilpotency_orders(L);
        rep.add("nilpotent.xu-g1." + tag, ords.x == 1 && ords.u == 1 && ords.g_minus_1 == 1);
        rep.add("trace-g." + tag,
                L.g.trace() == Scalar(static_cast<long>(L.dim)) &&
                    L.gi.trace() == Scalar(static_cast<long>(L.dim)));
    }
    return rep;
}

inline Report suite_kn(const SuiteOptions& o) {
    Report rep("kn");
    for (long n = 0; n <= o.max_n_or(4); ++n) {
        const Report r = kn_check(n, o.depth_or(6));
        rep.add("n" + std::to_string(n), r.ok(),
                std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()));
    }
    return rep;
}

} // namespace detail

/// Run one named verification suite.  Unknown names are an error (the CLI
/// maps that to a usage failure).
inline Report run_suite(const std::string& name, const SuiteOptions& o = {}) {
    if (name == "relations") return detail::suite_relations();
    if (name == "confluence") return detail::suite_confluence();
    if (name == "hopf") {
        Report r = verify_hopf(dj_hopf(), o.samples_or(20), o.seed);
        r.suite = "hopf";
        return r;
    }
    if (name == "ore-tower") return ore_tower_check();
    if (name == "comm-formulas") return formula_oracles(o.max_n_or(8), o.max_n_or(8), 4, 6);
    if (name == "normal-central") return detail::suite_normal_central();
    if (name == "center-relation") return detail::suite_center_relation();
    if (name == "center-independence") return center_independence();
    if (name == "pi") return detail::suite_pi(o);
    if (name == "phi") return detail::suite_phi(o);
    if (name == "w-modules")
        return w_identity_suite(o.max_n_or(6), {Scalar(1), Scalar(2), Scalar(-3)});
    if (name == "verma") return detail::suite_verma(o);
    if (name == "g1-nilpotency") return detail::suite_g1(o);
    if (name == "ln") return detail::suite_ln(o);
    if (name == "kn") return detail::suite_kn(o);
    throw Error("unknown suite '" + name + "'");
}

/// Run every suite in the canonical order; deterministic output for a fixed
/// seed (reports render sorted by check id, no timestamps).
inline std::vector<Report> run_all_suites(const SuiteOptions& o = {}) {
    std::vector<Report> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n, o));
    return out;
}

} // namespace djd

#endif // DJD_SUITES_HPP
