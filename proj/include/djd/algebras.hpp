#ifndef DJD_ALGEBRAS_HPP
#define DJD_ALGEBRAS_HPP

#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/presentation.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace djd {

// Generator indices follow the PBW orders fixed for the three algebras:
// x < y < g < zeta < u < v,   f < h < e,   z < zp < q < p < t < xi.
namespace dj {
enum : int { X = 0, Y = 1, G = 2, ZETA = 3, U = 4, V = 5 };
}
namespace sl2 {
enum : int { F = 0, H = 1, E = 2 };
}
namespace a2s {
enum : int { Z = 0, ZP = 1, Q = 2, P = 3, T = 4, XI = 5 };
}

namespace detail {

inline Monomial mono(std::size_t width, std::initializer_list<std::pair<int, long>> exps) {
    return Monomial(width, exps);
}

inline Presentation build_dj() {
    using namespace dj;
    Presentation p("dj",
                   {{"x", false, -1},
                    {"y", false, -1},
                    {"g", true, 0},
                    {"zeta", false, 0},
                    {"u", false, 1},
                    {"v", false, 1}},
                   {V, U, ZETA, Y});
    const std::size_t n = 6;
    auto m = [&](std::initializer_list<std::pair<int, long>> e) { return mono(n, e); };

    // yx = xy - 1/2 x^2
    p.add_rule(Y, 1, X, 1, {{m({{X, 1}, {Y, 1}}), 1}, {m({{X, 2}}), frac(-1, 2)}});
    // gx = xg (both signs of g)
    p.add_rule(G, 1, X, 1, {{m({{X, 1}, {G, 1}}), 1}});
    p.add_rule(G, -1, X, 1, {{m({{X, 1}, {G, -1}}), 1}});
    // gy = yg + xg ;  derived g^-1 y = y g^-1 - x g^-1
    p.add_rule(G, 1, Y, 1, {{m({{Y, 1}, {G, 1}}), 1}, {m({{X, 1}, {G, 1}}), 1}});
    p.add_rule(G, -1, Y, 1, {{m({{Y, 1}, {G, -1}}), 1}, {m({{X, 1}, {G, -1}}), -1}});
    // zeta x = x zeta + x,  zeta y = y zeta + y,  zeta g = g zeta
    p.add_rule(ZETA, 1, X, 1, {{m({{X, 1}, {ZETA, 1}}), 1}, {m({{X, 1}}), 1}});
    p.add_rule(ZETA, 1, Y, 1, {{m({{Y, 1}, {ZETA, 1}}), 1}, {m({{Y, 1}}), 1}});
    p.add_rule(ZETA, 1, G, 1, {{m({{G, 1}, {ZETA, 1}}), 1}});
    p.add_rule(ZETA, 1, G, -1, {{m({{G, -1}, {ZETA, 1}}), 1}});
    // ux = xu,  uy = yu + 1 - g,  ug = gu,  u zeta = zeta u + u
    p.add_rule(U, 1, X, 1, {{m({{X, 1}, {U, 1}}), 1}});
    p.add_rule(U, 1, Y, 1, {{m({{Y, 1}, {U, 1}}), 1}, {m({}), 1}, {m({{G, 1}}), -1}});
    p.add_rule(U, 1, G, 1, {{m({{G, 1}, {U, 1}}), 1}});
    p.add_rule(U, 1, G, -1, {{m({{G, -1}, {U, 1}}), 1}});
    p.add_rule(U, 1, ZETA, 1, {{m({{ZETA, 1}, {U, 1}}), 1}, {m({{U, 1}}), 1}});
    // vx = xv + (1-g) + xu,  vy = yv - g zeta + yu,
    // vg = gv + gu ;  derived v g^-1 = g^-1 v - g^-1 u,
    // v zeta = zeta v + v,  vu = uv - 1/2 u^2
    p.add_rule(V, 1, X, 1,
               {{m({{X, 1}, {V, 1}}), 1},
                {m({}), 1},
                {m({{G, 1}}), -1},
                {m({{X, 1}, {U, 1}}), 1}});
    p.add_rule(V, 1, Y, 1,
               {{m({{Y, 1}, {V, 1}}), 1},
                {m({{G, 1}, {ZETA, 1}}), -1},
                {m({{Y, 1}, {U, 1}}), 1}});
    p.add_rule(V, 1, G, 1, {{m({{G, 1}, {V, 1}}), 1}, {m({{G, 1}, {U, 1}}), 1}});
    p.add_rule(V, 1, G, -1, {{m({{G, -1}, {V, 1}}), 1}, {m({{G, -1}, {U, 1}}), -1}});
    p.add_rule(V, 1, ZETA, 1, {{m({{ZETA, 1}, {V, 1}}), 1}, {m({{V, 1}}), 1}});
    p.add_rule(V, 1, U, 1, {{m({{U, 1}, {V, 1}}), 1}, {m({{U, 2}}), frac(-1, 2)}});

    p.finalize();
    return p;
}

inline Presentation build_sl2() {
    using namespace sl2;
    Presentation p("sl2", {{"f", false, -1}, {"h", false, 0}, {"e", false, 1}}, {E, H});
    auto m = [&](std::initializer_list<std::pair<int, long>> e) { return mono(3, e); };
    // hf = fh - 2f,  ef = fe + h,  eh = he - 2e   ([e,f]=h, [h,e]=2e, [h,f]=-2f)
    p.add_rule(H, 1, F, 1, {{m({{F, 1}, {H, 1}}), 1}, {m({{F, 1}}), -2}});
    p.add_rule(E, 1, F, 1, {{m({{F, 1}, {E, 1}}), 1}, {m({{H, 1}}), 1}});
    p.add_rule(E, 1, H, 1, {{m({{H, 1}, {E, 1}}), 1}, {m({{E, 1}}), -2}});
    p.finalize();
    return p;
}

inline Presentation build_a2s() {
    using namespace a2s;
    Presentation p("a2s",
                   {{"z", true, 0},
                    {"zp", false, 0},
                    {"q", true, 1},
                    {"p", false, -1},
                    {"t", true, 1},
                    {"xi", false, -1}},
                   {XI, P});
    auto m = [&](std::initializer_list<std::pair<int, long>> e) { return mono(6, e); };
    // Weyl pairs: pq = qp + 1 and xi t = t xi + 1, with the localized
    // inverse rules p q^-1 = q^-1 p - q^-2 and xi t^-1 = t^-1 xi - t^-2.
    p.add_rule(P, 1, Q, 1, {{m({{Q, 1}, {P, 1}}), 1}, {m({}), 1}});
    p.add_rule(P, 1, Q, -1, {{m({{Q, -1}, {P, 1}}), 1}, {m({{Q, -2}}), -1}});
    p.add_rule(XI, 1, T, 1, {{m({{T, 1}, {XI, 1}}), 1}, {m({}), 1}});
    p.add_rule(XI, 1, T, -1, {{m({{T, -1}, {XI, 1}}), 1}, {m({{T, -2}}), -1}});
    // Everything else commutes.
    p.add_commuting(ZP, Z);
    p.add_commuting(Q, Z);
    p.add_commuting(P, Z);
    p.add_commuting(T, Z);
    p.add_commuting(XI, Z);
    p.add_commuting(Q, ZP);
    p.add_commuting(P, ZP);
    p.add_commuting(T, ZP);
    p.add_commuting(XI, ZP);
    p.add_commuting(T, Q);
    p.add_commuting(XI, Q);
    p.add_commuting(T, P);
    p.add_commuting(XI, P);
    p.finalize();
    return p;
}

/// The Jordan plane in the opposite generator order y < x with rule
/// xy = yx + 1/2 x^2.  Used to convert PBW prefixes x^a y^b into the
/// Verma basis y^i x^j.
inline Presentation build_jordan_yx() {
    Presentation p("jordan-yx", {{"y", false, -1}, {"x", false, -1}}, {0});
    auto m = [&](std::initializer_list<std::pair<int, long>> e) { return mono(2, e); };
    p.add_rule(1, 1, 0, 1, {{m({{0, 1}, {1, 1}}), 1}, {m({{1, 2}}), frac(1, 2)}});
    p.finalize();
    return p;
}

} // namespace detail

inline const Presentation& dj_presentation() {
    static const Presentation p = detail::build_dj();
    return p;
}

inline const Presentation& sl2_presentation() {
    static const Presentation p = detail::build_sl2();
    return p;
}

inline const Presentation& a2s_presentation() {
    static const Presentation p = detail::build_a2s();
    return p;
}

inline const Presentation& jordan_yx_presentation() {
    static const Presentation p = detail::build_jordan_yx();
    return p;
}

// ---------------------------------------------------------------------------
// Defining relations as generator polynomials, usable under any algebra map.

/// coeff * product of signed letters (exp of either sign, read in order).
struct GenWord {
    Scalar coeff;
    Word letters;
};

/// Formal linear combination of generator words; a relation is one of these
/// expected to vanish under every admissible evaluation.
struct GenPoly {
    std::vector<GenWord> terms;
};

struct NamedRelation {
    std::string id;
    GenPoly poly;
};

/// Evaluate a generator polynomial in any target algebra: img(gen, sign)
/// supplies the image of each signed letter, `one` the target unit.
/// With reverse=true the letters of every word are multiplied in reversed
/// order (anti-algebra maps, e.g. the antipode).
template <class V, class Img>
V evaluate_genpoly(const GenPoly& poly, const V& one, Img&& img, bool reverse = false) {
    V acc = Scalar(0) * one;
    for (const GenWord& t : poly.terms) {
        V w = one;
        Word letters = t.letters;
        if (reverse) std::reverse(letters.begin(), letters.end());
        for (const Run& r : letters) {
            const int sgn = r.exp < 0 ? -1 : 1;
            const V base = img(r.gen, sgn);
            for (long k = 0; k < std::labs(r.exp); ++k) w = w * base;
        }
        acc = acc + t.coeff * w;
    }
    return acc;
}

namespace detail {
inline GenWord gw(Scalar c, Word w) { return GenWord{std::move(c), std::move(w)}; }
}

/// The defining relations of the double of the Jordan plane, written as
/// LHS - RHS.  15 two-generator relations plus the two g-invertibility
/// relations; every suite that speaks of "the defining relations" runs all
/// of these.
inline const std::vector<NamedRelation>& dj_relations() {
    using namespace dj;
    using detail::gw;
    static const std::vector<NamedRelation> rels = [] {
        std::vector<NamedRelation> r;
        auto add = [&](std::string id, std::vector<GenWord> terms) {
            r.push_back({std::move(id), GenPoly{std::move(terms)}});
        };
        add("g.gi", {gw(1, {{G, 1}, {G, -1}}), gw(-1, {})});
        add("gi.g", {gw(1, {{G, -1}, {G, 1}}), gw(-1, {})});
        add("zeta.g", {gw(1, {{ZETA, 1}, {G, 1}}), gw(-1, {{G, 1}, {ZETA, 1}})});
        add("g.x", {gw(1, {{G, 1}, {X, 1}}), gw(-1, {{X, 1}, {G, 1}})});
        add("g.y", {gw(1, {{G, 1}, {Y, 1}}), gw(-1, {{Y, 1}, {G, 1}}), gw(-1, {{X, 1}, {G, 1}})});
        add("zeta.y", {gw(1, {{ZETA, 1}, {Y, 1}}), gw(-1, {{Y, 1}, {ZETA, 1}}), gw(-1, {{Y, 1}})});
        add("zeta.x", {gw(1, {{ZETA, 1}, {X, 1}}), gw(-1, {{X, 1}, {ZETA, 1}}), gw(-1, {{X, 1}})});
        add("u.g", {gw(1, {{U, 1}, {G, 1}}), gw(-1, {{G, 1}, {U, 1}})});
        add("v.g", {gw(1, {{V, 1}, {G, 1}}), gw(-1, {{G, 1}, {V, 1}}), gw(-1, {{G, 1}, {U, 1}})});
        add("v.zeta",
            {gw(1, {{V, 1}, {ZETA, 1}}), gw(-1, {{ZETA, 1}, {V, 1}}), gw(-1, {{V, 1}})});
        add("u.zeta",
            {gw(1, {{U, 1}, {ZETA, 1}}), gw(-1, {{ZETA, 1}, {U, 1}}), gw(-1, {{U, 1}})});
        add("y.x",
            {gw(1, {{Y, 1}, {X, 1}}), gw(-1, {{X, 1}, {Y, 1}}), gw(frac(1, 2), {{X, 2}})});
        add("v.u",
            {gw(1, {{V, 1}, {U, 1}}), gw(-1, {{U, 1}, {V, 1}}), gw(frac(1, 2), {{U, 2}})});
        add("u.x", {gw(1, {{U, 1}, {X, 1}}), gw(-1, {{X, 1}, {U, 1}})});
        add("v.x", {gw(1, {{V, 1}, {X, 1}}), gw(-1, {{X, 1}, {V, 1}}), gw(-1, {}),
                    gw(1, {{G, 1}}), gw(-1, {{X, 1}, {U, 1}})});
        add("u.y", {gw(1, {{U, 1}, {Y, 1}}), gw(-1, {{Y, 1}, {U, 1}}), gw(-1, {}),
                    gw(1, {{G, 1}})});
        add("v.y", {gw(1, {{V, 1}, {Y, 1}}), gw(-1, {{Y, 1}, {V, 1}}),
                    gw(1, {{G, 1}, {ZETA, 1}}), gw(-1, {{Y, 1}, {U, 1}})});
        return r;
    }();
    return rels;
}

inline const std::vector<NamedRelation>& sl2_relations() {
    using namespace sl2;
    using detail::gw;
    static const std::vector<NamedRelation> rels = [] {
        std::vector<NamedRelation> r;
        auto add = [&](std::string id, std::vector<GenWord> terms) {
            r.push_back({std::move(id), GenPoly{std::move(terms)}});
        };
        add("e.f", {gw(1, {{E, 1}, {F, 1}}), gw(-1, {{F, 1}, {E, 1}}), gw(-1, {{H, 1}})});
        add("h.e", {gw(1, {{H, 1}, {E, 1}}), gw(-1, {{E, 1}, {H, 1}}), gw(-2, {{E, 1}})});
        add("h.f", {gw(1, {{H, 1}, {F, 1}}), gw(-1, {{F, 1}, {H, 1}}), gw(2, {{F, 1}})});
        return r;
    }();
    return rels;
}

inline const std::vector<NamedRelation>& a2s_relations() {
    using namespace a2s;
    using detail::gw;
    static const std::vector<NamedRelation> rels = [] {
        std::vector<NamedRelation> r;
        auto add = [&](std::string id, std::vector<GenWord> terms) {
            r.push_back({std::move(id), GenPoly{std::move(terms)}});
        };
        add("p.q", {gw(1, {{P, 1}, {Q, 1}}), gw(-1, {{Q, 1}, {P, 1}}), gw(-1, {})});
        add("xi.t", {gw(1, {{XI, 1}, {T, 1}}), gw(-1, {{T, 1}, {XI, 1}}), gw(-1, {})});
        const std::vector<std::pair<int, int>> commuting = {
            {ZP, Z}, {Q, Z}, {P, Z}, {T, Z}, {XI, Z}, {Q, ZP}, {P, ZP},
            {T, ZP}, {XI, ZP}, {T, Q}, {XI, Q}, {T, P}, {XI, P}};
        const char* names[] = {"z", "zp", "q", "p", "t", "xi"};
        for (auto [hi, lo] : commuting)
            add(std::string(names[hi]) + "." + names[lo],
                {gw(1, {{hi, 1}, {lo, 1}}), gw(-1, {{lo, 1}, {hi, 1}})});
        for (int g : {Z, Q, T}) {
            add(std::string(names[g]) + ".inv", {gw(1, {{g, 1}, {g, -1}}), gw(-1, {})});
            add(std::string(names[g]) + ".inv2", {gw(1, {{g, -1}, {g, 1}}), gw(-1, {})});
        }
        return r;
    }();
    return rels;
}

/// Evaluate a relation inside its own presentation (letters map to
/// themselves); the defining relations must all normalize to zero.
inline Element evaluate_in_own_algebra(const Presentation& p, const GenPoly& poly) {
    return evaluate_genpoly(poly, Element::one(p), [&](int g, int s) {
        return Element::generator(p, g, s);
    });
}

} // namespace djd

#endif // DJD_ALGEBRAS_HPP
