#ifndef DJD_HOPF_HPP
#define DJD_HOPF_HPP

#include "djd/algebras.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/report.hpp"
#include "djd/rng.hpp"
#include "djd/tensor.hpp"

#include <optional>
#include <vector>

namespace djd {

/// Hopf structure on a PBW presentation: generator values of the
/// comultiplication, counit and antipode, extended as (anti)algebra maps.
/// For invertible generators the values on the inverse letter are stored
/// explicitly (forced: group-likes).
struct HopfData {
    const Presentation* pres = nullptr;
    std::vector<TensorElement> delta_pos;       // per generator
    std::vector<TensorElement> delta_neg;       // inverse letters (unused slots = empty)
    std::vector<Scalar> eps_pos, eps_neg;       // counit on letters
    std::vector<Element> antipode_pos, antipode_neg;
    std::optional<int> pivot;                   // S^2(h) = pivot^-1 h pivot ... here: g
    const std::vector<NamedRelation>* relations = nullptr;

    const TensorElement& delta_letter(int g, int s) const {
        return s > 0 ? delta_pos[static_cast<std::size_t>(g)]
                     : delta_neg[static_cast<std::size_t>(g)];
    }
    Scalar eps_letter(int g, int s) const {
        return s > 0 ? eps_pos[static_cast<std::size_t>(g)]
                     : eps_neg[static_cast<std::size_t>(g)];
    }
    const Element& antipode_letter(int g, int s) const {
        return s > 0 ? antipode_pos[static_cast<std::size_t>(g)]
                     : antipode_neg[static_cast<std::size_t>(g)];
    }
};

namespace detail {

inline TensorElement primitive(const Presentation& p, int g) {
    const Element x = Element::generator(p, g);
    const Element e1 = Element::one(p);
    return TensorElement::pure({x, e1}) + TensorElement::pure({e1, x});
}

inline TensorElement grouplike(const Presentation& p, int g, int s) {
    const Element x = Element::generator(p, g, s);
    return TensorElement::pure({x, x});
}

/// Delta(g) = g(x)g, Delta(u), Delta(zeta) primitive, x, y (g,1)-skew
/// primitive, Delta(v) = v(x)1 + 1(x)v + zeta(x)u.  S is forced by the
/// antipode axiom: S(g)=g^-1, S(u)=-u, S(zeta)=-zeta, S(x)=-g^-1 x,
/// S(y)=-g^-1 y, S(v)=-v+zeta*u.
inline HopfData build_dj_hopf() {
    using namespace dj;
    const Presentation& p = dj_presentation();
    HopfData h;
    h.pres = &p;
    const Element e1 = Element::one(p);
    const Element eg = Element::generator(p, G);
    const Element egi = Element::generator(p, G, -1);
    auto gen = [&](int g) { return Element::generator(p, g); };

    h.delta_pos.assign(6, TensorElement(p, 2));
    h.delta_neg.assign(6, TensorElement(p, 2));
    h.delta_pos[X] = TensorElement::pure({gen(X), e1}) + TensorElement::pure({eg, gen(X)});
    h.delta_pos[Y] = TensorElement::pure({gen(Y), e1}) + TensorElement::pure({eg, gen(Y)});
    h.delta_pos[G] = grouplike(p, G, 1);
    h.delta_neg[G] = grouplike(p, G, -1);
    h.delta_pos[ZETA] = primitive(p, ZETA);
    h.delta_pos[U] = primitive(p, U);
    h.delta_pos[V] = TensorElement::pure({gen(V), e1}) + TensorElement::pure({e1, gen(V)}) +
                     TensorElement::pure({gen(ZETA), gen(U)});

    h.eps_pos.assign(6, Scalar(0));
    h.eps_neg.assign(6, Scalar(0));
    h.eps_pos[G] = 1;
    h.eps_neg[G] = 1;

    h.antipode_pos.assign(6, Element(p));
    h.antipode_neg.assign(6, Element(p));
    h.antipode_pos[X] = Scalar(-1) * (egi * gen(X));
    h.antipode_pos[Y] = Scalar(-1) * (egi * gen(Y));
    h.antipode_pos[G] = egi;
    h.antipode_neg[G] = eg;
    h.antipode_pos[ZETA] = Scalar(-1) * gen(ZETA);
    h.antipode_pos[U] = Scalar(-1) * gen(U);
    h.antipode_pos[V] = Scalar(-1) * gen(V) + gen(ZETA) * gen(U);

    h.pivot = G;
    h.relations = &dj_relations();
    return h;
}

/// U(sl2): e, f, h primitive; S = -id on generators.
inline HopfData build_sl2_hopf() {
    using namespace sl2;
    const Presentation& p = sl2_presentation();
    HopfData h;
    h.pres = &p;
    h.delta_pos.assign(3, TensorElement(p, 2));
    h.delta_neg.assign(3, TensorElement(p, 2));
    for (int g : {F, H, E}) h.delta_pos[static_cast<std::size_t>(g)] = primitive(p, g);
    h.eps_pos.assign(3, Scalar(0));
    h.eps_neg.assign(3, Scalar(0));
    h.antipode_pos.assign(3, Element(p));
    h.antipode_neg.assign(3, Element(p));
    for (int g : {F, H, E})
        h.antipode_pos[static_cast<std::size_t>(g)] = Scalar(-1) * Element::generator(p, g);
    h.relations = &sl2_relations();
    return h;
}

} // namespace detail

inline const HopfData& dj_hopf() {
    static const HopfData h = detail::build_dj_hopf();
    return h;
}

inline const HopfData& sl2_hopf() {
    static const HopfData h = detail::build_sl2_hopf();
    return h;
}

/// Algebra-map extension of Delta to any element.
inline TensorElement coproduct(const HopfData& h, const Element& a) {
    const Presentation& p = *h.pres;
    TensorElement out(p, 2);
    for (const auto& [m, c] : a.terms()) {
        TensorElement acc = TensorElement::one(p, 2);
        for (const Run& run : word_of(m)) {
            const int sgn = run.exp < 0 ? -1 : 1;
            const TensorElement& f = h.delta_letter(run.gen, sgn);
            for (long k = 0; k < std::labs(run.exp); ++k) acc = acc * f;
        }
        out += c * acc;
    }
    return out;
}

inline TensorElement coproduct(const Element& a) { return coproduct(dj_hopf(), a); }

/// Algebra map to the base field.
inline Scalar counit(const HopfData& h, const Element& a) {
    Scalar out = 0;
    for (const auto& [m, c] : a.terms()) {
        Scalar w = c;
        for (const Run& run : word_of(m)) {
            const int sgn = run.exp < 0 ? -1 : 1;
            w *= spow(h.eps_letter(run.gen, sgn), std::labs(run.exp));
            if (w == 0) break;
        }
        out += w;
    }
    return out;
}

inline Scalar counit(const Element& a) { return counit(dj_hopf(), a); }

/// Anti-algebra-map extension of S.
inline Element antipode(const HopfData& h, const Element& a) {
    const Presentation& p = *h.pres;
    Element out(p);
    for (const auto& [m, c] : a.terms()) {
        Element acc = Element::one(p);
        const Word w = word_of(m);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const int sgn = it->exp < 0 ? -1 : 1;
            const Element& img = h.antipode_letter(it->gen, sgn);
            for (long k = 0; k < std::labs(it->exp); ++k) acc = acc * img;
        }
        out += c * acc;
    }
    return out;
}

inline Element antipode(const Element& a) { return antipode(dj_hopf(), a); }

/// Apply Delta to one leg of a tensor (arity grows by one).
inline TensorElement coproduct_on_leg(const HopfData& h, const TensorElement& t,
                                      std::size_t leg) {
    const Presentation& p = *h.pres;
    TensorElement out(p, t.legs() + 1);
    for (const auto& [key, c] : t.terms()) {
        const TensorElement dm = coproduct(h, Element::monomial(p, key[leg]));
        for (const auto& [dkey, dc] : dm.terms()) {
            TensorElement::Key nk;
            nk.reserve(key.size() + 1);
            for (std::size_t l = 0; l < key.size(); ++l) {
                if (l == leg) {
                    nk.push_back(dkey[0]);
                    nk.push_back(dkey[1]);
                } else {
                    nk.push_back(key[l]);
                }
            }
            out.add_term(nk, c * dc);
        }
    }
    return out;
}

/// (eps (x) id) or (id (x) eps) collapse of a 2-leg tensor.
inline Element counit_on_leg(const HopfData& h, const TensorElement& t, std::size_t leg) {
    const Presentation& p = *h.pres;
    Element out(p);
    for (const auto& [key, c] : t.terms()) {
        const Scalar e = counit(h, Element::monomial(p, key[leg]));
        if (e == 0) continue;
        out += (c * e) * Element::monomial(p, key[1 - leg]);
    }
    return out;
}

/// m(S (x) id)Delta(a) when leg == 0, m(id (x) S)Delta(a) when leg == 1.
inline Element antipode_convolution(const HopfData& h, const Element& a, std::size_t leg) {
    const Presentation& p = *h.pres;
    const TensorElement d = coproduct(h, a);
    Element out(p);
    for (const auto& [key, c] : d.terms()) {
        const Element left = leg == 0 ? antipode(h, Element::monomial(p, key[0]))
                                      : Element::monomial(p, key[0]);
        const Element right = leg == 0 ? Element::monomial(p, key[1])
                                       : antipode(h, Element::monomial(p, key[1]));
        out += c * (left * right);
    }
    return out;
}

/// Full Hopf-axiom verification: well-definedness of Delta/eps/S on every
/// defining relation, coassociativity, counit and antipode axioms, and (when
/// a pivot is set) S^2(h) = g^-1 h g, on all generators plus `samples`
/// seeded random elements.
inline Report verify_hopf(const HopfData& h, long samples = 20, std::uint64_t seed = 7) {
    const Presentation& p = *h.pres;
    Report rep("hopf." + p.name());

    const TensorElement tone = TensorElement::one(p, 2);
    for (const auto& rel : *h.relations) {
        const TensorElement d = evaluate_genpoly(
            rel.poly, tone, [&](int g, int s) { return h.delta_letter(g, s); });
        rep.add("delta.rel." + rel.id, d.is_zero());
        const Scalar e = evaluate_genpoly(rel.poly, Scalar(1),
                                          [&](int g, int s) { return h.eps_letter(g, s); });
        rep.add("eps.rel." + rel.id, e == 0);
        const Element s = evaluate_genpoly(
            rel.poly, Element::one(p),
            [&](int g, int sg) { return h.antipode_letter(g, sg); }, /*reverse=*/true);
        rep.add("antipode.rel." + rel.id, s.is_zero());
    }

    std::vector<std::pair<std::string, Element>> subjects;
    for (const Run& l : letters_of(p))
        subjects.emplace_back("gen." + p.gen(static_cast<std::size_t>(l.gen)).name +
                                  (l.exp < 0 ? "_inv" : ""),
                              Element::generator(p, l.gen, l.exp));
    SplitMix64 rng(seed);
    for (long i = 0; i < samples; ++i)
        subjects.emplace_back("sample." + std::to_string(i), random_element(p, rng));

    for (const auto& [name, a] : subjects) {
        const TensorElement d = coproduct(h, a);
        rep.add("coassoc." + name, coproduct_on_leg(h, d, 0) == coproduct_on_leg(h, d, 1));
        rep.add("counit_left." + name, counit_on_leg(h, d, 0) == a);
        rep.add("counit_right." + name, counit_on_leg(h, d, 1) == a);
        const Element target = Element::scalar(p, counit(h, a));
        rep.add("antipode_left." + name, antipode_convolution(h, a, 0) == target);
        rep.add("antipode_right." + name, antipode_convolution(h, a, 1) == target);
        if (h.pivot) {
            const Element gi = Element::generator(p, *h.pivot, -1);
            const Element g = Element::generator(p, *h.pivot, 1);
            rep.add("s_squared." + name, antipode(h, antipode(h, a)) == gi * a * g);
        }
    }
    return rep;
}

} // namespace djd

#endif // DJD_HOPF_HPP
