#ifndef DJD_SL2_MAP_HPP
#define DJD_SL2_MAP_HPP

#include "djd/algebras.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/hopf.hpp"
#include "djd/report.hpp"
#include "djd/reps.hpp"
#include "djd/tensor.hpp"

#include <string>
#include <vector>

namespace djd {

/// Image of a signed dj letter under the quotient map
/// pi: D -> U(sl2),  pi(v) = e/4, pi(y) = 2f, pi(zeta) = -h/2,
/// pi(x) = pi(u) = 0, pi(g^{+-1}) = 1.
inline Element pi_letter(int gen, int sign) {
    using namespace djd::sl2;
    const Presentation& s = sl2_presentation();
    switch (gen) {
        case dj::X:
        case dj::U: return Element(s);
        case dj::Y: return Scalar(2) * Element::generator(s, F);
        case dj::ZETA: return frac(-1, 2) * Element::generator(s, H);
        case dj::V: return frac(1, 4) * Element::generator(s, E);
        case dj::G: return Element::one(s);
    }
    (void)sign;
    throw Error("pi: unknown generator");
}

/// pi of a PBW monomial is 2^r (-1/2)^k (1/4)^j f^r h^k e^j when the x- and
/// u-exponents vanish (already normal in the f < h < e order), zero
/// otherwise.
inline Element pi(const Element& a) {
    using namespace djd;
    const Presentation& s = sl2_presentation();
    Element out(s);
    for (const auto& [m, c] : a.terms()) {
        if (m.exp(dj::X) > 0 || m.exp(dj::U) > 0) continue;
        Monomial im(3);
        im.set_exp(sl2::F, m.exp(dj::Y));
        im.set_exp(sl2::H, m.exp(dj::ZETA));
        im.set_exp(sl2::E, m.exp(dj::V));
        const Scalar coeff = c * spow(Scalar(2), m.exp(dj::Y)) *
                             spow(frac(-1, 2), m.exp(dj::ZETA)) *
                             spow(frac(1, 4), m.exp(dj::V));
        out += Element::monomial(s, im, coeff);
    }
    return out;
}

/// Apply pi to both legs of a tensor over dj.
inline TensorElement pi_tensor(const TensorElement& t) {
    const Presentation& p = dj_presentation();
    const Presentation& s = sl2_presentation();
    TensorElement out(s, t.legs());
    for (const auto& [key, c] : t.terms()) {
        std::vector<Element> legs;
        legs.reserve(key.size());
        for (const Monomial& m : key) legs.push_back(pi(Element::monomial(p, m)));
        out += c * TensorElement::pure(legs);
    }
    return out;
}

/// Well-definedness and Hopf compatibility of pi:
/// (i) every defining relation of D maps to 0 in U(sl2);
/// (ii) pi kills the augmentation ideal generators x, u, g-1 of O;
/// (iii) (pi (x) pi) Delta_D = Delta_sl2 pi on every generator letter.
inline Report verify_pi() {
    const Presentation& p = dj_presentation();
    const Presentation& s = sl2_presentation();
    Report rep("pi");

    const Element one = Element::one(s);
    for (const auto& rel : dj_relations()) {
        const Element im = evaluate_genpoly(rel.poly, one,
                                            [&](int g, int sg) { return pi_letter(g, sg); });
        rep.add("rel." + rel.id, im.is_zero());
    }

    rep.add("kills.x", pi(Element::generator(p, dj::X)).is_zero());
    rep.add("kills.u", pi(Element::generator(p, dj::U)).is_zero());
    rep.add("kills.g-1", pi(Element::generator(p, dj::G) - Element::one(p)).is_zero());

    // The kernel side of the exact sequence: the subalgebra on x, u, g^{+-1}
    // is commutative.
    bool o_comm = true;
    for (int a : {dj::X, dj::U, dj::G})
        for (int b : {dj::X, dj::U, dj::G})
            for (int sa : p.signs(a))
                for (int sb : p.signs(b))
                    if (!commutator(Element::generator(p, a, sa),
                                    Element::generator(p, b, sb))
                             .is_zero())
                        o_comm = false;
    rep.add("O-commutative", o_comm);
    rep.add("surjective.generators",
            pi(Scalar(4) * Element::generator(p, dj::V)) == Element::generator(s, sl2::E) &&
                pi(frac(1, 2) * Element::generator(p, dj::Y)) == Element::generator(s, sl2::F) &&
                pi(Scalar(-2) * Element::generator(p, dj::ZETA)) ==
                    Element::generator(s, sl2::H));

    for (const Run& l : letters_of(p)) {
        const TensorElement lhs = pi_tensor(dj_hopf().delta_letter(l.gen, l.exp));
        const TensorElement rhs = coproduct(sl2_hopf(), pi_letter(l.gen, l.exp));
        rep.add("delta-compat." +
                    p.gen(static_cast<std::size_t>(l.gen)).name + (l.exp < 0 ? "_inv" : ""),
                lhs == rhs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Pullback of the highest-weight modules along pi.

/// (n+1)-dimensional highest-weight sl2 module in the basis
/// t_i = (2f)^i t_0, computed by the sl2 engine acting on the truncated
/// highest-weight space: e kills t_0, h weights by n, f^a t_0 = 0 for a > n.
struct Sl2Matrices {
    std::size_t dim = 0;
    MatQ e, f, h;
};

inline Sl2Matrices sl2_highest_weight_matrices(long n) {
    using namespace djd::sl2;
    const Presentation& s = sl2_presentation();
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    Sl2Matrices out;
    out.dim = d;
    out.e = MatQ(d, d);
    out.f = MatQ(d, d);
    out.h = MatQ(d, d);

    // action of a generator on t_i: normalize gen * f^i, evaluate at the
    // highest-weight vacuum, rescale between the f^i and (2f)^i bases.
    auto fill = [&](int gen, MatQ& m) {
        for (long i = 0; i <= n; ++i) {
            const TermMap prod =
                normalize_word(s, Word{{gen, 1}, {F, i}}, spow(Scalar(2), i));
            for (const auto& [mon, c] : prod) {
                if (mon.exp(E) > 0) continue;    // e kills the vacuum
                const long a = mon.exp(F);
                if (a > n) continue;             // quotient to the simple module
                const Scalar val = c * spow(Scalar(n), mon.exp(H)) / spow(Scalar(2), a);
                m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(i)) += val;
            }
        }
    };
    fill(E, out.e);
    fill(F, out.f);
    fill(H, out.h);
    return out;
}

/// L_n equals the pullback along pi of the (n+1)-dimensional highest-weight
/// module: the matrices of y, v, zeta on L_n equal those of 2f, e/4, -h/2,
/// and x, u act by zero, g by the identity.
inline Report ln_pullback_check(long max_n = 8) {
    Report rep("ln-pullback");
    for (long n = 0; n <= max_n; ++n) {
        const MatrixRep L = build_Ln(n);
        const Sl2Matrices S = sl2_highest_weight_matrices(n);
        // the sl2 side is a genuine sl2 module
        const MatQ ef_comm = S.e * S.f - S.f * S.e;
        const MatQ he_comm = S.h * S.e - S.e * S.h;
        const MatQ hf_comm = S.h * S.f - S.f * S.h;
        const std::string tag = "n" + std::to_string(n);
        rep.add("sl2-relations." + tag, ef_comm == S.h &&
                                            he_comm == Scalar(2) * S.e &&
                                            hf_comm == Scalar(-2) * S.f);
        rep.add("y-matches-2f." + tag, L.y == Scalar(2) * S.f);
        rep.add("v-matches-e4." + tag, L.v == frac(1, 4) * S.e);
        rep.add("zeta-matches-h2." + tag, L.zeta == frac(-1, 2) * S.h);
        rep.add("x-u-zero.g-one." + tag,
                L.x.is_zero() && L.u.is_zero() && L.g == MatQ::identity(L.dim));
    }
    return rep;
}

/// Report-only consistency: pi(q) = 4, pi(z) = 16, pi(s) = -4,
/// pi(omega) = -16, pi(theta) = 16; the images of the central elements are
/// central (degree-0 polynomials in the Casimir), and pi(z theta - omega^2)
/// vanishes.
inline Report pi_center_consistency(const Element& q, const Element& z, const Element& s_el,
                                    const Element& theta, const Element& omega) {
    const Presentation& s = sl2_presentation();
    Report rep("pi-center");
    rep.add("q", pi(q) == Element::scalar(s, 4));
    rep.add("z", pi(z) == Element::scalar(s, 16));
    rep.add("s", pi(s_el) == Element::scalar(s, -4));
    rep.add("omega", pi(omega) == Element::scalar(s, -16));
    rep.add("theta", pi(theta) == Element::scalar(s, 16));
    rep.add("central-relation", pi(z * theta - omega * omega).is_zero());
    bool all_central = true;
    for (const Element* c : {&z, &theta, &omega})
        for (int g = 0; g < 3; ++g)
            if (!commutator(pi(*c), Element::generator(s, g)).is_zero()) all_central = false;
    rep.add("images-central", all_central);
    // pi respects the grading on the generators where it is defined
    rep.add("degree-compat",
            pi_letter(dj::Y, 1).degree() == -1 && pi_letter(dj::V, 1).degree() == 1 &&
                pi_letter(dj::ZETA, 1).degree() == 0);
    return rep;
}

} // namespace djd

#endif // DJD_SL2_MAP_HPP
