#ifndef DJD_WEYL_MAP_HPP
#define DJD_WEYL_MAP_HPP

#include "djd/algebras.hpp"
#include "djd/distinguished.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/report.hpp"
#include "djd/rng.hpp"

#include <array>
#include <string>
#include <vector>

namespace djd {

/// Generator images of the localization isomorphism phi: D' -> A'_2(S),
/// assembled by inverting z = q^2 g^-1, t = q x^-1, p = -2 q^-2 t y,
/// xi = -t^-1 zeta, w = t^-1 v, z' = w - f - zeta/2 with
/// f = -(1 - q/2 + z^-1 q^2) p + 2 q^-1 - 2 z^-1 (zeta - 1) q:
///   phi(x) = t^-1 q,        phi(g) = q^2 z^-1,   phi(g^-1) = q^-2 z,
///   phi(u) = t - 2 q^-1 t - 2 q z^-1 t,
///   phi(y) = -1/2 t^-1 q^2 p,  phi(zeta) = -t xi,
///   phi(v) = t (z' + f^ + 1/2 zeta^)  with zeta^ = -t xi and f^ as above.
struct PhiImages {
    std::array<Element, 6> pos; // per dj generator
    Element g_inv;              // phi(g^-1)

    const Element& letter(int gen, int sign) const {
        if (gen == dj::G && sign < 0) return g_inv;
        return pos[static_cast<std::size_t>(gen)];
    }
};

namespace detail {

inline PhiImages build_phi() {
    using namespace djd::a2s;
    const Presentation& A = a2s_presentation();
    auto gen = [&](int g, long e = 1) { return Element::generator(A, g, e); };
    const Element one = Element::one(A);

    PhiImages phi;
    phi.pos[dj::X] = gen(T, -1) * gen(Q);
    phi.pos[dj::G] = gen(Q, 2) * gen(Z, -1);
    phi.g_inv = gen(Q, -2) * gen(Z);
    phi.pos[dj::U] = gen(T) - Scalar(2) * (gen(Q, -1) * gen(T)) -
                     Scalar(2) * (gen(Q) * gen(Z, -1) * gen(T));
    phi.pos[dj::Y] = frac(-1, 2) * (gen(T, -1) * gen(Q, 2) * gen(P));
    phi.pos[dj::ZETA] = Scalar(-1) * (gen(T) * gen(XI));

    const Element zeta_hat = phi.pos[dj::ZETA];
    const Element f_hat = Scalar(-1) * ((one - frac(1, 2) * gen(Q) +
                                         gen(Z, -1) * gen(Q, 2)) *
                                        gen(P)) +
                          Scalar(2) * gen(Q, -1) -
                          Scalar(2) * (gen(Z, -1) * (zeta_hat - one) * gen(Q));
    phi.pos[dj::V] = gen(T) * (gen(ZP) + f_hat + frac(1, 2) * zeta_hat);
    return phi;
}

} // namespace detail

inline const PhiImages& phi_images() {
    static const PhiImages phi = detail::build_phi();
    return phi;
}

/// Algebra-map extension of phi to any element of the double.
inline Element phi(const Element& a) {
    const Presentation& A = a2s_presentation();
    const PhiImages& im = phi_images();
    Element out(A);
    for (const auto& [m, c] : a.terms()) {
        Element acc = Element::one(A);
        for (const Run& run : word_of(m)) {
            const int sgn = run.exp < 0 ? -1 : 1;
            const Element& base = im.letter(run.gen, sgn);
            for (long k = 0; k < std::labs(run.exp); ++k) acc = acc * base;
        }
        out += c * acc;
    }
    return out;
}

/// Relation preservation plus the Ore-data identities of the localization:
/// d(q) = -1/2 x q (cleared of inverses), d(t) = 0, delta(q) = 0,
/// delta(t) = -t, computed inside A'_2(S); also the sanity identities
/// phi(q) = q, the re-derivation of phi(u), and multiplicativity on every
/// ordered generator pair.
inline Report verify_phi() {
    using namespace djd::a2s;
    const Presentation& D = dj_presentation();
    const Presentation& A = a2s_presentation();
    const PhiImages& im = phi_images();
    Report rep("phi");

    const Element one = Element::one(A);
    for (const auto& rel : dj_relations()) {
        const Element v = evaluate_genpoly(rel.poly, one,
                                           [&](int g, int s) { return im.letter(g, s); });
        rep.add("rel." + rel.id, v.is_zero());
    }

    auto agen = [&](int g, long e = 1) { return Element::generator(A, g, e); };
    const Element q = agen(Q), t = agen(T);
    const Element py = im.letter(dj::Y, 1), pzeta = im.letter(dj::ZETA, 1);
    const Element px = im.letter(dj::X, 1);

    // phi(q) collapses to the generator q (q := ux + 2(1+g) in the double).
    const Element q_dj = distinguished().q;
    rep.add("q-collapses", phi(q_dj) == q);
    // phi(u) re-derived from u = (q - 2(1+g)) x^-1 with x^-1 = q^-1 t.
    const Element u_raw =
        (q - Scalar(2) * one - Scalar(2) * (agen(Q, 2) * agen(Z, -1))) * (agen(Q, -1) * t);
    rep.add("u-rederived", u_raw == im.letter(dj::U, 1));

    // Ore data of the localization lemmas.
    rep.add("ore.d-q", commutator(py, q) == frac(-1, 2) * (px * q));
    rep.add("ore.d-t", commutator(py, t).is_zero());
    rep.add("ore.delta-q", commutator(pzeta, q).is_zero());
    rep.add("ore.delta-t", commutator(pzeta, t) == Scalar(-1) * t);

    // Change of variables to the automorphic picture: r = -qp satisfies
    // qr = (r+1)q, a consequence of pq = qp + 1.
    const Element r = Scalar(-1) * (agen(Q) * agen(P));
    rep.add("automorphic.qr", q * r == (r + one) * q);

    // Multiplicativity of phi on every ordered letter pair of the double
    // (phi of the straightened product equals the product of images).
    bool mult = true;
    for (const Run& hi : letters_of(D))
        for (const Run& lo : letters_of(D)) {
            const Element prod =
                Element::generator(D, hi.gen, hi.exp) * Element::generator(D, lo.gen, lo.exp);
            if (!(phi(prod) == im.letter(hi.gen, hi.exp) * im.letter(lo.gen, lo.exp)))
                mult = false;
        }
    rep.add("multiplicative.pairs", mult);

    // Structural guard: no image uses a negative power of a non-invertible
    // generator (the Element invariant enforces it; assert explicitly).
    bool guard = true;
    for (const Run& l : letters_of(D))
        for (const auto& [m, c] : im.letter(l.gen, l.exp).terms())
            for (std::size_t i = 0; i < A.size(); ++i)
                if (m.exp(i) < 0 && !A.gen(i).invertible) guard = false;
    rep.add("no-illegal-inverses", guard);
    return rep;
}

/// Center bookkeeping across phi: phi(s) = q z', phi(omega) = z z',
/// phi(theta) = z z'^2, phi(z theta - omega^2) = 0, and z, z' commute with
/// every generator of A'_2(S).
inline Report center_map_check() {
    using namespace djd::a2s;
    const Presentation& A = a2s_presentation();
    const DistinguishedElements& d = distinguished();
    auto agen = [&](int g, long e = 1) { return Element::generator(A, g, e); };
    Report rep("center-map");

    rep.add("phi-s", phi(d.s) == agen(Q) * agen(ZP));
    rep.add("phi-z", phi(d.z) == agen(Z));
    rep.add("phi-omega", phi(d.omega) == agen(Z) * agen(ZP));
    rep.add("phi-theta", phi(d.theta) == agen(Z) * agen(ZP, 2));
    rep.add("phi-central-relation", phi(d.z * d.theta - d.omega * d.omega).is_zero());

    bool commutes = true;
    for (int c : {Z, ZP})
        for (const Run& l : letters_of(A))
            if (!commutator(agen(c), Element::generator(A, l.gen, l.exp)).is_zero())
                commutes = false;
    rep.add("S-commutes", commutes);
    return rep;
}

/// phi(w1 w2) = phi(w1) phi(w2) on random degree-0 elements of the double
/// supported on x, u, g (monomials x^n g^m u^n), plus the fixed anchors.
inline Report degree0_consistency(long count = 30, std::uint64_t seed = 7) {
    const Presentation& D = dj_presentation();
    Report rep("degree0");

    rep.add("anchor.q", phi(distinguished().q) ==
                            Element::generator(a2s_presentation(), a2s::Q));
    rep.add("anchor.one", phi(Element::one(D)) == Element::one(a2s_presentation()));
    rep.add("anchor.ggi",
            phi(Element::generator(D, dj::G) * Element::generator(D, dj::G, -1)) ==
                Element::one(a2s_presentation()));

    SplitMix64 rng(seed);
    auto random_o_elt = [&]() {
        Element e(D);
        const long terms = 1 + rng.below(3);
        for (long t = 0; t < terms; ++t) {
            Monomial m(6);
            const long n = rng.below(3);
            m.set_exp(dj::X, n);
            m.set_exp(dj::U, n); // degree -n + n = 0
            m.set_exp(dj::G, rng.below(5) - 2);
            e += Element::monomial(D, m, Scalar(1 + rng.below(4)) * (rng.below(2) ? 1 : -1));
        }
        return e;
    };
    for (long i = 0; i < count; ++i) {
        const Element w1 = random_o_elt(), w2 = random_o_elt();
        if (w1.degree() != 0 || w2.degree() != 0) {
            rep.add("sample." + std::to_string(i) + ".degree0", w1.is_zero() || w2.is_zero());
            continue;
        }
        rep.add("sample." + std::to_string(i), phi(w1 * w2) == phi(w1) * phi(w2));
    }
    return rep;
}

} // namespace djd

#endif // DJD_WEYL_MAP_HPP
