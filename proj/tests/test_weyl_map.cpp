#include "doctest.h"

#include "djd/rng.hpp"
#include "djd/weyl_map.hpp"

using namespace djd;
using namespace djd::a2s;

namespace {
const Presentation& A() { return a2s_presentation(); }
Element agen(int g, long e = 1) { return Element::generator(A(), g, e); }
} // namespace

TEST_CASE("generator images") {
    const PhiImages& im = phi_images();
    CHECK(im.letter(dj::X, 1) == agen(Q) * agen(T, -1));
    CHECK(im.letter(dj::G, 1) == agen(Z, -1) * agen(Q, 2));
    CHECK(im.letter(dj::G, -1) == agen(Z) * agen(Q, -2));
    CHECK(im.letter(dj::Y, 1) == frac(-1, 2) * (agen(Q, 2) * agen(P) * agen(T, -1)));
    CHECK(im.letter(dj::ZETA, 1) == Scalar(-1) * (agen(T) * agen(XI)));
    // phi(g) phi(g^-1) = 1
    CHECK(im.letter(dj::G, 1) * im.letter(dj::G, -1) == Element::one(A()));
}

TEST_CASE("Weyl pair arithmetic in A'_2(S)") {
    CHECK(commutator(agen(P), agen(Q)) == Element::one(A()));
    CHECK(commutator(agen(XI), agen(T)) == Element::one(A()));
    // localized inverse rule: p q^-1 = q^-1 p - q^-2
    CHECK(agen(P) * agen(Q, -1) == agen(Q, -1) * agen(P) - agen(Q, -2));
    CHECK(agen(Q) * agen(Q, -1) == Element::one(A()));
}

TEST_CASE("every relation of the double maps to zero") {
    const Report r = verify_phi();
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("deepest relation by hand: vy = yv - g zeta + yu under phi") {
    const PhiImages& im = phi_images();
    const Element lhs = im.letter(dj::V, 1) * im.letter(dj::Y, 1);
    const Element rhs = im.letter(dj::Y, 1) * im.letter(dj::V, 1) -
                        im.letter(dj::G, 1) * im.letter(dj::ZETA, 1) +
                        im.letter(dj::Y, 1) * im.letter(dj::U, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("center bookkeeping across phi") {
    const Report r = center_map_check();
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
    // z' = q^-1 phi(s) literally
    CHECK(agen(Q, -1) * phi(distinguished().s) == agen(ZP));
}

TEST_CASE("degree-0 multiplicativity sampling") {
    const Report r = degree0_consistency(12, 7);
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("phi is multiplicative on random elements of the double") {
    SplitMix64 rng(2024);
    const Presentation& D = dj_presentation();
    for (int iter = 0; iter < 6; ++iter) {
        const Element w1 = random_element(D, rng, 2, 1);
        const Element w2 = random_element(D, rng, 2, 1);
        CHECK(phi(w1 * w2) == phi(w1) * phi(w2));
    }
}
