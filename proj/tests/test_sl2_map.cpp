#include "doctest.h"

#include "djd/distinguished.hpp"
#include "djd/rng.hpp"
#include "djd/sl2_map.hpp"

using namespace djd;

namespace {
const Presentation& D() { return dj_presentation(); }
const Presentation& S() { return sl2_presentation(); }
Element dgen(int g, long e = 1) { return Element::generator(D(), g, e); }
Element sgen(int g) { return Element::generator(S(), g); }
} // namespace

TEST_CASE("pi on generators and simple elements") {
    CHECK(pi(dgen(dj::V)) == frac(1, 4) * sgen(sl2::E));
    CHECK(pi(dgen(dj::Y)) == Scalar(2) * sgen(sl2::F));
    CHECK(pi(dgen(dj::ZETA)) == frac(-1, 2) * sgen(sl2::H));
    CHECK(pi(dgen(dj::G) - Element::one(D())).is_zero());
    CHECK(pi(dgen(dj::G, -1)) == Element::one(S()));
    // pi(vy - yv): both routes agree, value h/2
    const Element comm = commutator(dgen(dj::V), dgen(dj::Y));
    CHECK(pi(comm) == frac(1, 2) * sgen(sl2::H));
    CHECK(pi(comm) == commutator(pi(dgen(dj::V)), pi(dgen(dj::Y))));
}

TEST_CASE("pi is multiplicative (relation reduction ef - fe = h)") {
    // relation vy = yv - g zeta + yu: images satisfy e f /8 = f e /8 + h/2
    const Element lhs = pi(dgen(dj::V)) * pi(dgen(dj::Y));
    const Element rhs = pi(dgen(dj::Y)) * pi(dgen(dj::V)) + frac(1, 2) * sgen(sl2::H);
    CHECK(lhs == rhs);
    // relation vx = xv + (1-g) + xu maps to 0 = 0
    const Element im = evaluate_genpoly(dj_relations()[14].poly, Element::one(S()),
                                        [&](int g, int s) { return pi_letter(g, s); });
    CHECK(im.is_zero());
}

TEST_CASE("verify_pi passes completely") {
    const Report r = verify_pi();
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("highest-weight sl2 matrices") {
    const Sl2Matrices m1 = sl2_highest_weight_matrices(1);
    // h eigenvalues n, n-2; zeta-matrix of L_1 equals -1/2 diag(1, -1)
    CHECK(m1.h.at(0, 0) == 1);
    CHECK(m1.h.at(1, 1) == -1);
    const MatrixRep l1 = build_Ln(1);
    CHECK(l1.zeta == frac(-1, 2) * m1.h);
    // n=2: v t_2 = (2/2)(2-2+1) t_1 = t_1 matches e/4
    const Sl2Matrices m2 = sl2_highest_weight_matrices(2);
    const MatrixRep l2 = build_Ln(2);
    CHECK(l2.v == frac(1, 4) * m2.e);
    CHECK(l2.v.at(1, 2) == 1);
}

TEST_CASE("L_n is the pullback along pi for n <= 8") {
    const Report r = ln_pullback_check(8);
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("pi is multiplicative on random elements") {
    SplitMix64 rng(515);
    for (int iter = 0; iter < 8; ++iter) {
        const Element w1 = random_element(D(), rng, 3, 2);
        const Element w2 = random_element(D(), rng, 3, 2);
        CHECK(pi(w1 * w2) == pi(w1) * pi(w2));
    }
}

TEST_CASE("central elements map to scalars") {
    const DistinguishedElements& d = distinguished();
    const Report r = pi_center_consistency(d.q, d.z, d.s, d.theta, d.omega);
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
    CHECK(pi(d.z) == Element::scalar(S(), 16));
}
