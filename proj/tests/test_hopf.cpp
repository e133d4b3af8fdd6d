#include "doctest.h"

#include "djd/algebras.hpp"
#include "djd/hopf.hpp"

using namespace djd;
using namespace djd::dj;

namespace {
const Presentation& D() { return dj_presentation(); }
Element gen(int g, long e = 1) { return Element::generator(D(), g, e); }
} // namespace

TEST_CASE("coproduct on generators") {
    const Element e1 = Element::one(D());
    CHECK(coproduct(gen(X)) ==
          TensorElement::pure({gen(X), e1}) + TensorElement::pure({gen(G), gen(X)}));
    CHECK(coproduct(e1) == TensorElement::one(D(), 2));
    CHECK(coproduct(gen(V)) == TensorElement::pure({gen(V), e1}) +
                                   TensorElement::pure({e1, gen(V)}) +
                                   TensorElement::pure({gen(ZETA), gen(U)}));
    // Delta(g^-1) = g^-1 (x) g^-1
    CHECK(coproduct(gen(G, -1)) == TensorElement::pure({gen(G, -1), gen(G, -1)}));
}

TEST_CASE("coproduct is an algebra map on products") {
    const Element xy = gen(X) * gen(Y);
    CHECK(coproduct(xy) == coproduct(gen(X)) * coproduct(gen(Y)));
    const Element vy = gen(V) * gen(Y);
    CHECK(coproduct(vy) == coproduct(gen(V)) * coproduct(gen(Y)));
}

TEST_CASE("counit values") {
    CHECK(counit(gen(G)) == 1);
    CHECK(counit(gen(V)) == 0);
    const Element e = Element::scalar(D(), 3) + Scalar(2) * gen(G) + gen(X) * gen(Y);
    CHECK(counit(e) == 5);
}

TEST_CASE("antipode values") {
    CHECK(antipode(gen(G)) == gen(G, -1));
    CHECK(antipode(gen(X)) == Scalar(-1) * (gen(G, -1) * gen(X)));
    CHECK(antipode(gen(V)) == Scalar(-1) * gen(V) + gen(ZETA) * gen(U));
    // antipode axiom on v: S(v)*1 + S(1)*v + S(zeta)*u = 0
    const Element lhs = antipode(gen(V)) + gen(V) + antipode(gen(ZETA)) * gen(U);
    CHECK(lhs.is_zero());
}

TEST_CASE("Delta annihilates the vy relation") {
    const Element rel =
        gen(V) * gen(Y) - gen(Y) * gen(V) + gen(G) * gen(ZETA) - gen(Y) * gen(U);
    CHECK(rel.is_zero()); // sanity: it is a relation
    const TensorElement d = evaluate_genpoly(
        dj_relations()[16].poly, TensorElement::one(D(), 2),
        [&](int g, int s) { return dj_hopf().delta_letter(g, s); });
    CHECK(d.is_zero());
}

TEST_CASE("S^2 is conjugation by the pivot") {
    const Element s2y = antipode(antipode(gen(Y)));
    const Element conj = gen(G, -1) * gen(Y) * gen(G);
    const Element expected = gen(Y) - gen(X);
    CHECK(s2y == expected);
    CHECK(conj == expected);
}

TEST_CASE("full Hopf verification, dj and sl2") {
    const Report r = verify_hopf(dj_hopf(), /*samples=*/6, /*seed=*/7);
    for (const Check& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
    const Report r2 = verify_hopf(sl2_hopf(), 4, 7);
    CHECK(r2.ok());
}

TEST_CASE("tensor printing uses the tensor glyph") {
    CHECK(coproduct(gen(V)).str() == "zeta⊗u + v⊗1 + 1⊗v");
}
