#include "doctest.h"

#include "djd/algebras.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"

#include <random>

using namespace djd;
using namespace djd::dj;

namespace {

const Presentation& D() { return dj_presentation(); }

Element gen(int g, long e = 1) { return Element::generator(D(), g, e); }

Element lit(std::initializer_list<std::pair<Scalar, std::initializer_list<std::pair<int, long>>>>
                terms) {
    Element out(D());
    for (const auto& [c, exps] : terms)
        out += Element::monomial(D(), Monomial(D().size(), exps), c);
    return out;
}

} // namespace

TEST_CASE("scalar arithmetic stays reduced and exact") {
    Scalar a = frac(2, 4);
    CHECK(numerator(a) == 1);
    CHECK(denominator(a) == 2);
    CHECK(spow(frac(-2, 3), -2) == frac(9, 4));
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(falling_factorial(-2, 2) == 6);
    CHECK(rising_factorial(2, 3) == 24);
    CHECK(scalar_str(frac(-1, 2)) == "-1/2");
}

TEST_CASE("monomial order is graded lexicographic") {
    Monomial x2(6, {{X, 2}}), xy(6, {{X, 1}, {Y, 1}}), one(6);
    CHECK(one < xy);
    CHECK(xy < x2);
    Monomial gi(6, {{G, -1}}), g(6, {{G, 1}});
    CHECK(gi < g);
    CHECK(gi.total_abs() == 1);
}

TEST_CASE("add is termwise with zero terms dropped") {
    CHECK((gen(X) + Scalar(-1) * gen(X)).is_zero());
    Element sum = gen(X) * gen(Y) + half(1) * gen(X, 2);
    CHECK(sum.term_count() == 2);
    CHECK(Scalar(2) * gen(G) + Scalar(3) * gen(G) == Scalar(5) * gen(G));
    const Element other(sl2_presentation());
    CHECK_THROWS_AS(gen(X) + other, Error);
}

TEST_CASE("defining straightenings of the double") {
    // yx = xy - 1/2 x^2
    CHECK(gen(Y) * gen(X) == lit({{1, {{X, 1}, {Y, 1}}}, {frac(-1, 2), {{X, 2}}}}));
    // g g^-1 = 1
    CHECK(gen(G) * gen(G, -1) == Element::one(D()));
    // v y = yv - g zeta + yu
    CHECK(gen(V) * gen(Y) == lit({{1, {{Y, 1}, {V, 1}}},
                                  {-1, {{G, 1}, {ZETA, 1}}},
                                  {1, {{Y, 1}, {U, 1}}}}));
    // u y^2 = y^2 u + 2y - 2yg - xg (two applications of the uy rule, by hand)
    CHECK(gen(U) * gen(Y, 2) == lit({{1, {{Y, 2}, {U, 1}}},
                                     {2, {{Y, 1}}},
                                     {-2, {{Y, 1}, {G, 1}}},
                                     {-1, {{X, 1}, {G, 1}}}}));
}

TEST_CASE("normal_form evaluates words in the written order") {
    // v x = xv + 1 - g + xu
    CHECK(normal_form(D(), {{V, 1}, {X, 1}}) ==
          lit({{1, {{X, 1}, {V, 1}}}, {1, {}}, {-1, {{G, 1}}}, {1, {{X, 1}, {U, 1}}}}));
    // x y is already ordered
    CHECK(normal_form(D(), {{X, 1}, {Y, 1}}) == lit({{1, {{X, 1}, {Y, 1}}}}));
    // zeta x = x zeta + x
    CHECK(normal_form(D(), {{ZETA, 1}, {X, 1}}) ==
          lit({{1, {{X, 1}, {ZETA, 1}}}, {1, {{X, 1}}}}));
    CHECK_THROWS_AS(normal_form(D(), {{X, -1}}), Error);
}

TEST_CASE("normal form is idempotent") {
    const Element e = gen(V) * gen(Y) * gen(X);
    Element again(D());
    for (const auto& [m, c] : e.terms()) again += normal_form(D(), word_of(m), c);
    CHECK(again == e);
}

TEST_CASE("commutators") {
    CHECK(commutator(gen(U), gen(X)).is_zero());
    CHECK(commutator(gen(Y), gen(X)) == lit({{frac(-1, 2), {{X, 2}}}}));
    // u zeta = zeta u + u  =>  [zeta, u] = -u
    CHECK(commutator(gen(ZETA), gen(U)) == Scalar(-1) * gen(U));
}

TEST_CASE("grading") {
    CHECK(gen(V).degree() == 1);
    const Element q = gen(U) * gen(X) + Scalar(2) * Element::one(D()) + Scalar(2) * gen(G);
    CHECK(q.degree() == 0);
    CHECK_FALSE((gen(X) + gen(U)).degree().has_value());
    // multiply respects grading on homogeneous inputs
    const Element a = gen(V) * gen(ZETA);
    const Element b = gen(Y) * gen(G, -2);
    REQUIRE(a.degree().has_value());
    REQUIRE(b.degree().has_value());
    const Element ab = a * b;
    if (!ab.is_zero()) CHECK(ab.degree() == *a.degree() + *b.degree());
}

TEST_CASE("local confluence of the shipped presentations") {
    SUBCASE("dj: 7 letters, 343 triples") {
        const ConfluenceReport r = check_local_confluence(dj_presentation());
        CHECK(r.triples == 343);
        CHECK(r.ok());
    }
    SUBCASE("sl2") {
        const ConfluenceReport r = check_local_confluence(sl2_presentation());
        CHECK(r.triples == 27);
        CHECK(r.ok());
    }
    SUBCASE("a2s: 9 letters, 729 triples") {
        const ConfluenceReport r = check_local_confluence(a2s_presentation());
        CHECK(r.triples == 729);
        CHECK(r.ok());
    }
    SUBCASE("jordan-yx helper") {
        CHECK(check_local_confluence(jordan_yx_presentation()).ok());
    }
}

TEST_CASE("inverse-letter rules are consistent: g^-1 (g X) returns X") {
    for (int g = 0; g < 6; ++g) {
        const Element x = gen(g);
        CHECK(gen(G, -1) * (gen(G) * x) == x);
        CHECK(gen(G) * (gen(G, -1) * x) == x);
    }
}

TEST_CASE("defining relations normalize consistently in all three algebras") {
    for (const auto& rel : dj_relations())
        CHECK_MESSAGE(evaluate_in_own_algebra(dj_presentation(), rel.poly).is_zero(),
                      "dj relation ", rel.id);
    for (const auto& rel : sl2_relations())
        CHECK_MESSAGE(evaluate_in_own_algebra(sl2_presentation(), rel.poly).is_zero(),
                      "sl2 relation ", rel.id);
    for (const auto& rel : a2s_relations())
        CHECK_MESSAGE(evaluate_in_own_algebra(a2s_presentation(), rel.poly).is_zero(),
                      "a2s relation ", rel.id);
}

TEST_CASE("multiplication is associative on randomized triples") {
    std::mt19937_64 rng(20240517);
    auto random_element = [&]() {
        Element e(D());
        const int terms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            Monomial m(6);
            for (int slot = 0; slot < 3; ++slot) {
                const int g = static_cast<int>(rng() % 6);
                long ex = static_cast<long>(rng() % 4); // 0..3
                if (g == G && rng() % 2) ex = -ex;
                m.set_exp(static_cast<std::size_t>(g), ex);
            }
            const long num = 1 + static_cast<long>(rng() % 3);
            e += Element::monomial(D(), m, rng() % 2 ? Scalar(num) : Scalar(-num));
        }
        return e;
    };
    for (int iter = 0; iter < 12; ++iter) {
        const Element a = random_element(), b = random_element(), c = random_element();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("step cap trips as a hard error") {
    Word w;
    for (int i = 0; i < 12; ++i) {
        w.push_back({V, 1});
        w.push_back({X, 1});
    }
    CHECK_THROWS_AS(normalize_word(D(), w, 1, /*step_cap=*/5), Error);
}
