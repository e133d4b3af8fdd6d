#ifndef DJD_DISTINGUISHED_HPP
#define DJD_DISTINGUISHED_HPP

#include "djd/algebras.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/report.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace djd {

/// q = ux + 2(1+g), z = q^2 g^-1, s = xv + uy + (-1/2 ux + g - 1)zeta
/// - 2(1+g), theta = s^2 g^-1, omega = q g^-1 s.  q, s are normal with the
/// same inner automorphism; z, theta, omega are central; all five are
/// homogeneous of degree zero.
struct DistinguishedElements {
    Element q, z, s, theta, omega;
};

namespace detail {

inline DistinguishedElements build_distinguished() {
    using namespace dj;
    const Presentation& p = dj_presentation();
    auto gen = [&](int g, long e = 1) { return Element::generator(p, g, e); };
    const Element one = Element::one(p);

    DistinguishedElements d;
    d.q = gen(U) * gen(X) + Scalar(2) * one + Scalar(2) * gen(G);
    d.z = d.q * d.q * gen(G, -1);
    d.s = gen(X) * gen(V) + gen(U) * gen(Y) +
          (frac(-1, 2) * (gen(U) * gen(X)) + gen(G) - one) * gen(ZETA) -
          (Scalar(2) * one + Scalar(2) * gen(G));
    d.theta = d.s * d.s * gen(G, -1);
    d.omega = d.q * gen(G, -1) * d.s;
    return d;
}

} // namespace detail

inline const DistinguishedElements& distinguished() {
    static const DistinguishedElements d = detail::build_distinguished();
    return d;
}

/// True iff a commutes with every generator letter (inverses included);
/// sufficient since letters generate.
inline bool is_central(const Element& a) {
    const Presentation& p = a.pres();
    for (const Run& l : letters_of(p))
        if (!commutator(a, Element::generator(p, l.gen, l.exp)).is_zero()) return false;
    return true;
}

/// Images of every signed letter under an algebra automorphism.
using LetterImages = std::map<std::pair<int, int>, Element>;

/// gamma_q: fixes x, u, g^{+-1}, zeta; y -> y + 1/2 x; v -> v - 1/2 u.
/// Witnesses normality of both q and s.
inline const LetterImages& gamma_q() {
    using namespace dj;
    static const LetterImages gamma = [] {
        const Presentation& p = dj_presentation();
        auto gen = [&](int g, long e = 1) { return Element::generator(p, g, e); };
        LetterImages im;
        im[{X, 1}] = gen(X);
        im[{Y, 1}] = gen(Y) + frac(1, 2) * gen(X);
        im[{G, 1}] = gen(G);
        im[{G, -1}] = gen(G, -1);
        im[{ZETA, 1}] = gen(ZETA);
        im[{U, 1}] = gen(U);
        im[{V, 1}] = gen(V) + frac(-1, 2) * gen(U);
        return im;
    }();
    return gamma;
}

/// a X = gamma(X) a for every generator letter X.
inline bool check_normal(const Element& a, const LetterImages& gamma) {
    const Presentation& p = a.pres();
    for (const Run& l : letters_of(p)) {
        const Element x = Element::generator(p, l.gen, l.exp);
        const Element& gx = gamma.at({l.gen, l.exp < 0 ? -1 : 1});
        if (!(a * x == gx * a)) return false;
    }
    return true;
}

/// Least k <= cap with ad_a^k(target) = 0, per target; nullopt if the cap is
/// exceeded.
inline std::vector<std::optional<long>> ad_nilpotency(const Element& a,
                                                      const std::vector<Element>& targets,
                                                      long cap) {
    if (cap < 1) throw Error("ad_nilpotency: cap must be >= 1");
    std::vector<std::optional<long>> orders;
    for (const Element& t : targets) {
        Element cur = t;
        std::optional<long> order;
        for (long k = 0; k <= cap; ++k) {
            if (cur.is_zero()) {
                order = k;
                break;
            }
            if (k < cap) cur = commutator(a, cur);
        }
        orders.push_back(order);
    }
    return orders;
}

// ---------------------------------------------------------------------------
// Closed commutation formulas.

namespace detail {

/// Sum of coeff * word terms, each normalized in the written order.
inline Element formula_sum(const Presentation& p,
                           const std::vector<std::pair<Scalar, Word>>& terms) {
    Element out(p);
    for (const auto& [c, w] : terms) out += normal_form(p, w, c);
    return out;
}

} // namespace detail

/// Oracle for the closed formulas
///   u y^n  = y^n u + n y^{n-1} - sum_{k=0}^{n-1} C(n,k+1) (k+1)!/2^k y^{n-1-k} x^k g
///   v x^m  = x^m v + m x^{m-1} (1-g) + m x^m u
///   g^n y^l = sum_{k=0}^{l} C(l,k) [2n]^[k] / 2^k  x^k y^{l-k} g^n
/// The bracket power [2n]^[k] is evaluated as the falling factorial
/// 2n(2n-1)...(2n-k+1) with the monomial written PBW-ordered (x before y);
/// the same identity with monomials in the printed order y^{l-k} x^k g^n
/// holds with the rising factorial 2n(2n+1)...(2n+k-1), and the oracle
/// checks both readings against the engine.
inline Report formula_oracles(long max_n = 8, long max_m = 8, long max_gexp = 4,
                              long max_ell = 6) {
    using namespace dj;
    if (max_n < 1) throw Error("formula_oracles: maxN must be >= 1");
    const Presentation& p = dj_presentation();
    Report rep("comm-formulas");

    for (long n = 1; n <= max_n; ++n) {
        const Element lhs = normal_form(p, {{U, 1}, {Y, n}});
        std::vector<std::pair<Scalar, Word>> terms;
        terms.push_back({1, {{Y, n}, {U, 1}}});
        terms.push_back({Scalar(n), {{Y, n - 1}}});
        for (long k = 0; k <= n - 1; ++k) {
            const Scalar c = Scalar(binomial(n, k + 1)) * Scalar(factorial(k + 1)) /
                             spow(Scalar(2), k);
            terms.push_back({-c, {{Y, n - 1 - k}, {X, k}, {G, 1}}});
        }
        rep.add("u-yn.n" + std::to_string(n), lhs == detail::formula_sum(p, terms));
    }

    for (long m = 1; m <= max_m; ++m) {
        const Element lhs = normal_form(p, {{V, 1}, {X, m}});
        std::vector<std::pair<Scalar, Word>> terms;
        terms.push_back({1, {{X, m}, {V, 1}}});
        terms.push_back({Scalar(m), {{X, m - 1}}});
        terms.push_back({Scalar(-m), {{X, m - 1}, {G, 1}}});
        terms.push_back({Scalar(m), {{X, m}, {U, 1}}});
        rep.add("v-xm.m" + std::to_string(m), lhs == detail::formula_sum(p, terms));
    }

    for (long n = -max_gexp; n <= max_gexp; ++n) {
        for (long ell = 0; ell <= max_ell; ++ell) {
            const Element lhs = normal_form(p, {{G, n}, {Y, ell}});
            std::vector<std::pair<Scalar, Word>> falling_terms, rising_terms;
            for (long k = 0; k <= ell; ++k) {
                const Scalar bin = Scalar(binomial(ell, k)) / spow(Scalar(2), k);
                falling_terms.push_back(
                    {bin * Scalar(falling_factorial(2 * n, k)), {{X, k}, {Y, ell - k}, {G, n}}});
                rising_terms.push_back(
                    {bin * Scalar(rising_factorial(2 * n, k)), {{Y, ell - k}, {X, k}, {G, n}}});
            }
            const std::string id = "y-g.n" + std::to_string(n) + ".l" + std::to_string(ell);
            rep.add(id + ".falling", lhs == detail::formula_sum(p, falling_terms));
            rep.add(id + ".rising", lhs == detail::formula_sum(p, rising_terms));
        }
    }
    return rep;
}

/// Every entry of the Ore-tower data, as commutator identities:
///   y a - a y = d(a)            for a in {x, u, g, g^-1},
///   zeta b - b zeta = delta(b)  for b in {x, u, g, g^-1, y},
///   v c - sigma(c) v = d'(c)    for c in {x, u, g, g^-1, y, zeta};
/// 15 identities in all (the g^-1 values are forced:
/// d(g^-1) = x g^-1, delta(g^-1) = 0, d'(g^-1) = -g^-1 u).
inline Report ore_tower_check() {
    using namespace dj;
    const Presentation& p = dj_presentation();
    Report rep("ore-tower");
    auto gen = [&](int g, long e = 1) { return Element::generator(p, g, e); };
    const Element one = Element::one(p);
    const Element zero(p);

    struct Entry {
        std::string id;
        Element lhs, rhs;
    };
    std::vector<Entry> entries;

    auto dcheck = [&](const std::string& id, const Element& a, const Element& expect) {
        entries.push_back({"d." + id, commutator(gen(Y), a), expect});
    };
    dcheck("x", gen(X), frac(-1, 2) * (gen(X) * gen(X)));
    dcheck("u", gen(U), gen(G) - one);
    dcheck("g", gen(G), Scalar(-1) * (gen(X) * gen(G)));
    dcheck("g_inv", gen(G, -1), gen(X) * gen(G, -1));

    auto deltacheck = [&](const std::string& id, const Element& b, const Element& expect) {
        entries.push_back({"delta." + id, commutator(gen(ZETA), b), expect});
    };
    deltacheck("x", gen(X), gen(X));
    deltacheck("u", gen(U), Scalar(-1) * gen(U));
    deltacheck("g", gen(G), zero);
    deltacheck("g_inv", gen(G, -1), zero);
    deltacheck("y", gen(Y), gen(Y));

    // sigma fixes x, u, g^{+-1}, y and sends zeta to zeta + 1.
    auto sigmacheck = [&](const std::string& id, const Element& c, const Element& sigma_c,
                          const Element& expect) {
        entries.push_back({"dprime." + id, gen(V) * c - sigma_c * gen(V), expect});
    };
    sigmacheck("x", gen(X), gen(X), one - gen(G) + gen(X) * gen(U));
    sigmacheck("u", gen(U), gen(U), frac(-1, 2) * (gen(U) * gen(U)));
    sigmacheck("g", gen(G), gen(G), gen(G) * gen(U));
    sigmacheck("g_inv", gen(G, -1), gen(G, -1), Scalar(-1) * (gen(G, -1) * gen(U)));
    sigmacheck("y", gen(Y), gen(Y), Scalar(-1) * (gen(G) * gen(ZETA)) + gen(Y) * gen(U));
    sigmacheck("zeta", gen(ZETA), gen(ZETA) + one, zero);

    for (const Entry& e : entries) rep.add(e.id, e.lhs == e.rhs);
    return rep;
}

// ---------------------------------------------------------------------------
// Center of the double.

/// z theta = omega^2, exactly.
inline bool center_relation_holds() {
    const DistinguishedElements& d = distinguished();
    return (d.z * d.theta - d.omega * d.omega).is_zero();
}

namespace detail {

/// Sparse Gaussian elimination over Q by leading (graded-lex largest)
/// monomial; returns the rank of the span.
inline std::size_t rank_of(std::vector<TermMap> rows) {
    std::vector<TermMap> pivots;
    std::size_t rank = 0;
    for (TermMap& row : rows) {
        for (const TermMap& piv : pivots) {
            if (row.empty()) break;
            const auto& lead = *piv.rbegin();
            auto it = row.find(lead.first);
            if (it == row.end()) continue;
            const Scalar factor = it->second / lead.second;
            for (const auto& [m, c] : piv) term_map_add(row, m, -factor * c);
        }
        if (!row.empty()) {
            ++rank;
            pivots.push_back(std::move(row));
            // Keep pivots ordered by leading monomial, largest first, so each
            // new row is reduced by decreasing leads in one pass.
            std::sort(pivots.begin(), pivots.end(), [](const TermMap& a, const TermMap& b) {
                return b.rbegin()->first < a.rbegin()->first;
            });
        }
    }
    return rank;
}

} // namespace detail

/// Low-degree independence of the central elements: the standard-basis
/// monomials z^i theta^j omega^eps (eps in {0,1}, weight i + 2j + eps <= 6)
/// are linearly independent, and over the raw family z^i omega^j theta^eps
/// (eps in {0,1}, i + j + 2eps <= 6) the rank equals the number of distinct
/// normal forms under omega^2 -> z theta -- i.e. z theta = omega^2 is the
/// only relation in this range.
inline Report center_independence() {
    const Presentation& p = dj_presentation();
    const DistinguishedElements& d = distinguished();
    Report rep("center-independence");

    std::vector<Element> zpow{Element::one(p)}, thpow{Element::one(p)}, ompow{Element::one(p)};
    for (int i = 1; i <= 6; ++i) zpow.push_back(zpow.back() * d.z);
    for (int j = 1; j * 2 <= 6; ++j) thpow.push_back(thpow.back() * d.theta);
    for (int k = 1; k <= 6; ++k) ompow.push_back(ompow.back() * d.omega);

    // Standard monomial basis of k[X,Y,Z]/(XZ - Y^2): omega-exponent <= 1.
    std::vector<TermMap> standard;
    for (long eps = 0; eps <= 1; ++eps)
        for (long j = 0; 2 * j + eps <= 6; ++j)
            for (long i = 0; i + 2 * j + eps <= 6; ++i)
                standard.push_back(
                    (zpow[static_cast<std::size_t>(i)] * thpow[static_cast<std::size_t>(j)] *
                     ompow[static_cast<std::size_t>(eps)])
                        .terms());
    const std::size_t n_standard = standard.size();
    rep.add("standard-basis.full-rank",
            detail::rank_of(std::move(standard)) == n_standard,
            std::to_string(n_standard) + " monomials");

    // Raw family z^i omega^j theta^eps; expected rank counts distinct
    // reductions (i + floor(j/2) + ..., see omega^2 = z theta).
    std::vector<TermMap> raw;
    std::set<std::tuple<long, long, long>> reduced;
    for (long eps = 0; eps <= 1; ++eps)
        for (long i = 0; i + 2 * eps <= 6; ++i)
            for (long j = 0; i + j + 2 * eps <= 6; ++j) {
                raw.push_back((zpow[static_cast<std::size_t>(i)] *
                               ompow[static_cast<std::size_t>(j)] *
                               thpow[static_cast<std::size_t>(eps)])
                                  .terms());
                reduced.insert({i + j / 2, eps + j / 2, j % 2});
            }
    const std::size_t n_raw = raw.size();
    const std::size_t rank = detail::rank_of(std::move(raw));
    rep.add("raw-family.rank-matches-reduction", rank == reduced.size(),
            std::to_string(n_raw) + " monomials, rank " + std::to_string(rank));
    return rep;
}

} // namespace djd

#endif // DJD_DISTINGUISHED_HPP
