#ifndef DJD_ENGINE_HPP
#define DJD_ENGINE_HPP

#include "djd/element.hpp"
#include "djd/monomial.hpp"
#include "djd/presentation.hpp"
#include "djd/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace djd {

/// Hard cap on rewrite steps per normalized word; tripping it means the rule
/// table is broken (never silent truncation).
inline constexpr std::size_t kStepCap = 1'000'000;

inline Word word_of(const Monomial& m) {
    Word w;
    for (std::size_t i = 0; i < m.width(); ++i)
        if (m.exp(i) != 0) w.push_back({static_cast<int>(i), m.exp(i)});
    return w;
}

/// Merge adjacent runs of the same generator (iteratively, so cancellations
/// may cascade), drop empty runs, and reject negative powers of
/// non-invertible generators.
inline Word canonical_word(const Presentation& p, const Word& raw) {
    Word out;
    for (const Run& r : raw) {
        if (r.exp == 0) continue;
        if (r.exp < 0 && !p.gen(static_cast<std::size_t>(r.gen)).invertible)
            throw Error(p.name() + ": negative power of non-invertible generator " +
                        p.gen(static_cast<std::size_t>(r.gen)).name);
        if (!out.empty() && out.back().gen == r.gen) {
            out.back().exp += r.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(r);
        }
    }
    return out;
}

/// (counts over measure priority..., word length, inversion count) --
/// the lexicographic termination measure.
inline std::vector<long> word_measure(const Presentation& p, const Word& w) {
    std::vector<long> m = p.measured_counts(w);
    long len = 0;
    for (const Run& r : w) len += std::labs(r.exp);
    m.push_back(len);
    long inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i].gen > w[j].gen) inv += std::labs(w[i].exp) * std::labs(w[j].exp);
    m.push_back(inv);
    return m;
}

inline Monomial monomial_of_sorted(const Presentation& p, const Word& w) {
    Monomial m(p.size());
    for (const Run& r : w) m.add_exp(static_cast<std::size_t>(r.gen), r.exp);
    return m;
}

namespace detail {

struct StepBudget {
    std::size_t used = 0;
    std::size_t cap = kStepCap;
    void tick(const Presentation& p) {
        if (++used > cap)
            throw Error(p.name() + ": rewrite step cap exceeded (bad presentation?)");
    }
};

const TermMap& mono_times_letter(const Presentation& p, const Monomial& m, int g, int s,
                                 StepBudget& budget);

/// normal-form-map * single signed letter, merged.
inline TermMap map_times_letter(const Presentation& p, const TermMap& acc, int g, int s,
                                StepBudget& budget) {
    TermMap next;
    for (const auto& [m, c] : acc) term_map_add(next, mono_times_letter(p, m, g, s, budget), c);
    return next;
}

struct LetterCacheKey {
    const Presentation* pres;
    int gen;
    int sign;
    Monomial m;
    friend bool operator<(const LetterCacheKey& a, const LetterCacheKey& b) {
        if (a.pres != b.pres) return a.pres < b.pres;
        if (a.gen != b.gen) return a.gen < b.gen;
        if (a.sign != b.sign) return a.sign < b.sign;
        return a.m.exps() < b.m.exps();
    }
};

/// Straightenings are pure functions of (presentation, monomial, letter), so
/// results are memoized; a cache hit replays an already-counted rewrite.
inline std::map<LetterCacheKey, TermMap>& letter_cache() {
    thread_local std::map<LetterCacheKey, TermMap> cache;
    return cache;
}

/// Bound the cache; only safe between top-level operations (no references
/// into the cache may be live).
inline void trim_letter_cache() {
    if (letter_cache().size() > 1'500'000) letter_cache().clear();
}

/// Straighten (normal monomial m) * X_g^s.  The letter enters from the
/// right and crosses m's trailing run via the rule table; every fresh rule
/// application is one rewrite step, checked against the termination measure.
inline const TermMap& mono_times_letter(const Presentation& p, const Monomial& m, int g, int s,
                                        StepBudget& budget) {
    auto& cache = letter_cache();
    LetterCacheKey key{&p, g, s, m};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    TermMap out;
    int last = -1;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (m.exp(static_cast<std::size_t>(i)) != 0) {
            last = i;
            break;
        }
    if (last <= g) {
        // Ordered already: merge the exponent (may cancel against an
        // invertible run).
        Monomial r = m;
        r.add_exp(static_cast<std::size_t>(g), s);
        term_map_add(out, r, 1);
        return cache.emplace(std::move(key), std::move(out)).first->second;
    }

    budget.tick(p);
    const long elast = m.exp(static_cast<std::size_t>(last));
    const int sj = elast < 0 ? -1 : 1;
    Monomial base = m;
    base.add_exp(static_cast<std::size_t>(last), -sj);
    const TermMap& rhs = p.rule(last, sj, g, s);

    // Strict descent of the word measure at this rewrite step.
    Word w_old = word_of(m);
    w_old.push_back({g, s});
    const std::vector<long> before = word_measure(p, w_old);

    for (const auto& [r, cr] : rhs) {
        Word w_new = word_of(base);
        for (const Run& run : word_of(r)) w_new.push_back(run);
        w_new = canonical_word(p, w_new);
        if (!(word_measure(p, w_new) < before))
            throw Error(p.name() + ": termination measure did not descend");
        // base * r, folding r's letters left to right.
        TermMap acc{{base, cr}};
        for (const Run& run : word_of(r)) {
            const int sgn = run.exp < 0 ? -1 : 1;
            for (long k = 0; k < std::labs(run.exp); ++k)
                acc = map_times_letter(p, acc, run.gen, sgn, budget);
        }
        term_map_add(out, acc);
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace detail

/// Straighten coeff * word into the PBW basis.  Letters are folded left to
/// right through an always-canonical term map, so like terms merge after
/// every step.  Asserts strict descent of the word measure at every rewrite
/// step and enforces the step cap; both trips are hard errors signalling a
/// bad presentation.
inline TermMap normalize_word(const Presentation& p, const Word& raw, const Scalar& coeff,
                              std::size_t step_cap = kStepCap) {
    TermMap acc;
    if (coeff == 0) return acc;
    detail::trim_letter_cache();
    const Word w = canonical_word(p, raw);
    acc.emplace(Monomial(p.size()), coeff);
    detail::StepBudget budget{0, step_cap};
    for (const Run& run : w) {
        const int sgn = run.exp < 0 ? -1 : 1;
        for (long k = 0; k < std::labs(run.exp); ++k)
            acc = detail::map_times_letter(p, acc, run.gen, sgn, budget);
    }
    return acc;
}

/// Element equal to the product of the word's letters in the given order.
inline Element normal_form(const Presentation& p, const Word& letters, Scalar coeff = 1) {
    return Element(p, normalize_word(p, letters, coeff));
}

inline Element multiply(const Element& a, const Element& b) {
    if (&a.pres() != &b.pres()) throw Error("elements over different presentations");
    const Presentation& p = a.pres();
    detail::trim_letter_cache();
    TermMap out;
    for (const auto& [mb, cb] : b.terms()) {
        detail::StepBudget budget;
        TermMap acc = a.terms();
        for (const Run& run : word_of(mb)) {
            const int sgn = run.exp < 0 ? -1 : 1;
            for (long k = 0; k < std::labs(run.exp); ++k)
                acc = detail::map_times_letter(p, acc, run.gen, sgn, budget);
        }
        term_map_add(out, acc, cb);
    }
    return Element(p, std::move(out));
}

inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

inline Element power(const Element& a, long k) {
    if (k < 0) throw Error("negative element power");
    Element acc = Element::one(a.pres());
    for (long i = 0; i < k; ++i) acc = acc * a;
    return acc;
}

inline Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

/// All signed single letters of a presentation (inverse letters included).
inline std::vector<Run> letters_of(const Presentation& p) {
    std::vector<Run> ls;
    for (int g = 0; g < static_cast<int>(p.size()); ++g)
        for (int s : p.signs(g)) ls.push_back({g, s});
    return ls;
}

struct ConfluenceReport {
    std::size_t triples = 0;
    std::vector<std::array<Run, 3>> failures;
    bool ok() const { return failures.empty(); }
};

/// Diamond-lemma style check: for every ordered triple of letters,
/// normalizing (X_k X_j) X_i and X_k (X_j X_i) must agree.
inline ConfluenceReport check_local_confluence(const Presentation& p,
                                               std::size_t step_cap = kStepCap) {
    ConfluenceReport rep;
    const std::vector<Run> ls = letters_of(p);
    for (const Run& k : ls)
        for (const Run& j : ls)
            for (const Run& i : ls) {
                ++rep.triples;
                const Element kj(p, normalize_word(p, Word{k, j}, 1, step_cap));
                const Element ji(p, normalize_word(p, Word{j, i}, 1, step_cap));
                const Element left = kj * Element::generator(p, i.gen, i.exp);
                const Element right = Element::generator(p, k.gen, k.exp) * ji;
                if (!(left == right)) rep.failures.push_back({k, j, i});
            }
    return rep;
}

} // namespace djd

#endif // DJD_ENGINE_HPP
