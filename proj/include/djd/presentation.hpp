#ifndef DJD_PRESENTATION_HPP
#define DJD_PRESENTATION_HPP

#include "djd/monomial.hpp"
#include "djd/scalar.hpp"

#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace djd {

struct Generator {
    std::string name;
    bool invertible = false;
    long degree = 0;
};

/// One run of equal letters inside a word: gen^exp.  exp may be negative
/// only for invertible generators.
struct Run {
    int gen = 0;
    long exp = 0;
    auto operator<=>(const Run&) const = default;
};

/// A word is a product of runs read left to right.  It is *not* assumed
/// ordered; normalization straightens it into the PBW basis.
using Word = std::vector<Run>;

/// Finitely presented algebra whose relations swap adjacent generators
/// modulo lower terms (iterated Ore extension with some generators
/// invertible).  Holds, per disordered letter pair X_hi^s * X_lo^t, the
/// straightening rule rewriting that pair into normal form.
///
/// Termination certificate: on construction, finalize() checks that every
/// rule's right-hand monomial either (a) strictly drops the measured letter
/// counts (lexicographically over measure_priority), (b) keeps them and is
/// shorter than two letters, or (c) is the exact transposition of the left
/// pair.  Together these make the full word measure
///   (counts over measure_priority..., word length, inversion count)
/// strictly decrease at every rewrite step, which the engine re-asserts at
/// run time.
class Presentation {
public:
    Presentation(std::string name, std::vector<Generator> gens,
                 std::vector<int> measure_priority)
        : name_(std::move(name)),
          gens_(std::move(gens)),
          measure_(std::move(measure_priority)),
          rules_(4 * gens_.size() * gens_.size()) {}

    const std::string& name() const { return name_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_[i]; }

    int index_of(const std::string& gname) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == gname) return static_cast<int>(i);
        throw Error(name_ + ": unknown generator " + gname);
    }

    const std::vector<int>& measure_priority() const { return measure_; }

    /// Straightening rule for X_hi^sign_hi * X_lo^sign_lo (hi > lo, signs +-1).
    const TermMap& rule(int hi, int sign_hi, int lo, int sign_lo) const {
        const auto& r = rules_[rule_index(hi, sign_hi, lo, sign_lo)];
        if (!r) throw Error(name_ + ": missing straightening rule");
        return *r;
    }

    void add_rule(int hi, int sign_hi, int lo, int sign_lo, TermMap rhs) {
        if (hi <= lo) throw Error(name_ + ": rule must order a disordered pair");
        check_sign(hi, sign_hi);
        check_sign(lo, sign_lo);
        rules_[rule_index(hi, sign_hi, lo, sign_lo)] = std::move(rhs);
    }

    /// All sign variants of X_hi X_lo = X_lo X_hi for a commuting pair.
    void add_commuting(int hi, int lo) {
        for (int sh : signs(hi))
            for (int sl : signs(lo)) {
                Monomial m(size());
                m.add_exp(static_cast<std::size_t>(lo), sl);
                m.add_exp(static_cast<std::size_t>(hi), sh);
                add_rule(hi, sh, lo, sl, TermMap{{m, Scalar(1)}});
            }
    }

    std::vector<int> signs(int g) const {
        return gens_[static_cast<std::size_t>(g)].invertible ? std::vector<int>{1, -1}
                                                             : std::vector<int>{1};
    }

    /// Totality over disordered pairs, homogeneity of every rule, and the
    /// per-rule termination certificate.  Call once after all add_rule calls.
    void finalize() {
        for (int hi = 1; hi < static_cast<int>(size()); ++hi)
            for (int lo = 0; lo < hi; ++lo)
                for (int sh : signs(hi))
                    for (int sl : signs(lo)) {
                        const auto& r = rules_[rule_index(hi, sh, lo, sl)];
                        if (!r)
                            throw Error(name_ + ": rule table not total at (" +
                                        gens_[hi].name + "," + gens_[lo].name + ")");
                        check_rule(hi, sh, lo, sl, *r);
                    }
        finalized_ = true;
    }

    bool finalized() const { return finalized_; }

    long monomial_degree(const Monomial& m) const {
        long d = 0;
        for (std::size_t i = 0; i < size(); ++i) d += m.exp(i) * gens_[i].degree;
        return d;
    }

    /// Measured letter counts of a word: sum of |exp| per priority generator.
    std::vector<long> measured_counts(const Word& w) const {
        std::vector<long> counts(measure_.size(), 0);
        for (const Run& r : w)
            for (std::size_t k = 0; k < measure_.size(); ++k)
                if (measure_[k] == r.gen) counts[k] += std::labs(r.exp);
        return counts;
    }

private:
    std::size_t rule_index(int hi, int sign_hi, int lo, int sign_lo) const {
        const std::size_t n = gens_.size();
        const std::size_t a = static_cast<std::size_t>(hi) * 2 + (sign_hi < 0 ? 1 : 0);
        const std::size_t b = static_cast<std::size_t>(lo) * 2 + (sign_lo < 0 ? 1 : 0);
        return a * 2 * n + b;
    }

    void check_sign(int g, int s) const {
        if (s != 1 && s != -1) throw Error("rule sign must be +-1");
        if (s < 0 && !gens_[static_cast<std::size_t>(g)].invertible)
            throw Error(name_ + ": inverse letter of non-invertible generator " +
                        gens_[static_cast<std::size_t>(g)].name);
    }

    void check_rule(int hi, int sh, int lo, int sl, const TermMap& rhs) const {
        const long lhs_deg = sh * gens_[hi].degree + sl * gens_[lo].degree;
        Word lhs{{hi, sh}, {lo, sl}};
        const std::vector<long> lhs_counts = measured_counts(lhs);
        Monomial swap(size());
        swap.add_exp(static_cast<std::size_t>(lo), sl);
        swap.add_exp(static_cast<std::size_t>(hi), sh);
        for (const auto& [m, c] : rhs) {
            if (c == 0) throw Error(name_ + ": rule stores a zero coefficient");
            for (std::size_t i = 0; i < size(); ++i)
                if (m.exp(i) < 0 && !gens_[i].invertible)
                    throw Error(name_ + ": rule RHS uses a negative power of " + gens_[i].name);
            if (monomial_degree(m) != lhs_deg)
                throw Error(name_ + ": inhomogeneous rule at (" + gens_[hi].name + "," +
                            gens_[lo].name + ")");
            // Termination certificate, see class comment.
            Word wm;
            for (std::size_t i = 0; i < size(); ++i)
                if (m.exp(i) != 0) wm.push_back({static_cast<int>(i), m.exp(i)});
            const std::vector<long> mc = measured_counts(wm);
            if (mc < lhs_counts) continue;            // (a)
            if (mc == lhs_counts && m.total_abs() < 2) continue; // (b)
            if (m == swap) continue;                  // (c)
            throw Error(name_ + ": rule violates the termination measure at (" +
                        gens_[hi].name + "," + gens_[lo].name + ")");
        }
    }

    std::string name_;
    std::vector<Generator> gens_;
    std::vector<int> measure_;
    std::vector<std::optional<TermMap>> rules_;
    bool finalized_ = false;
};

} // namespace djd

#endif // DJD_PRESENTATION_HPP
