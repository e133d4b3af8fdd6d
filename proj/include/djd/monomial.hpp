#ifndef DJD_MONOMIAL_HPP
#define DJD_MONOMIAL_HPP

#include "djd/scalar.hpp"

#include <cstdlib>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace djd {

/// Exponent vector over an algebra's ordered generator list.  A monomial
/// always denotes the product of its letters in that fixed order; whether a
/// negative exponent is legal for a given slot is decided by the
/// presentation that owns the element.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t width) : e_(width, 0) {}
    Monomial(std::size_t width, std::initializer_list<std::pair<int, long>> exps)
        : e_(width, 0) {
        for (const auto& [g, e] : exps) e_[static_cast<std::size_t>(g)] += e;
    }

    std::size_t width() const { return e_.size(); }
    long exp(std::size_t i) const { return e_[i]; }
    void set_exp(std::size_t i, long v) { e_[i] = v; }
    void add_exp(std::size_t i, long v) { e_[i] += v; }

    bool is_unit() const {
        for (long e : e_)
            if (e != 0) return false;
        return true;
    }

    long total_abs() const {
        long t = 0;
        for (long e : e_) t += std::labs(e);
        return t;
    }

    const std::vector<long>& exps() const { return e_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    // Graded lexicographic: total |exponent| first, then plain lex on the
    // exponent vector.  Total order -> deterministic iteration and output.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const long ta = a.total_abs(), tb = b.total_abs();
        if (ta != tb) return ta < tb;
        return a.e_ < b.e_;
    }

private:
    std::vector<long> e_;
};

/// Canonical sparse sum of monomials: no zero coefficients are ever stored.
using TermMap = std::map<Monomial, Scalar>;

inline void term_map_add(TermMap& into, const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto it = into.find(m);
    if (it == into.end()) {
        into.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

inline void term_map_add(TermMap& into, const TermMap& other, const Scalar& scale = 1) {
    if (scale == 0) return;
    for (const auto& [m, c] : other) term_map_add(into, m, c * scale);
}

} // namespace djd

#endif // DJD_MONOMIAL_HPP
