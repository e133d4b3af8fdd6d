#ifndef DJD_TENSOR_HPP
#define DJD_TENSOR_HPP

#include "djd/element.hpp"
#include "djd/engine.hpp"
#include "djd/monomial.hpp"
#include "djd/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace djd {

/// Sparse element of the (unbraided) tensor power of one algebra:
/// componentwise product (a (x) b)(c (x) d) = ac (x) bd, no zero
/// coefficients.  Arity is fixed per value (2 for coproducts, 3 while
/// checking coassociativity).
class TensorElement {
public:
    using Key = std::vector<Monomial>;

    TensorElement(const Presentation& p, std::size_t legs) : pres_(&p), legs_(legs) {}

    static TensorElement one(const Presentation& p, std::size_t legs) {
        TensorElement t(p, legs);
        t.terms_.emplace(Key(legs, Monomial(p.size())), 1);
        return t;
    }

    const Presentation& pres() const { return *pres_; }
    std::size_t legs() const { return legs_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) {
        a.check_compatible(b);
        for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
        return a;
    }
    friend TensorElement operator*(const Scalar& c, const TensorElement& a) {
        TensorElement r(*a.pres_, a.legs_);
        if (c != 0)
            for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
        return r;
    }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        a.check_compatible(b);
        const Presentation& p = *a.pres_;
        TensorElement out(p, a.legs_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                // Per-leg straightened products, then distribute.
                std::vector<TermMap> legs(a.legs_);
                for (std::size_t l = 0; l < a.legs_; ++l) {
                    Word w = word_of(ka[l]);
                    for (const Run& r : word_of(kb[l])) w.push_back(r);
                    legs[l] = normalize_word(p, w, 1);
                }
                Key key(a.legs_);
                distribute(legs, 0, key, ca * cb, out);
            }
        return out;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.pres_ == b.pres_ && a.legs_ == b.legs_ && a.terms_ == b.terms_;
    }

    /// Pure tensor of elements: e0 (x) e1 (x) ...
    static TensorElement pure(const std::vector<Element>& legs) {
        if (legs.empty()) throw Error("tensor of zero legs");
        const Presentation& p = legs[0].pres();
        TensorElement out(p, legs.size());
        Key key(legs.size());
        build_pure(legs, 0, key, Scalar(1), out);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        const Element probe(*pres_);
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Scalar& c = it->second;
            const bool neg = c < 0;
            const Scalar a = neg ? Scalar(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (a != 1) out += scalar_str(a) + "*";
            bool first_leg = true;
            for (const Monomial& m : it->first) {
                if (!first_leg) out += "⊗";
                first_leg = false;
                out += probe.monomial_str(m);
            }
        }
        return out;
    }

private:
    void check_compatible(const TensorElement& o) const {
        if (pres_ != o.pres_ || legs_ != o.legs_)
            throw Error("tensor elements over different algebras or arities");
    }

    static void distribute(const std::vector<TermMap>& legs, std::size_t l, Key& key,
                           const Scalar& c, TensorElement& out) {
        if (c == 0) return;
        if (l == legs.size()) {
            out.add_term(key, c);
            return;
        }
        for (const auto& [m, cm] : legs[l]) {
            key[l] = m;
            distribute(legs, l + 1, key, c * cm, out);
        }
    }

    static void build_pure(const std::vector<Element>& legs, std::size_t l, Key& key,
                           const Scalar& c, TensorElement& out) {
        if (c == 0) return;
        if (l == legs.size()) {
            out.add_term(key, c);
            return;
        }
        for (const auto& [m, cm] : legs[l].terms()) {
            key[l] = m;
            build_pure(legs, l + 1, key, c * cm, out);
        }
    }

    const Presentation* pres_ = nullptr;
    std::size_t legs_ = 0;
    std::map<Key, Scalar> terms_;
};

} // namespace djd

#endif // DJD_TENSOR_HPP
