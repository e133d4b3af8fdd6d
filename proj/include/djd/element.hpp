#ifndef DJD_ELEMENT_HPP
#define DJD_ELEMENT_HPP

#include "djd/monomial.hpp"
#include "djd/presentation.hpp"
#include "djd/scalar.hpp"

#include <optional>
#include <string>
#include <utility>

namespace djd {

/// Finite sparse sum of PBW monomials with exact rational coefficients,
/// always in canonical form: no zero coefficients, deterministic term order.
/// Two elements are equal iff they live over the same presentation and their
/// term maps coincide.
class Element {
public:
    Element() = default;
    explicit Element(const Presentation& p) : pres_(&p) {}
    Element(const Presentation& p, TermMap terms) : pres_(&p), terms_(std::move(terms)) {}

    static Element scalar(const Presentation& p, Scalar c) {
        Element e(p);
        term_map_add(e.terms_, Monomial(p.size()), c);
        return e;
    }

    static Element one(const Presentation& p) { return scalar(p, 1); }

    static Element monomial(const Presentation& p, const Monomial& m, Scalar c = 1) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (m.exp(i) < 0 && !p.gen(i).invertible)
                throw Error(p.name() + ": negative power of non-invertible generator " +
                            p.gen(i).name);
        Element e(p);
        term_map_add(e.terms_, m, c);
        return e;
    }

    static Element generator(const Presentation& p, int g, long exp = 1) {
        Monomial m(p.size());
        m.add_exp(static_cast<std::size_t>(g), exp);
        return monomial(p, m);
    }

    const Presentation& pres() const {
        if (!pres_) throw Error("element has no presentation");
        return *pres_;
    }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Element& operator+=(const Element& o) {
        check_same(o);
        term_map_add(terms_, o.terms_);
        return *this;
    }
    Element& operator-=(const Element& o) {
        check_same(o);
        term_map_add(terms_, o.terms_, Scalar(-1));
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) { return Scalar(-1) * a; }
    friend Element operator*(const Scalar& c, const Element& a) {
        Element r(a.pres());
        if (c != 0)
            for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, c * v);
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.pres_ == b.pres_ && a.terms_ == b.terms_;
    }

    /// Common grading degree of all terms; nullopt when inhomogeneous or zero.
    std::optional<long> degree() const {
        if (terms_.empty()) return std::nullopt;
        std::optional<long> d;
        for (const auto& [m, c] : terms_) {
            const long md = pres().monomial_degree(m);
            if (!d)
                d = md;
            else if (*d != md)
                return std::nullopt;
        }
        return d;
    }

    bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    /// Canonical display form, leading (graded-lex largest) term first;
    /// parses back to the same element.
    std::string str() const {
        if (terms_.empty()) return "0";
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
            const std::string ms = monomial_str(it->first);
            if (ms == "1") {
                out += scalar_str(a);
            } else {
                if (a != 1) out += scalar_str(a) + "*";
                out += ms;
            }
        }
        return out;
    }

    std::string monomial_str(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < pres().size(); ++i) {
            const long e = m.exp(i);
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += pres().gen(i).name;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

private:
    void check_same(const Element& o) const {
        if (pres_ != o.pres_) throw Error("elements over different presentations");
    }

    const Presentation* pres_ = nullptr;
    TermMap terms_;
};

} // namespace djd

#endif // DJD_ELEMENT_HPP
