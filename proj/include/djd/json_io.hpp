#ifndef DJD_JSON_IO_HPP
#define DJD_JSON_IO_HPP

#include "djd/element.hpp"
#include "djd/reps.hpp"
#include "djd/tensor.hpp"

#include "json.hpp"

#include <string>

namespace djd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kJsonSchema = "djd-1";

namespace detail {

inline Json exp_map(const Presentation& p, const Monomial& m) {
    Json exp = Json::object();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (m.exp(i) != 0) exp[p.gen(i).name] = m.exp(i);
    return exp;
}

} // namespace detail

/// {"schema":"djd-1","algebra":tag,"terms":[{"coeff":"p/q","exp":{...}}]},
/// terms in canonical (leading-first) order, coefficients as exact strings.
inline Json element_to_json(const Element& e, const std::string& algebra_tag) {
    Json j;
    j["schema"] = kJsonSchema;
    j["algebra"] = algebra_tag;
    Json terms = Json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        Json t;
        t["coeff"] = scalar_str(it->second);
        t["exp"] = detail::exp_map(e.pres(), it->first);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json tensor_to_json(const TensorElement& t, const std::string& algebra_tag) {
    Json j;
    j["schema"] = kJsonSchema;
    j["algebra"] = algebra_tag;
    j["legs"] = t.legs();
    Json terms = Json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        Json entry;
        entry["coeff"] = scalar_str(it->second);
        Json legs = Json::array();
        for (const Monomial& m : it->first) legs.push_back(detail::exp_map(t.pres(), m));
        entry["exp"] = std::move(legs);
        terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
    return j;
}

/// Matrices as row-major arrays of exact coefficient strings.
inline Json matrix_rep_to_json(const MatrixRep& rep) {
    Json j;
    j["schema"] = kJsonSchema;
    j["algebra"] = "dj";
    j["kind"] = "matrix-rep";
    j["dim"] = rep.dim;
    Json mats = Json::object();
    const std::pair<const char*, const MatQ*> entries[] = {
        {"x", &rep.x},   {"y", &rep.y}, {"g", &rep.g},  {"gi", &rep.gi},
        {"zeta", &rep.zeta}, {"u", &rep.u}, {"v", &rep.v}};
    for (const auto& [name, m] : entries) {
        Json rows = Json::array();
        for (const Scalar& s : m->flat()) rows.push_back(scalar_str(s));
        mats[name] = std::move(rows);
    }
    j["matrices"] = std::move(mats);
    return j;
}

inline Json wvector_to_json(const WVector& v) {
    Json j;
    j["schema"] = kJsonSchema;
    j["kind"] = "module-vector";
    j["module"] = "w";
    Json terms = Json::array();
    for (const auto& [idx, c] : v) {
        Json t;
        t["coeff"] = scalar_str(c);
        t["index"] = Json::array({idx});
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json verma_vector_to_json(const VermaVector& v) {
    Json j;
    j["schema"] = kJsonSchema;
    j["kind"] = "module-vector";
    j["module"] = "verma";
    Json terms = Json::array();
    for (const auto& [idx, c] : v) {
        Json t;
        t["coeff"] = scalar_str(c);
        t["index"] = Json::array({idx.first, idx.second});
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

} // namespace djd

#endif // DJD_JSON_IO_HPP
