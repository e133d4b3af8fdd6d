// djd -- command-line front end for the double-of-the-Jordan-plane engine.
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage or parse
// errors.

#include "djd/djd.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace djd;

const Presentation& algebra_by_tag(const std::string& tag) {
    if (tag == "dj") return dj_presentation();
    if (tag == "sl2") return sl2_presentation();
    if (tag == "a2s") return a2s_presentation();
    throw ParseError("unknown algebra '" + tag + "'", 0);
}

// "z(1,0)", "x(2)", with optional rational coefficients and sums:
// "2*z(0,0) - 1/2*z(1,1)".
struct VectorSpec {
    std::vector<std::pair<Scalar, std::vector<long>>> terms;
};

VectorSpec parse_vector(const std::string& text, const std::string& want_name,
                        std::size_t arity) {
    VectorSpec out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() {
        skip_ws();
        const std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected integer in vector", i);
        return std::stol(text.substr(start, i - start));
    };
    skip_ws();
    while (i < text.size()) {
        Scalar sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!out.terms.empty()) {
            throw ParseError("expected '+' or '-' between vector terms", i);
        }
        Scalar coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::size_t start = i;
            while (i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                ++i;
            coeff = parse_scalar(text.substr(start, i - start));
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        const std::size_t nstart = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
        const std::string name = text.substr(nstart, i - nstart);
        if (name != want_name)
            throw ParseError("expected basis vector '" + want_name + "(...)'", nstart);
        skip_ws();
        if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<long> idx;
        for (std::size_t k = 0; k < arity; ++k) {
            idx.push_back(read_int());
            skip_ws();
            if (k + 1 < arity) {
                if (i >= text.size() || text[i] != ',') throw ParseError("expected ','", i);
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
        ++i;
        out.terms.push_back({sign * coeff, idx});
        skip_ws();
    }
    if (out.terms.empty()) throw ParseError("empty vector", 0);
    return out;
}

std::string format_wvector(const WVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : v) {
        const bool neg = c < 0;
        const Scalar a = neg ? Scalar(-c) : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        os << scalar_str(a) << "·x(" << idx << ")";
    }
    return os.str();
}

std::string format_verma_vector(const VermaVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : v) {
        const bool neg = c < 0;
        const Scalar a = neg ? Scalar(-c) : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        os << scalar_str(a) << "·z(" << idx.first << "," << idx.second << ")";
    }
    return os.str();
}

std::string format_matrix(const MatQ& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << scalar_str(m.at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for the Drinfeld double of the Jordan plane"};
    app.require_subcommand(1);

    std::string algebra = "dj";
    std::string expr1, expr2;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "Algebra: dj, sl2 or a2s")->capture_default_str();
        cmd->add_flag("--json", as_json, "Emit JSON");
    };

    auto* nf = app.add_subcommand("nf", "Normal form of an expression");
    nf->add_option("expr", expr1, "Expression")->required();
    add_common(nf);

    auto* delta = app.add_subcommand("delta", "Coproduct of an expression");
    delta->add_option("expr", expr1, "Expression")->required();
    add_common(delta);

    auto* anti = app.add_subcommand("antipode", "Antipode of an expression");
    anti->add_option("expr", expr1, "Expression")->required();
    add_common(anti);

    auto* comm = app.add_subcommand("commutator", "Commutator [a, b]");
    comm->add_option("a", expr1, "First expression")->required();
    comm->add_option("b", expr2, "Second expression")->required();
    add_common(comm);

    std::string suite;
    SuiteOptions opts;
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--max-n", opts.max_n, "Override the suite's range bound");
    verify->add_option("--depth", opts.depth, "Override the module truncation depth");
    verify->add_option("--samples", opts.samples, "Override the fuzzing sample count");
    verify->add_option("--seed", opts.seed, "Random seed (default 7)");

    long rep_n = 0;
    auto* repc = app.add_subcommand("rep", "Generator matrices of the simple module L_n");
    repc->add_option("n", rep_n, "Highest weight")->required();
    add_common(repc);

    std::string module_kind, a_str = "1", b_str = "0", c_str = "0", vector_str;
    long depth = 8;
    auto* act = app.add_subcommand("act", "Act on an induced-module vector");
    act->add_option("expr", expr1, "Element to act with")->required();
    act->add_option("--module", module_kind, "Module kind: verma or w")->required();
    act->add_option("--a", a_str, "Parameter a (nonzero)");
    act->add_option("--b", b_str, "Parameter b (w modules)");
    act->add_option("--c", c_str, "Parameter c (verma modules)");
    act->add_option("--vector", vector_str, "Basis vector, e.g. z(1,0) or x(2)")->required();
    act->add_option("--depth", depth, "Truncation depth");
    act->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*nf) {
            const Element e = parse_element(expr1, algebra_by_tag(algebra));
            std::cout << (as_json ? element_to_json(e, algebra).dump(2) : e.str()) << "\n";
            return 0;
        }
        if (*delta || *anti) {
            const Presentation& p = algebra_by_tag(algebra);
            if (&p == &a2s_presentation())
                throw ParseError("a2s carries no Hopf structure", 0);
            const HopfData& h = (&p == &dj_presentation()) ? dj_hopf() : sl2_hopf();
            const Element e = parse_element(expr1, p);
            if (*delta) {
                const TensorElement t = coproduct(h, e);
                std::cout << (as_json ? tensor_to_json(t, algebra).dump(2) : t.str()) << "\n";
            } else {
                const Element s = antipode(h, e);
                std::cout << (as_json ? element_to_json(s, algebra).dump(2) : s.str()) << "\n";
            }
            return 0;
        }
        if (*comm) {
            const Presentation& p = algebra_by_tag(algebra);
            const Element e =
                commutator(parse_element(expr1, p), parse_element(expr2, p));
            std::cout << (as_json ? element_to_json(e, algebra).dump(2) : e.str()) << "\n";
            return 0;
        }
        if (*verify) {
            if (suite != "all") {
                const auto& names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end())
                    throw ParseError("unknown suite '" + suite + "'", 0);
            }
            std::vector<Report> reports;
            if (suite == "all")
                reports = run_all_suites(opts);
            else
                reports.push_back(run_suite(suite, opts));
            std::size_t total = 0, passed = 0;
            for (const Report& r : reports) {
                std::cout << r.render();
                total += r.checks.size();
                passed += r.passed();
            }
            std::cout << "verify: " << passed << "/" << total << " checks passed\n";
            return passed == total ? 0 : 1;
        }
        if (*repc) {
            const MatrixRep rep = build_Ln(rep_n);
            if (as_json) {
                Json j = matrix_rep_to_json(rep);
                j["n"] = rep_n;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "L_" << rep_n << ": dim " << rep.dim << "\n";
                const std::pair<const char*, const MatQ*> entries[] = {
                    {"x", &rep.x},   {"y", &rep.y}, {"g", &rep.g},  {"gi", &rep.gi},
                    {"zeta", &rep.zeta}, {"u", &rep.u}, {"v", &rep.v}};
                for (const auto& [name, m] : entries)
                    std::cout << name << " = " << format_matrix(*m) << "\n";
            }
            return 0;
        }
        if (*act) {
            const Element e = parse_element(expr1, dj_presentation());
            if (module_kind == "w") {
                const WModuleSpec spec{parse_scalar(a_str), parse_scalar(b_str), depth};
                const WModule W(spec);
                WVector vec;
                for (const auto& [c, idx] : parse_vector(vector_str, "x", 1).terms)
                    vec[idx[0]] += c;
                const WVector out = W.act(e, vec);
                std::cout << (as_json ? wvector_to_json(out).dump(2) : format_wvector(out))
                          << "\n";
            } else if (module_kind == "verma") {
                const VermaSpec spec{parse_scalar(a_str), parse_scalar(c_str), depth};
                const VermaModule M(spec);
                VermaVector vec;
                for (const auto& [c, idx] : parse_vector(vector_str, "z", 2).terms)
                    vec[{idx[0], idx[1]}] += c;
                const VermaVector out = M.act(e, vec);
                std::cout << (as_json ? verma_vector_to_json(out).dump(2)
                                      : format_verma_vector(out))
                          << "\n";
            } else {
                throw ParseError("unknown module kind '" + module_kind + "'", 0);
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
