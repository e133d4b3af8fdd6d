// Acceptance suite: one line per criterion, spec-pinned parameters, exact
// (zero-tolerance) checks throughout.  Exit code 0 iff every criterion
// passes.

#include "djd/djd.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace djd;

namespace {

struct Criterion {
    int number;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<Criterion> results;

template <class F>
void criterion(int number, const std::string& name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = body();
        pass = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back({number, name, pass, detail, secs});
    std::cout << "[" << number << "] " << name << ": " << (pass ? "PASS" : "FAIL") << " ("
              << detail << ") [" << std::fixed << std::setprecision(2) << secs << "s]"
              << std::endl;
}

std::string require(const Report& r) {
    if (!r.ok()) {
        std::string bad;
        for (const Check& c : r.checks)
            if (!c.pass) bad += " " + c.id;
        throw Error("failed:" + bad);
    }
    return std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " checks";
}

std::string merge_require(const std::vector<Report>& rs) {
    std::size_t total = 0;
    for (const Report& r : rs) {
        require(r);
        total += r.checks.size();
    }
    return std::to_string(total) + " checks";
}

} // namespace

int main() {
    std::cout << "djd acceptance suite (exact arithmetic over Q, zero tolerance)\n";

    criterion(1, "relations+confluence", [] {
        const Report rels = run_suite("relations");
        require(rels);
        const ConfluenceReport dj = check_local_confluence(dj_presentation());
        const ConfluenceReport sl2 = check_local_confluence(sl2_presentation());
        const ConfluenceReport a2s = check_local_confluence(a2s_presentation());
        if (!dj.ok() || !sl2.ok() || !a2s.ok()) throw Error("confluence failure");
        if (dj.triples != 343) throw Error("dj must expose 7 letters (343 triples)");
        std::ostringstream os;
        os << rels.checks.size() << " relations, " << (dj.triples + sl2.triples + a2s.triples)
           << " triples";
        return os.str();
    });

    criterion(2, "hopf axioms + S^2 = g^-1 h g", [] {
        return require(verify_hopf(dj_hopf(), /*samples=*/20, /*seed=*/7));
    });

    criterion(3, "closed commutation formulas (n,m <= 8; |g-exp| <= 4, l <= 6)", [] {
        return require(formula_oracles(8, 8, 4, 6));
    });

    criterion(4, "ore tower (15 identities)", [] {
        const Report r = ore_tower_check();
        if (r.checks.size() != 15) throw Error("expected 15 identities");
        return require(r);
    });

    criterion(5, "normal/central elements + center relations", [] {
        return merge_require({run_suite("normal-central"), run_suite("center-relation"),
                              run_suite("center-independence")});
    });

    criterion(6, "pi: D -> U(sl2) with L_n pullback (n <= 8)", [] {
        SuiteOptions o;
        o.max_n = 8;
        return require(run_suite("pi", o));
    });

    criterion(7, "phi: D -> A'_2(S) with center bookkeeping", [] {
        SuiteOptions o;
        o.samples = 30;
        o.seed = 7;
        return require(run_suite("phi", o));
    });

    criterion(8, "modules: L_n, W, Verma, g-1 nilpotency, K_n", [] {
        SuiteOptions ln_o;
        ln_o.max_n = 6;
        SuiteOptions w_o;
        w_o.max_n = 6;
        SuiteOptions verma_o;
        verma_o.max_n = 6;
        SuiteOptions g1_o;
        g1_o.depth = 8;
        SuiteOptions kn_o;
        kn_o.max_n = 4;
        kn_o.depth = 6;
        return merge_require({run_suite("ln", ln_o), run_suite("w-modules", w_o),
                              run_suite("verma", verma_o), run_suite("g1-nilpotency", g1_o),
                              run_suite("kn", kn_o)});
    });

    criterion(9, "determinism of `verify all --seed 7`", [] {
        SuiteOptions o;
        o.seed = 7;
        auto render = [&] {
            std::ostringstream os;
            for (const Report& r : run_all_suites(o)) os << r.render();
            return os.str();
        };
        const std::string first = render();
        const std::string second = render();
        if (first != second) throw Error("reports differ between runs");
        return std::string("byte-identical (") + std::to_string(first.size()) + " bytes)";
    });

    std::size_t passed = 0;
    for (const Criterion& c : results) passed += c.pass;
    std::cout << "ACCEPTANCE: " << passed << "/" << results.size() << " criteria passed"
              << std::endl;
    return passed == results.size() ? 0 : 1;
}
