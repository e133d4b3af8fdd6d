#ifndef DJD_REPORT_HPP
#define DJD_REPORT_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace djd {

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
};

/// Outcome of one verification suite.  Aggregation is order-independent:
/// rendering sorts by check id.
struct Report {
    std::string suite;
    std::vector<Check> checks;

    explicit Report(std::string name = "") : suite(std::move(name)) {}

    void add(std::string id, bool pass, std::string detail = "") {
        checks.push_back({std::move(id), pass, std::move(detail)});
    }

    void merge(const Report& other) {
        for (const Check& c : other.checks)
            checks.push_back({other.suite + "." + c.id, c.pass, c.detail});
    }

    std::size_t passed() const {
        std::size_t n = 0;
        for (const Check& c : checks) n += c.pass;
        return n;
    }

    bool ok() const { return passed() == checks.size(); }

    std::string render() const {
        std::vector<const Check*> sorted;
        sorted.reserve(checks.size());
        for (const Check& c : checks) sorted.push_back(&c);
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const Check* a, const Check* b) { return a->id < b->id; });
        std::ostringstream os;
        for (const Check* c : sorted) {
            os << (c->pass ? "PASS " : "FAIL ") << suite << "." << c->id;
            if (!c->detail.empty()) os << "  [" << c->detail << "]";
            os << "\n";
        }
        os << "suite " << suite << ": " << passed() << "/" << checks.size() << " passed\n";
        return os.str();
    }
};

} // namespace djd

#endif // DJD_REPORT_HPP
