#include "hwtau/report.hpp"

#include <algorithm>
#include <sstream>

namespace hwtau {

void CheckReport::merge(const CheckReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
}

int CheckReport::failures() const {
    return static_cast<int>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; }));
}

std::string CheckReport::first_failure() const {
    for (const auto& r : results)
        if (!r.pass) return r.name + ": " + r.counterexample;
    if (results.empty()) return suite + ": nothing checked";
    return "";
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << suite << ": " << results.size() << " checks, " << failures() << " failures, " << skipped.size()
       << " skipped";
    if (!ok()) os << " (" << first_failure() << ")";
    return os.str();
}

bool compare_windows(CheckReport& rep, const std::string& name, const LaurentWindow& a, const LaurentWindow& b,
                     int from) {
    const int lo = std::max({a.lo(), b.lo(), from});
    const int hi = std::max(a.hi(), b.hi());
    if (lo > hi) {
        rep.skipped.push_back(name + ": empty window");
        return false;
    }
    CheckResult r{name, lo, hi, true, ""};
    for (int e = hi; e >= lo; --e) {
        const Rational x = a.at(e);
        const Rational y = b.at(e);
        if (x != y) {
            r.pass = false;
            r.counterexample = "z^" + std::to_string(e) + ": " + x.str() + " vs " + y.str();
            break;
        }
    }
    rep.add(std::move(r));
    return true;
}

void check_equal(CheckReport& rep, const std::string& name, const Rational& a, const Rational& b, int lo, int hi) {
    CheckResult r{name, lo, hi, a == b, ""};
    if (!r.pass) r.counterexample = a.str() + " vs " + b.str();
    rep.add(std::move(r));
}

}  // namespace hwtau
