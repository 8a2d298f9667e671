#pragma once

#include "hwtau/laurent.hpp"

#include <string>
#include <vector>

namespace hwtau {

// One verified identity on an explicit window [window_lo, window_hi] of exponents
// (or index range, for matrix checks).
struct CheckResult {
    std::string name;
    int window_lo = 0;
    int window_hi = 0;
    bool pass = true;
    std::string counterexample;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> results;
    std::vector<std::string> skipped;

    void add(CheckResult r) { results.push_back(std::move(r)); }
    void merge(const CheckReport& other);
    int failures() const;
    // At least one identity checked and none failed.
    bool ok() const { return !results.empty() && failures() == 0; }
    std::string first_failure() const;
    std::string summary() const;
};

// Compares a and b on exponents >= max(a.lo, b.lo, from). A window that lies
// entirely above both tops is reported as skipped (returns false).
bool compare_windows(CheckReport& rep, const std::string& name, const LaurentWindow& a, const LaurentWindow& b,
                     int from);

// Exact rational check.
void check_equal(CheckReport& rep, const std::string& name, const Rational& a, const Rational& b, int lo = 0,
                 int hi = 0);

}  // namespace hwtau
