#pragma once

#include "hwtau/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hwtau {

// Laurent series in z known exactly for exponents >= lo and identically zero
// above hi. Exponents below lo are unknown (truncated away).
class LaurentWindow {
public:
    LaurentWindow(int lo, int hi);

    static LaurentWindow monomial(const Rational& c, int e, int lo);

    int lo() const { return lo_; }
    int hi() const { return hi_; }

    // Throws OutOfWindowError below lo; zero above hi.
    Rational at(int e) const;
    void set(int e, const Rational& v);
    void add_to(int e, const Rational& v);

    // Leading exponent with nonzero coefficient, or lo-1 if all zero.
    int top() const;
    bool is_zero() const;

    LaurentWindow& operator+=(const LaurentWindow& o);
    LaurentWindow& operator-=(const LaurentWindow& o);
    LaurentWindow& operator*=(const Rational& c);
    friend LaurentWindow operator+(LaurentWindow a, const LaurentWindow& b) { return a += b; }
    friend LaurentWindow operator-(LaurentWindow a, const LaurentWindow& b) { return a -= b; }
    friend LaurentWindow operator*(LaurentWindow a, const Rational& c) { return a *= c; }
    friend LaurentWindow operator*(const Rational& c, LaurentWindow a) { return a *= c; }
    friend LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b);

    // Multiply by z^k.
    LaurentWindow shifted(int k) const;
    // z^i -> f(i) z^{i+step}; the valid range moves with the step.
    LaurentWindow map_monomials(int step, const std::function<Rational(int)>& f) const;
    // Keep only exponents >= new_lo (must not lower lo).
    LaurentWindow restricted(int new_lo) const;
    // Coefficient of z^{-1}.
    Rational residue() const { return at(-1); }

    std::vector<Rational> coeffs() const { return c_; }
    std::string str() const;

private:
    int lo_;
    int hi_;
    std::vector<Rational> c_;
};

// Equality on [max(a.lo, b.lo, from), inf); returns the first differing exponent via *where.
bool agree(const LaurentWindow& a, const LaurentWindow& b, int from, int* where = nullptr);

}  // namespace hwtau
