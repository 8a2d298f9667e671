#pragma once

#include "hwtau/series.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hwtau {

// Exponent vector e with e[i] the power of x_{i+1}; weight(x_i) = i. Trailing zeros are trimmed.
using ExpVec = std::vector<int>;

int weight(const ExpVec& e);
int degree(const ExpVec& e);
ExpVec trimmed(ExpVec e);
ExpVec add(const ExpVec& a, const ExpVec& b);

struct Monomial {
    ExpVec t;
    ExpVec s;
    int grade = 0;

    auto operator<=>(const Monomial&) const = default;
};

Monomial make_monomial(ExpVec t, ExpVec s, int grade);

// Polynomial in t and s over BetaSeries with an integer gamma grade, truncated
// at weight w_max separately in each alphabet.
class GradedPoly {
public:
    using Terms = std::map<Monomial, BetaSeries>;

    GradedPoly(int w_max, int d_max);

    static GradedPoly one(int w_max, int d_max);

    int w_max() const { return w_max_; }
    int d_max() const { return d_max_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c to the coefficient of m; keys beyond w_max are silently dropped.
    void add_term(const Monomial& m, const BetaSeries& c);
    void add_term(const Monomial& m, const Rational& c);

    // Throws OutOfWindowError for keys beyond the truncation.
    BetaSeries coeff(const ExpVec& t, const ExpVec& s, int grade) const;
    BetaSeries constant_term() const;

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const BetaSeries& c);
    GradedPoly& operator*=(const Rational& c);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

    bool in_window(const Monomial& m) const;
    std::string str() const;

private:
    void check_compatible(const GradedPoly& o) const;
    void prune();

    int w_max_;
    int d_max_;
    Terms terms_;
};

GradedPoly log(const GradedPoly& p);
GradedPoly exp(const GradedPoly& p);

}  // namespace hwtau
