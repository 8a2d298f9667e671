#pragma once

#include "hwtau/rational.hpp"

#include <string>
#include <vector>

namespace hwtau {

// Truncated power series in beta: coefficients of beta^0 .. beta^d_max.
class BetaSeries {
public:
    BetaSeries() : c_(1) {}
    explicit BetaSeries(int d_max);
    BetaSeries(int d_max, std::vector<Rational> coeffs);

    static BetaSeries constant(const Rational& c, int d_max);
    static BetaSeries monomial(const Rational& c, int power, int d_max);

    int d_max() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const;
    // Out-of-range writes above d_max are ignored (silent truncation).
    void set(int i, const Rational& v);
    void add_to(int i, const Rational& v);
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    int order() const;  // lowest nonzero index, or d_max+1 for the zero series

    BetaSeries& operator+=(const BetaSeries& o);
    BetaSeries& operator-=(const BetaSeries& o);
    BetaSeries& operator*=(const BetaSeries& o);
    BetaSeries& operator*=(const Rational& r);

    friend BetaSeries operator+(BetaSeries a, const BetaSeries& b) { return a += b; }
    friend BetaSeries operator-(BetaSeries a, const BetaSeries& b) { return a -= b; }
    friend BetaSeries operator*(BetaSeries a, const BetaSeries& b) { return a *= b; }
    friend BetaSeries operator*(BetaSeries a, const Rational& r) { return a *= r; }
    friend BetaSeries operator*(const Rational& r, BetaSeries a) { return a *= r; }
    BetaSeries operator-() const;

    friend bool operator==(const BetaSeries& a, const BetaSeries& b);

    // Substitution beta -> factor*beta.
    BetaSeries scaled(const Rational& factor) const;
    // beta d/dbeta
    BetaSeries euler() const;
    BetaSeries truncated(int d_max) const;
    // Multiply by beta^k (k >= 0), dropping what falls beyond d_max.
    BetaSeries shifted(int k) const;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

BetaSeries inv(const BetaSeries& a);
BetaSeries log(const BetaSeries& a);
BetaSeries exp(const BetaSeries& a);
BetaSeries pow(const BetaSeries& a, unsigned e);

// beta^offset * body: a finite Laurent tail in beta. The body keeps the
// caller's d_max relative to beta^0, i.e. exact powers are offset .. d_max.
struct BetaLaurent {
    int offset = 0;
    BetaSeries body;

    // Coefficient of beta^p for offset <= p; zero below offset.
    Rational at(int p) const;
    int max_power() const { return offset + body.d_max(); }
    bool is_zero() const { return body.is_zero(); }
    std::string str() const;
};

// Exactness-preserving sum: result is valid up to the smaller max_power.
BetaLaurent operator+(const BetaLaurent& a, const BetaLaurent& b);
BetaLaurent operator-(const BetaLaurent& a, const BetaLaurent& b);
BetaLaurent operator*(const BetaLaurent& a, const BetaLaurent& b);
bool equal_through(const BetaLaurent& a, const BetaLaurent& b, int max_power);

}  // namespace hwtau
