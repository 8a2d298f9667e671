#include "hwtau/series.hpp"

#include "hwtau/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hwtau {

namespace {

const Rational& zero_rational() {
    static const Rational z(0);
    return z;
}

void require_same(const BetaSeries& a, const BetaSeries& b) {
    if (a.d_max() != b.d_max())
        throw ConfigError("beta series truncation mismatch: " + std::to_string(a.d_max()) + " vs " +
                          std::to_string(b.d_max()));
}

}  // namespace

BetaSeries::BetaSeries(int d_max) {
    if (d_max < 0) throw ConfigError("negative beta truncation order");
    c_.assign(static_cast<size_t>(d_max) + 1, Rational(0));
}

BetaSeries::BetaSeries(int d_max, std::vector<Rational> coeffs) : BetaSeries(d_max) {
    for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

BetaSeries BetaSeries::constant(const Rational& c, int d_max) {
    BetaSeries s(d_max);
    s.c_[0] = c;
    return s;
}

BetaSeries BetaSeries::monomial(const Rational& c, int power, int d_max) {
    BetaSeries s(d_max);
    if (power >= 0 && power <= d_max) s.c_[power] = c;
    return s;
}

const Rational& BetaSeries::operator[](int i) const {
    if (i < 0 || i > d_max()) return zero_rational();
    return c_[i];
}

void BetaSeries::set(int i, const Rational& v) {
    if (i >= 0 && i <= d_max()) c_[i] = v;
}

void BetaSeries::add_to(int i, const Rational& v) {
    if (i >= 0 && i <= d_max()) c_[i] += v;
}

bool BetaSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

int BetaSeries::order() const {
    for (int i = 0; i <= d_max(); ++i)
        if (!c_[i].is_zero()) return i;
    return d_max() + 1;
}

BetaSeries& BetaSeries::operator+=(const BetaSeries& o) {
    require_same(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BetaSeries& BetaSeries::operator-=(const BetaSeries& o) {
    require_same(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

BetaSeries& BetaSeries::operator*=(const BetaSeries& o) {
    require_same(*this, o);
    const int n = d_max();
    std::vector<Rational> r(c_.size(), Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    return *this;
}

BetaSeries& BetaSeries::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

BetaSeries BetaSeries::operator-() const {
    BetaSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const BetaSeries& a, const BetaSeries& b) {
    return a.d_max() == b.d_max() && a.c_ == b.c_;
}

BetaSeries BetaSeries::scaled(const Rational& factor) const {
    BetaSeries r = *this;
    Rational f(1);
    for (auto& x : r.c_) {
        x *= f;
        f *= factor;
    }
    return r;
}

BetaSeries BetaSeries::euler() const {
    BetaSeries r = *this;
    for (int i = 0; i <= d_max(); ++i) r.c_[i] *= Rational(i);
    return r;
}

BetaSeries BetaSeries::truncated(int d) const {
    BetaSeries r(d);
    for (int i = 0; i <= d && i <= d_max(); ++i) r.c_[i] = c_[i];
    return r;
}

BetaSeries BetaSeries::shifted(int k) const {
    if (k < 0) throw DomainError("negative shift of a beta series");
    BetaSeries r(d_max());
    for (int i = 0; i + k <= d_max(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::string BetaSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= d_max(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i == 1) os << "*b";
        if (i > 1) os << "*b^" << i;
    }
    if (first) os << "0";
    os << " + O(b^" << d_max() + 1 << ")";
    return os.str();
}

BetaSeries inv(const BetaSeries& a) {
    if (a[0].is_zero()) throw DomainError("series with zero constant term is not invertible");
    const int n = a.d_max();
    BetaSeries r(n);
    const Rational c0inv = Rational(1) / a[0];
    r.set(0, c0inv);
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r.set(k, -s * c0inv);
    }
    return r;
}

BetaSeries log(const BetaSeries& a) {
    if (a[0] != Rational(1)) throw DomainError("log needs constant term 1, got " + a[0].str());
    // b = log a satisfies a b' = a', solved coefficientwise.
    const int n = a.d_max();
    BetaSeries b(n);
    for (int k = 1; k <= n; ++k) {
        Rational s = Rational(k) * a[k];
        for (int j = 1; j < k; ++j) s -= Rational(j) * b[j] * a[k - j];
        b.set(k, s / Rational(k));
    }
    return b;
}

BetaSeries exp(const BetaSeries& a) {
    if (!a[0].is_zero()) throw DomainError("exp needs constant term 0, got " + a[0].str());
    const int n = a.d_max();
    BetaSeries e(n);
    e.set(0, Rational(1));
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) s += Rational(j) * a[j] * e[k - j];
        e.set(k, s / Rational(k));
    }
    return e;
}

BetaSeries pow(const BetaSeries& a, unsigned e) {
    BetaSeries r = BetaSeries::constant(Rational(1), a.d_max());
    BetaSeries b = a;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Rational BetaLaurent::at(int p) const {
    return body[p - offset];
}

std::string BetaLaurent::str() const {
    if (offset == 0) return body.str();
    return "b^" + std::to_string(offset) + "*(" + body.str() + ")";
}

namespace {

BetaLaurent combine(const BetaLaurent& a, const BetaLaurent& b, int sign) {
    const int lo = std::min(a.offset, b.offset);
    const int hi = std::min(a.max_power(), b.max_power());
    BetaLaurent r{lo, BetaSeries(std::max(hi - lo, 0))};
    for (int p = lo; p <= hi; ++p) {
        Rational v = a.at(p);
        if (sign > 0) v += b.at(p); else v -= b.at(p);
        r.body.set(p - lo, v);
    }
    return r;
}

}  // namespace

BetaLaurent operator+(const BetaLaurent& a, const BetaLaurent& b) { return combine(a, b, 1); }
BetaLaurent operator-(const BetaLaurent& a, const BetaLaurent& b) { return combine(a, b, -1); }

BetaLaurent operator*(const BetaLaurent& a, const BetaLaurent& b) {
    const int lo = a.offset + b.offset;
    const int hi = std::min(a.offset + b.max_power(), b.offset + a.max_power());
    BetaLaurent r{lo, BetaSeries(std::max(hi - lo, 0))};
    for (int i = 0; i <= a.body.d_max(); ++i) {
        if (a.body[i].is_zero()) continue;
        for (int j = 0; j <= b.body.d_max(); ++j)
            if (i + j <= hi - lo) r.body.add_to(i + j, a.body[i] * b.body[j]);
    }
    return r;
}

bool equal_through(const BetaLaurent& a, const BetaLaurent& b, int max_power) {
    const int lo = std::min(a.offset, b.offset);
    for (int p = lo; p <= max_power; ++p)
        if (a.at(p) != b.at(p)) return false;
    return true;
}

}  // namespace hwtau
