#include "hwtau/laurent.hpp"

#include "hwtau/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hwtau {

LaurentWindow::LaurentWindow(int lo, int hi) : lo_(lo), hi_(std::max(hi, lo - 1)) {
    c_.assign(static_cast<size_t>(hi_ - lo_ + 1), Rational(0));
}

LaurentWindow LaurentWindow::monomial(const Rational& c, int e, int lo) {
    LaurentWindow w(lo, std::max(e, lo));
    if (e >= lo) w.set(e, c);
    return w;
}

Rational LaurentWindow::at(int e) const {
    if (e < lo_)
        throw OutOfWindowError("z^" + std::to_string(e) + " lies below the valid window (lo=" +
                               std::to_string(lo_) + ")");
    if (e > hi_) return Rational(0);
    return c_[e - lo_];
}

void LaurentWindow::set(int e, const Rational& v) {
    if (e < lo_) return;
    if (e > hi_) {
        if (v.is_zero()) return;
        c_.resize(static_cast<size_t>(e - lo_ + 1), Rational(0));
        hi_ = e;
    }
    c_[e - lo_] = v;
}

void LaurentWindow::add_to(int e, const Rational& v) {
    if (e < lo_ || v.is_zero()) return;
    set(e, at(e) + v);
}

int LaurentWindow::top() const {
    for (int e = hi_; e >= lo_; --e)
        if (!c_[e - lo_].is_zero()) return e;
    return lo_ - 1;
}

bool LaurentWindow::is_zero() const { return top() < lo_; }

LaurentWindow& LaurentWindow::operator+=(const LaurentWindow& o) {
    LaurentWindow r(std::max(lo_, o.lo_), std::max(hi_, o.hi_));
    for (int e = r.lo_; e <= r.hi_; ++e) r.set(e, at(e) + o.at(e));
    return *this = std::move(r);
}

LaurentWindow& LaurentWindow::operator-=(const LaurentWindow& o) {
    LaurentWindow r(std::max(lo_, o.lo_), std::max(hi_, o.hi_));
    for (int e = r.lo_; e <= r.hi_; ++e) r.set(e, at(e) - o.at(e));
    return *this = std::move(r);
}

LaurentWindow& LaurentWindow::operator*=(const Rational& c) {
    for (auto& x : c_) x *= c;
    return *this;
}

LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b) {
    const int lo = std::max(a.lo_ + b.hi_, b.lo_ + a.hi_);
    const int hi = a.hi_ + b.hi_;
    LaurentWindow r(lo, hi);
    for (int i = a.lo_; i <= a.hi_; ++i) {
        const Rational& x = a.c_[i - a.lo_];
        if (x.is_zero()) continue;
        for (int j = std::max(b.lo_, lo - i); j <= b.hi_; ++j) {
            const Rational& y = b.c_[j - b.lo_];
            if (!y.is_zero()) r.c_[i + j - lo] += x * y;
        }
    }
    return r;
}

LaurentWindow LaurentWindow::shifted(int k) const {
    LaurentWindow r = *this;
    r.lo_ += k;
    r.hi_ += k;
    return r;
}

LaurentWindow LaurentWindow::map_monomials(int step, const std::function<Rational(int)>& f) const {
    LaurentWindow r(lo_ + step, hi_ + step);
    for (int e = lo_; e <= hi_; ++e) {
        const Rational& x = c_[e - lo_];
        if (!x.is_zero()) r.c_[e - lo_] = x * f(e);
    }
    return r;
}

LaurentWindow LaurentWindow::restricted(int new_lo) const {
    if (new_lo < lo_) throw OutOfWindowError("cannot extend a window downward");
    LaurentWindow r(new_lo, hi_);
    for (int e = new_lo; e <= hi_; ++e) r.c_[e - new_lo] = c_[e - lo_];
    return r;
}

std::string LaurentWindow::str() const {
    std::ostringstream os;
    bool first = true;
    for (int e = hi_; e >= lo_; --e) {
        const Rational& x = c_[e - lo_];
        if (x.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << x << "*z^" << e;
    }
    if (first) os << "0";
    os << " + O(z^" << lo_ - 1 << ")";
    return os.str();
}

bool agree(const LaurentWindow& a, const LaurentWindow& b, int from, int* where) {
    const int lo = std::max({a.lo(), b.lo(), from});
    const int hi = std::max(a.hi(), b.hi());
    for (int e = hi; e >= lo; --e) {
        if (a.at(e) != b.at(e)) {
            if (where) *where = e;
            return false;
        }
    }
    return true;
}

}  // namespace hwtau
