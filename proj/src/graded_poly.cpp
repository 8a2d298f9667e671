#include "hwtau/graded_poly.hpp"

#include "hwtau/errors.hpp"

#include <sstream>

namespace hwtau {

int weight(const ExpVec& e) {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
}

int degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

ExpVec trimmed(ExpVec e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

ExpVec add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trimmed(std::move(r));
}

Monomial make_monomial(ExpVec t, ExpVec s, int grade) {
    return Monomial{trimmed(std::move(t)), trimmed(std::move(s)), grade};
}

GradedPoly::GradedPoly(int w_max, int d_max) : w_max_(w_max), d_max_(d_max) {
    if (w_max < 0 || d_max < 0) throw ConfigError("negative truncation order");
}

GradedPoly GradedPoly::one(int w_max, int d_max) {
    GradedPoly p(w_max, d_max);
    p.add_term(Monomial{}, Rational(1));
    return p;
}

bool GradedPoly::in_window(const Monomial& m) const {
    return weight(m.t) <= w_max_ && weight(m.s) <= w_max_;
}

void GradedPoly::add_term(const Monomial& m, const BetaSeries& c) {
    if (!in_window(m)) return;
    if (c.d_max() != d_max_) throw ConfigError("coefficient truncation does not match polynomial");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    add_term(m, BetaSeries::constant(c, d_max_));
}

BetaSeries GradedPoly::coeff(const ExpVec& t, const ExpVec& s, int grade) const {
    Monomial m = make_monomial(t, s, grade);
    if (!in_window(m))
        throw OutOfWindowError("coefficient requested beyond weight cutoff " + std::to_string(w_max_));
    auto it = terms_.find(m);
    return it == terms_.end() ? BetaSeries(d_max_) : it->second;
}

BetaSeries GradedPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BetaSeries(d_max_) : it->second;
}

void GradedPoly::check_compatible(const GradedPoly& o) const {
    if (w_max_ != o.w_max_ || d_max_ != o.d_max_) throw ConfigError("graded polynomials with different truncations");
}

void GradedPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it); else ++it;
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const BetaSeries& c) {
    for (auto& [m, v] : terms_) v *= c;
    prune();
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
    for (auto& [m, v] : terms_) v *= c;
    prune();
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    a.check_compatible(b);
    GradedPoly r(a.w_max_, a.d_max_);
    for (const auto& [ma, ca] : a.terms_) {
        const int wta = weight(ma.t), wsa = weight(ma.s);
        for (const auto& [mb, cb] : b.terms_) {
            if (wta + weight(mb.t) > a.w_max_ || wsa + weight(mb.s) > a.w_max_) continue;
            r.add_term(Monomial{add(ma.t, mb.t), add(ma.s, mb.s), ma.grade + mb.grade}, ca * cb);
        }
    }
    return r;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.w_max_ == b.w_max_ && a.d_max_ == b.d_max_ && a.terms_ == b.terms_;
}

std::string GradedPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << "\n";
        first = false;
        os << "g^" << m.grade << " t[";
        for (size_t i = 0; i < m.t.size(); ++i) os << (i ? "," : "") << m.t[i];
        os << "] s[";
        for (size_t i = 0; i < m.s.size(); ++i) os << (i ? "," : "") << m.s[i];
        os << "]: " << c.str();
    }
    return first ? std::string("0") : os.str();
}

namespace {

// Splits p into its constant coefficient and the rest.
std::pair<BetaSeries, GradedPoly> split_constant(const GradedPoly& p) {
    BetaSeries c0 = p.constant_term();
    GradedPoly rest(p.w_max(), p.d_max());
    for (const auto& [m, c] : p.terms())
        if (!(m == Monomial{})) rest.add_term(m, c);
    return {c0, rest};
}

}  // namespace

GradedPoly log(const GradedPoly& p) {
    auto [c0, rest] = split_constant(p);
    if (c0[0] != Rational(1)) throw DomainError("log of a graded polynomial needs constant term 1");
    rest *= inv(c0);
    GradedPoly result(p.w_max(), p.d_max());
    result.add_term(Monomial{}, log(c0));
    // rest has no constant term and positive weight, so its powers vanish eventually.
    GradedPoly power = rest;
    for (int n = 1; !power.is_zero(); ++n) {
        GradedPoly term = power;
        term *= Rational(n % 2 == 1 ? 1 : -1, n);
        result += term;
        power = power * rest;
    }
    return result;
}

GradedPoly exp(const GradedPoly& p) {
    auto [c0, rest] = split_constant(p);
    if (!c0[0].is_zero()) throw DomainError("exp of a graded polynomial needs vanishing constant term");
    GradedPoly result = GradedPoly::one(p.w_max(), p.d_max());
    GradedPoly power = GradedPoly::one(p.w_max(), p.d_max());
    for (int n = 1;; ++n) {
        power = power * rest;
        if (power.is_zero()) break;
        power *= Rational(1, n);
        result += power;
    }
    result *= exp(c0);
    return result;
}

}  // namespace hwtau
