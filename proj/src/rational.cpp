#include "hwtau/rational.hpp"

#include "hwtau/errors.hpp"

namespace hwtau {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base.is_zero()) throw DomainError("zero to a negative power");
        return Rational(1) / pow(base, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace hwtau
