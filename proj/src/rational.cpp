#include "riordan/rational.hpp"

#include "riordan/errors.hpp"

namespace riordan {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw MathError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw MathError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

Rational Rational::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    mpq_class v(p);
    if (e < 0) v = 1 / v;
    return Rational(std::move(v));
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("zero has no multiplicative inverse");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw MathError("zero has no multiplicative inverse");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e >= 0 ? e : -e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
    mpq_class r(num, den);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace riordan
