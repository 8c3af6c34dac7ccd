#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace riordan {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. This is the coefficient field for everything else
/// in the library; no floating point appears anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses "p" or "p/q" with optional sign, arbitrary precision.
    static Rational parse(std::string_view text);

    static Rational factorial(unsigned long n);
    /// Conventional binomial: 0 outside 0 <= k <= n.
    static Rational binomial(long n, long k);
    /// 2^e for any integer e (negative allowed).
    static Rational pow2(long e);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Multiplicative inverse; throws MathError on zero.
    Rational inverse() const;
    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow(long e) const;

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

}  // namespace riordan
