#pragma once

#include <vector>

#include "riordan/poly.hpp"

namespace riordan {

/// Truncated formal power series: coefficients 0..order in one abstract
/// series variable, with Poly coefficients. Arithmetic never reports an
/// order larger than the smallest input order.
class Series {
public:
    explicit Series(int order);
    Series(int order, std::vector<Poly> coeffs);

    static Series constant(int order, Poly c);
    static Series one(int order) { return constant(order, Poly::one()); }
    /// The series variable itself.
    static Series identity(int order);

    int order() const { return order_; }
    /// Coefficient of the n-th power; throws MathError beyond the order.
    const Poly& coeff(int n) const;
    void set_coeff(int n, Poly p);
    const std::vector<Poly>& coeffs() const { return c_; }

    bool is_zero() const;
    Series truncated(int new_order) const;
    /// Division by the series variable: requires coeff(0) == 0, drops one order.
    Series shifted_down() const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string str() const;

private:
    int order_;
    std::vector<Poly> c_;
};

Series add(const Series& s, const Series& t);
Series sub(const Series& s, const Series& t);
Series neg(const Series& s);
Series scalar_mul(const Series& s, const Poly& c, const Ctx& ctx = Ctx::exact());

/// Cauchy product at the smaller order.
Series mul(const Series& s, const Series& t, const Ctx& ctx = Ctx::exact());

/// Multiplicative inverse; requires an invertible constant coefficient.
Series inverse(const Series& s, const Ctx& ctx = Ctx::exact());

/// outer(inner) by Horner accumulation; inner must have zero constant term.
Series compose(const Series& outer, const Series& inner, const Ctx& ctx = Ctx::exact());

/// Compositional inverse, solved order by order; requires coeff(0) == 0 and
/// invertible coeff(1).
Series revert(const Series& h, const Ctx& ctx = Ctx::exact());

Series power(const Series& s, int k, const Ctx& ctx = Ctx::exact());

/// exp of a series with zero constant term, as the finite truncated sum of
/// s^k / k!.
Series exp_series(const Series& s, const Ctx& ctx = Ctx::exact());

}  // namespace riordan
