#include "riordan/series.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

Series::Series(int order) : order_(order) {
    if (order < 0) throw MathError("series order must be nonnegative");
    c_.resize(static_cast<size_t>(order) + 1);
}

Series::Series(int order, std::vector<Poly> coeffs) : Series(order) {
    if (coeffs.size() > c_.size())
        coeffs.resize(c_.size());
    std::move(coeffs.begin(), coeffs.end(), c_.begin());
}

Series Series::constant(int order, Poly c) {
    Series s(order);
    s.c_[0] = std::move(c);
    return s;
}

Series Series::identity(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = Poly::one();
    return s;
}

const Poly& Series::coeff(int n) const {
    if (n < 0 || n > order_)
        throw MathError("series coefficient index " + std::to_string(n) +
                        " beyond truncation order " + std::to_string(order_));
    return c_[static_cast<size_t>(n)];
}

void Series::set_coeff(int n, Poly p) {
    if (n < 0 || n > order_)
        throw MathError("series coefficient index " + std::to_string(n) +
                        " beyond truncation order " + std::to_string(order_));
    c_[static_cast<size_t>(n)] = std::move(p);
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

Series Series::truncated(int new_order) const {
    if (new_order > order_) throw MathError("cannot extend a truncated series");
    Series s(new_order);
    for (int n = 0; n <= new_order; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
    return s;
}

Series Series::shifted_down() const {
    if (!c_[0].is_zero()) throw MathError("series is not divisible by its variable");
    if (order_ == 0) throw MathError("cannot shift an order-0 series");
    Series s(order_ - 1);
    for (int n = 1; n <= order_; ++n) s.c_[static_cast<size_t>(n - 1)] = c_[static_cast<size_t>(n)];
    return s;
}

std::string Series::str() const {
    std::ostringstream os;
    os << '[';
    for (int n = 0; n <= order_; ++n) {
        if (n) os << ", ";
        os << c_[static_cast<size_t>(n)].str();
    }
    os << ']';
    return os.str();
}

namespace {
int common_order(const Series& s, const Series& t) { return std::min(s.order(), t.order()); }
}  // namespace

Series add(const Series& s, const Series& t) {
    const int n = common_order(s, t);
    Series r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, s.coeff(i) + t.coeff(i));
    return r;
}

Series sub(const Series& s, const Series& t) {
    const int n = common_order(s, t);
    Series r(n);
    for (int i = 0; i <= n; ++i) r.set_coeff(i, s.coeff(i) - t.coeff(i));
    return r;
}

Series neg(const Series& s) {
    Series r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.set_coeff(i, -s.coeff(i));
    return r;
}

Series scalar_mul(const Series& s, const Poly& c, const Ctx& ctx) {
    Series r(s.order());
    for (int i = 0; i <= s.order(); ++i) r.set_coeff(i, Poly::mul(s.coeff(i), c, ctx));
    return r;
}

Series mul(const Series& s, const Series& t, const Ctx& ctx) {
    const int n = common_order(s, t);
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        Poly acc;
        for (int k = 0; k <= i; ++k) acc += Poly::mul(s.coeff(k), t.coeff(i - k), ctx);
        r.set_coeff(i, std::move(acc));
    }
    return r;
}

Series inverse(const Series& s, const Ctx& ctx) {
    const Poly c0inv = s.coeff(0).inverse(ctx);  // reports non-invertible constant term
    const int n = s.order();
    Series r(n);
    r.set_coeff(0, c0inv);
    for (int i = 1; i <= n; ++i) {
        Poly acc;
        for (int k = 1; k <= i; ++k) acc += Poly::mul(s.coeff(k), r.coeff(i - k), ctx);
        r.set_coeff(i, -Poly::mul(c0inv, acc, ctx));
    }
    return r;
}

Series compose(const Series& outer, const Series& inner, const Ctx& ctx) {
    if (!inner.coeff(0).is_zero())
        throw MathError("composition requires zero constant term of the inner series");
    const int n = common_order(outer, inner);
    Series r = Series::constant(n, outer.coeff(n));
    for (int k = n - 1; k >= 0; --k) {
        r = mul(r, inner.truncated(n), ctx);
        r.set_coeff(0, r.coeff(0) + outer.coeff(k));
    }
    return r;
}

Series revert(const Series& h, const Ctx& ctx) {
    if (!h.coeff(0).is_zero())
        throw MathError("reversion requires zero constant term");
    if (h.order() < 1 || !h.coeff(1).is_q_unit())
        throw MathError("reversion requires an invertible linear coefficient");
    const int n = h.order();
    const Poly h1inv = h.coeff(1).inverse(ctx);
    // Solve compose(h, g) = identity order by order.
    Series g(n);
    g.set_coeff(1, h1inv);
    for (int m = 2; m <= n; ++m) {
        const Poly cm = compose(h.truncated(m), g.truncated(m), ctx).coeff(m);
        g.set_coeff(m, -Poly::mul(h1inv, cm, ctx));
    }
    return g;
}

Series power(const Series& s, int k, const Ctx& ctx) {
    if (k < 0) throw MathError("negative series power");
    Series r = Series::one(s.order());
    for (int i = 0; i < k; ++i) r = mul(r, s, ctx);
    return r;
}

Series exp_series(const Series& s, const Ctx& ctx) {
    if (!s.coeff(0).is_zero())
        throw MathError("exp of a truncated series requires zero constant term");
    const int n = s.order();
    // 1 + s(1 + s/2(1 + s/3(...)))
    Series acc = Series::one(n);
    for (int k = n; k >= 1; --k) {
        acc = mul(acc, s, ctx);
        for (int i = 0; i <= n; ++i)
            acc.set_coeff(i, acc.coeff(i).scaled(Rational(1, k)));
        acc.set_coeff(0, acc.coeff(0) + Poly::one());
    }
    return acc;
}

}  // namespace riordan
