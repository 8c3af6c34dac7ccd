#include "riordan/triangle.hpp"

#include "riordan/errors.hpp"

namespace riordan {

namespace {
const Poly kZero{};

void check_orders(const Triangle& a, const Triangle& b) {
    if (a.order() != b.order())
        throw MathError("order mismatch: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}
}  // namespace

Triangle::Triangle(int order) : order_(order) {
    if (order < 1) throw MathError("triangle order must be positive");
    e_.resize(static_cast<size_t>(order) * (order + 1) / 2);
}

Triangle Triangle::identity(int order) {
    Triangle t(order);
    for (int n = 0; n < order; ++n) t.set(n, n, Poly::one());
    return t;
}

Triangle Triangle::from_toeplitz(const std::vector<Poly>& data, int order) {
    if (static_cast<int>(data.size()) < order)
        throw MathError("toeplitz data has fewer entries than the requested order");
    Triangle t(order);
    for (int n = 0; n < order; ++n)
        for (int j = 0; j <= n; ++j) t.set(n, j, data[static_cast<size_t>(n - j)]);
    return t;
}

Triangle Triangle::build(int order, const std::function<Poly(int, int)>& gen) {
    Triangle t(order);
    for (int n = 0; n < order; ++n)
        for (int j = 0; j <= n; ++j) t.set(n, j, gen(n, j));
    return t;
}

Triangle Triangle::toeplitz(int order, const std::function<Poly(int)>& gen) {
    std::vector<Poly> data;
    data.reserve(static_cast<size_t>(order));
    for (int m = 0; m < order; ++m) data.push_back(gen(m));
    return from_toeplitz(data, order);
}

const Poly& Triangle::entry(int n, int j) const {
    if (n < 0 || n >= order_ || j < 0 || j >= order_)
        throw MathError("triangle index out of range");
    if (j > n) return kZero;
    return e_[idx(n, j)];
}

void Triangle::set(int n, int j, Poly p) {
    if (n < 0 || n >= order_ || j < 0 || j > n)
        throw MathError("triangle index out of range");
    e_[idx(n, j)] = std::move(p);
}

Triangle Triangle::truncated(int m) const {
    if (m > order_) throw MathError("cannot extend a finite triangle");
    Triangle t(m);
    for (int n = 0; n < m; ++n)
        for (int j = 0; j <= n; ++j) t.set(n, j, entry(n, j));
    return t;
}

bool Triangle::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool Triangle::is_identity() const {
    for (int n = 0; n < order_; ++n)
        for (int j = 0; j <= n; ++j) {
            const Poly& p = entry(n, j);
            if (n == j ? p != Poly::one() : !p.is_zero()) return false;
        }
    return true;
}

Triangle mul(const Triangle& a, const Triangle& b, const Ctx& ctx) {
    check_orders(a, b);
    const int n = a.order();
    Triangle r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Poly acc;
            for (int k = j; k <= i; ++k) acc += Poly::mul(a.entry(i, k), b.entry(k, j), ctx);
            r.set(i, j, std::move(acc));
        }
    return r;
}

Triangle inverse(const Triangle& a, const Ctx& ctx) {
    const int n = a.order();
    std::vector<Poly> dinv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        try {
            dinv[static_cast<size_t>(i)] = a.entry(i, i).inverse(ctx);
        } catch (const MathError&) {
            throw MathError("matrix is not invertible: diagonal entry at row " +
                            std::to_string(i) + " is not invertible");
        }
    }
    Triangle x(n);
    for (int j = 0; j < n; ++j) {
        x.set(j, j, dinv[static_cast<size_t>(j)]);
        for (int i = j + 1; i < n; ++i) {
            Poly acc;
            for (int k = j; k < i; ++k) acc += Poly::mul(a.entry(i, k), x.entry(k, j), ctx);
            x.set(i, j, -Poly::mul(dinv[static_cast<size_t>(i)], acc, ctx));
        }
    }
    return x;
}

Triangle inverse_block_recursion(const Triangle& a, const Ctx& ctx) {
    const int n = a.order();
    Triangle x(n);
    for (int m = 0; m < n; ++m) {
        Poly alpha_inv;
        try {
            alpha_inv = a.entry(m, m).inverse(ctx);
        } catch (const MathError&) {
            throw MathError("matrix is not invertible: diagonal entry at row " +
                            std::to_string(m) + " is not invertible");
        }
        // New last row: -(a_m^T X_m) / alpha_m, where X_m is the already
        // assembled inverse of the leading m x m block.
        for (int j = 0; j < m; ++j) {
            Poly acc;
            for (int k = j; k < m; ++k) acc += Poly::mul(a.entry(m, k), x.entry(k, j), ctx);
            x.set(m, j, -Poly::mul(alpha_inv, acc, ctx));
        }
        x.set(m, m, std::move(alpha_inv));
    }
    return x;
}

std::vector<Poly> toeplitz_inverse_seq(const std::vector<Poly>& d, int count, const Ctx& ctx) {
    if (d.empty() || d[0] != Poly::one())
        throw MathError("toeplitz inversion recursion requires leading entry 1");
    std::vector<Poly> e;
    e.reserve(static_cast<size_t>(count));
    e.push_back(Poly::one());
    for (int k = 1; k < count; ++k) {
        Poly acc;
        for (int s = 0; s < k; ++s) {
            const size_t lag = static_cast<size_t>(k - s);
            if (lag < d.size()) acc += Poly::mul(d[lag], e[static_cast<size_t>(s)], ctx);
        }
        e.push_back(-acc);
    }
    return e;
}

Triangle scale_rows(const Triangle& a, const DiagonalSeq& alpha, const Ctx& ctx) {
    if (static_cast<int>(alpha.size()) < a.order())
        throw MathError("diagonal has fewer entries than the matrix order");
    return Triangle::build(a.order(), [&](int n, int j) {
        return Poly::mul(alpha[static_cast<size_t>(n)], a.entry(n, j), ctx);
    });
}

Triangle scale_cols_inv(const Triangle& a, const DiagonalSeq& alpha, const Ctx& ctx) {
    if (static_cast<int>(alpha.size()) < a.order())
        throw MathError("diagonal has fewer entries than the matrix order");
    std::vector<Poly> inv;
    inv.reserve(alpha.size());
    for (int j = 0; j < a.order(); ++j) inv.push_back(alpha[static_cast<size_t>(j)].inverse(ctx));
    return Triangle::build(a.order(), [&](int n, int j) {
        return Poly::mul(a.entry(n, j), inv[static_cast<size_t>(j)], ctx);
    });
}

Triangle diag_conjugate(const DiagonalSeq& alpha, const Triangle& a, const Ctx& ctx) {
    return scale_cols_inv(scale_rows(a, alpha, ctx), alpha, ctx);
}

Triangle grade(const Triangle& a, const Poly& lambda, const Ctx& ctx) {
    std::vector<Poly> pw(static_cast<size_t>(a.order()));
    pw[0] = Poly::one();
    for (int m = 1; m < a.order(); ++m)
        pw[static_cast<size_t>(m)] = Poly::mul(pw[static_cast<size_t>(m - 1)], lambda, ctx);
    return Triangle::build(a.order(), [&](int n, int j) {
        return Poly::mul(a.entry(n, j), pw[static_cast<size_t>(n - j)], ctx);
    });
}

std::vector<Series> matrix_gf(const Triangle& a) {
    std::vector<Series> g;
    g.reserve(static_cast<size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i) {
        Series gi(a.order() - 1);
        for (int n = i; n < a.order(); ++n) gi.set_coeff(n, a.entry(n, i));
        g.push_back(std::move(gi));
    }
    return g;
}

std::optional<std::pair<int, int>> first_diff(const Triangle& a, const Triangle& b) {
    check_orders(a, b);
    for (int n = 0; n < a.order(); ++n)
        for (int j = 0; j <= n; ++j)
            if (a.entry(n, j) != b.entry(n, j)) return std::make_pair(n, j);
    return std::nullopt;
}

}  // namespace riordan
