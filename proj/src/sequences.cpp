#include "riordan/sequences.hpp"

#include <algorithm>

#include "riordan/errors.hpp"
#include "riordan/series.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

namespace {

std::vector<Rational> column_zero(const Triangle& t) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(t.order()));
    for (int n = 0; n < t.order(); ++n) out.push_back(t.entry(n, 0).as_rational());
    return out;
}

/// e^{xt} as a series in t with coefficients x^n / n!.
Series exp_xt(int order) {
    Series s(order);
    for (int n = 0; n <= order; ++n)
        s.set_coeff(n, Poly::variable(Var::X, n).scaled(Rational::factorial(
                           static_cast<unsigned long>(n)).inverse()));
    return s;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int count) {
    if (count < 1) throw MathError("count must be positive");
    Triangle a = Triangle::build(count, [](int n, int j) {
        return Poly::constant(Rational::binomial(n, j) * Rational(1, n - j + 1));
    });
    return column_zero(inverse(a));
}

std::vector<Rational> bernoulli_numbers_by_recurrence(int count) {
    if (count < 1) throw MathError("count must be positive");
    std::vector<Rational> b(static_cast<size_t>(count));
    b[0] = Rational(1);
    for (int n = 1; n < count; ++n) {
        Rational s(0);
        for (int k = 0; k < n; ++k) s += Rational::binomial(n + 1, k) * b[static_cast<size_t>(k)];
        b[static_cast<size_t>(n)] = -(s * Rational(1, n + 1));
    }
    return b;
}

std::vector<Rational> euler_numbers(int count) {
    if (count < 1) throw MathError("count must be positive");
    Triangle a = Triangle::build(count, [](int n, int j) {
        return Poly::constant(eps_kernel(n - j) * Rational::binomial(n, j));
    });
    return column_zero(inverse(a));
}

std::vector<Rational> euler_numbers_by_recurrence(int count) {
    if (count < 1) throw MathError("count must be positive");
    std::vector<Rational> e(static_cast<size_t>(count));
    e[0] = Rational(1);
    for (int n = 1; n < count; ++n) {
        Rational s(0);
        for (int k = n - 2; k >= 0; k -= 2) s += Rational::binomial(n, k) * e[static_cast<size_t>(k)];
        e[static_cast<size_t>(n)] = -s;
    }
    return e;
}

std::vector<Poly> bernoulli_polys(int count) {
    if (count < 1) throw MathError("count must be positive");
    const int order = count - 1;
    // (e^t - 1)/t has coefficients 1/(n+1)!.
    Series denom(order);
    for (int n = 0; n <= order; ++n)
        denom.set_coeff(n, Poly::constant(Rational::factorial(
                               static_cast<unsigned long>(n + 1)).inverse()));
    Series egf = mul(exp_xt(order), inverse(denom));
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n)
        out.push_back(egf.coeff(n).scaled(Rational::factorial(static_cast<unsigned long>(n))));
    return out;
}

std::vector<Poly> euler_polys(int count) {
    if (count < 1) throw MathError("count must be positive");
    const int order = count - 1;
    // (e^t + 1)/2 = 1 + sum_{n>=1} t^n / (2 n!).
    Series denom(order);
    denom.set_coeff(0, Poly::one());
    for (int n = 1; n <= order; ++n)
        denom.set_coeff(n, Poly::constant(Rational(1, 2) * Rational::factorial(
                               static_cast<unsigned long>(n)).inverse()));
    Series egf = mul(exp_xt(order), inverse(denom));
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n)
        out.push_back(egf.coeff(n).scaled(Rational::factorial(static_cast<unsigned long>(n))));
    return out;
}

Rational eps_kernel(long n) { return Rational(((n % 2) + 2) % 2 == 0 ? 1 : 0); }
Rational step_h(long n) { return Rational(n >= 0 ? 1 : 0); }
Rational step_h2(long n) { return step_h(n) + step_h(n - 2) - Rational(2) * step_h(n - 1); }
Rational step_h3(long n) { return step_h(n) - step_h(n - 1) - step_h(n - 2) + step_h(n - 3); }

Poly falling_factorial_of(const Poly& base, int n) {
    Poly r = Poly::one();
    for (int i = 0; i < n; ++i) r = r * (base - Poly::constant(Rational(i)));
    return r;
}

Poly rising_factorial_of(const Poly& base, int n) {
    Poly r = Poly::one();
    for (int i = 0; i < n; ++i) r = r * (base + Poly::constant(Rational(i)));
    return r;
}

Poly falling_factorial(int n) { return falling_factorial_of(Poly::variable(Var::X), n); }
Poly rising_factorial(int n) { return rising_factorial_of(Poly::variable(Var::X), n); }

Poly q_number(int n) {
    if (n < 0) throw MathError("q-number index must be nonnegative");
    Poly r;
    for (int i = 0; i < n; ++i) r += Poly::variable(Var::Q, i);
    return r;
}

Poly q_factorial(int n) {
    if (n < 0) throw MathError("q-factorial index must be nonnegative");
    Poly r = Poly::one();
    for (int j = 1; j <= n; ++j) r = r * q_number(j);
    return r;
}

Poly gauss_binomial(int n, int k) {
    if (n < 0) throw MathError("gauss binomial index must be nonnegative");
    if (k < 0 || k > n) return Poly::zero();
    // [n;k] = [n-1;k-1] + q^k [n-1;k]
    std::vector<Poly> row{Poly::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<Poly> next(static_cast<size_t>(m) + 1);
        next[0] = Poly::one();
        next[static_cast<size_t>(m)] = Poly::one();
        for (int j = 1; j < m; ++j)
            next[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] +
                Poly::variable(Var::Q, j) * row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

Poly q_pochhammer(const Poly& a, int n) {
    if (n < 0) throw MathError("q-pochhammer index must be nonnegative");
    Poly r = Poly::one();
    for (int j = 0; j < n; ++j) r = r * (Poly::one() - a * Poly::variable(Var::Q, j));
    return r;
}

Poly reflected_q_pochhammer(const Poly& x, int n) {
    if (n < 0) throw MathError("q-pochhammer index must be nonnegative");
    Poly r = Poly::one();
    for (int i = 0; i < n; ++i) r = r * (x - Poly::variable(Var::Q, i));
    return r;
}

std::pair<std::vector<Poly>, std::vector<Poly>> rogers_szego(int count) {
    if (count < 1) throw MathError("count must be positive");
    std::vector<Poly> r, rhat;
    r.reserve(static_cast<size_t>(count));
    rhat.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) {
        Poly rn, hn;
        for (int s = 0; s <= n; ++s) {
            const Poly g = gauss_binomial(n, s);
            rn += g * Poly::variable(Var::X, s);
            const int qexp = s * (s - 1) / 2 + (n - s) * (n - s - 1) / 2;
            hn += g * Poly::variable(Var::X, s) * Poly::variable(Var::Q, qexp);
        }
        if (n % 2 == 1) hn = -hn;
        r.push_back(std::move(rn));
        rhat.push_back(std::move(hn));
    }
    return {std::move(r), std::move(rhat)};
}

std::pair<std::vector<Poly>, std::vector<Poly>> laguerre_pair(int count) {
    if (count < 1) throw MathError("count must be positive");
    const int order = count - 1;
    // t/(1-t) = t + t^2 + ...
    Series tgeom(order);
    for (int n = 1; n <= order; ++n) tgeom.set_coeff(n, Poly::one());
    // 1/(1-t)
    Series geom(order);
    for (int n = 0; n <= order; ++n) geom.set_coeff(n, Poly::one());
    const Series lgf =
        mul(geom, exp_series(scalar_mul(tgeom, -Poly::variable(Var::X))));
    std::vector<Poly> l, comp;
    l.reserve(static_cast<size_t>(count));
    comp.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) l.push_back(lgf.coeff(n));
    for (int n = 0; n < count; ++n) {
        if (n == 0) {
            comp.push_back(Poly::one());
        } else if (n == 1) {
            comp.push_back(Poly::variable(Var::X) - Poly::one());
        } else {
            Poly p;
            for (int j = 2; j <= n; ++j)
                p += Poly::variable(Var::X, j).scaled(
                    Rational::binomial(n - 2, j - 2) *
                    Rational::factorial(static_cast<unsigned long>(j)).inverse());
            comp.push_back(std::move(p));
        }
    }
    return {std::move(l), std::move(comp)};
}

std::pair<std::vector<Poly>, std::vector<Poly>> hermite_pair(int count) {
    if (count < 1) throw MathError("count must be positive");
    const Poly x = Poly::variable(Var::X);
    std::vector<Poly> he{Poly::one()}, g{Poly::one()};
    if (count > 1) {
        he.push_back(x);
        g.push_back(-x);
    }
    for (int n = 1; n + 1 < count; ++n) {
        he.push_back(x * he[static_cast<size_t>(n)] -
                     he[static_cast<size_t>(n - 1)].scaled(Rational(n)));
        g.push_back(-(x * g[static_cast<size_t>(n)]) +
                    g[static_cast<size_t>(n - 1)].scaled(Rational(n)));
    }
    return {std::move(he), std::move(g)};
}

namespace {

std::vector<Poly> rationals_to_polys(const std::vector<Rational>& v) {
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(Poly::constant(r));
    return out;
}

std::vector<Poly> kernel_family(Rational (*fn)(long), int count) {
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) out.push_back(Poly::constant(fn(n)));
    return out;
}

}  // namespace

std::vector<std::string> list_sequence_families() {
    return {
        "bernoulli.numbers", "bernoulli.polys",   "euler.numbers",   "euler.polys",
        "stepkernel.eps",    "stepkernel.h",      "stepkernel.h2",   "stepkernel.h3",
        "factorial.rising",  "factorial.falling", "q.number",        "q.factorial",
        "q.pochhammer",      "rogers_szego.R",    "rogers_szego.Rhat",
        "laguerre.L",        "laguerre.companion", "hermite.He",     "hermite.companion",
    };
}

std::vector<Poly> sequence_family(const std::string& id, int count) {
    if (count < 1) throw MathError("count must be positive");
    if (id == "bernoulli.numbers") return rationals_to_polys(bernoulli_numbers(count));
    if (id == "euler.numbers") return rationals_to_polys(euler_numbers(count));
    if (id == "bernoulli.polys") return bernoulli_polys(count);
    if (id == "euler.polys") return euler_polys(count);
    if (id == "stepkernel.eps") return kernel_family(&eps_kernel, count);
    if (id == "stepkernel.h") return kernel_family(&step_h, count);
    if (id == "stepkernel.h2") return kernel_family(&step_h2, count);
    if (id == "stepkernel.h3") return kernel_family(&step_h3, count);
    if (id == "factorial.rising" || id == "factorial.falling") {
        std::vector<Poly> out;
        out.reserve(static_cast<size_t>(count));
        for (int n = 0; n < count; ++n)
            out.push_back(id == "factorial.rising" ? rising_factorial(n) : falling_factorial(n));
        return out;
    }
    if (id == "q.number" || id == "q.factorial" || id == "q.pochhammer") {
        std::vector<Poly> out;
        out.reserve(static_cast<size_t>(count));
        for (int n = 0; n < count; ++n) {
            if (id == "q.number") out.push_back(q_number(n));
            else if (id == "q.factorial") out.push_back(q_factorial(n));
            else out.push_back(q_pochhammer(Poly::variable(Var::A), n));
        }
        return out;
    }
    if (id == "rogers_szego.R") return rogers_szego(count).first;
    if (id == "rogers_szego.Rhat") return rogers_szego(count).second;
    if (id == "laguerre.L") return laguerre_pair(count).first;
    if (id == "laguerre.companion") return laguerre_pair(count).second;
    if (id == "hermite.He") return hermite_pair(count).first;
    if (id == "hermite.companion") return hermite_pair(count).second;
    throw ParseError("unknown sequence family: '" + id + "'");
}

}  // namespace riordan
