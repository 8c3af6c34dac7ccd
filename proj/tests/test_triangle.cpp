#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "riordan/errors.hpp"
#include "riordan/json_io.hpp"
#include "riordan/parse.hpp"
#include "riordan/sequences.hpp"
#include "riordan/triangle.hpp"

using namespace riordan;

namespace {

Triangle pascal(int order) {
    return Triangle::build(order, [](int n, int j) {
        return Poly::constant(Rational::binomial(n, j));
    });
}

Triangle pascal_signed(int order) {
    return Triangle::build(order, [](int n, int j) {
        return Poly::constant(Rational(-1).pow(n - j) * Rational::binomial(n, j));
    });
}

Triangle random_integer_triangle(std::mt19937_64& g, int order, bool unit_diag) {
    std::uniform_int_distribution<int> val(-4, 4);
    Triangle t(order);
    for (int n = 0; n < order; ++n)
        for (int j = 0; j <= n; ++j) {
            int v = val(g);
            if (n == j) v = unit_diag ? 1 : (v == 0 ? 2 : v);
            t.set(n, j, Poly::constant(Rational(v)));
        }
    return t;
}

}  // namespace

TEST_CASE("pascal times signed pascal is the identity") {
    CHECK(mul(pascal(8), pascal_signed(8)).is_identity());
    CHECK(mul(pascal_signed(8), pascal(8)).is_identity());
}

TEST_CASE("multiplying by the ring unit changes nothing") {
    std::mt19937_64 g(1);
    const Triangle a = random_integer_triangle(g, 6, false);
    CHECK(mul(a, Triangle::identity(6)) == a);
    CHECK(mul(Triangle::identity(6), a) == a);
    CHECK_THROWS_AS(mul(a, Triangle::identity(5)), MathError);
}

TEST_CASE("the displayed zero-divisor pair multiplies to zero") {
    Triangle a(3), b(3);
    a.set(0, 0, parse_poly("a"));
    a.set(1, 0, parse_poly("a*x"));
    a.set(2, 0, parse_poly("a*x^2"));
    b.set(1, 1, parse_poly("b"));
    b.set(2, 0, parse_poly("b*y"));
    b.set(2, 1, parse_poly("b*y^2"));
    b.set(2, 2, parse_poly("b*y^3"));
    CHECK_FALSE(a.is_zero());
    CHECK_FALSE(b.is_zero());
    CHECK(mul(a, b).is_zero());
}

TEST_CASE("matrices with nonzero upper-left entry are not right zero divisors") {
    std::mt19937_64 g(404);
    for (int it = 0; it < 50; ++it) {
        Triangle a = random_integer_triangle(g, 4, false);
        if (a.entry(0, 0).is_zero()) a.set(0, 0, Poly::one());
        Triangle b = random_integer_triangle(g, 4, false);
        if (b.is_zero()) b.set(2, 1, Poly::one());
        CHECK_FALSE(mul(b, a).is_zero());
    }
}

TEST_CASE("inverses of the step-kernel triangles") {
    const Triangle h = Triangle::toeplitz(8, [](int k) { return Poly::constant(step_h(k)); });
    const Triangle h2 = Triangle::toeplitz(8, [](int k) { return Poly::constant(step_h2(k)); });
    CHECK(inverse(h) == h2);
    CHECK(inverse(Triangle::identity(8)) == Triangle::identity(8));
}

TEST_CASE("bernoulli matrix inverse agrees with the block-recursion oracle") {
    const int n = 8;
    const Triangle a = Triangle::build(n, [](int i, int j) {
        return Poly::constant(Rational::binomial(i, j) * Rational(1, i - j + 1));
    });
    const Triangle x = inverse(a);
    CHECK(x == inverse_block_recursion(a));
    // column 0 carries the Bernoulli numbers
    const auto b = bernoulli_numbers_by_recurrence(n);
    for (int i = 0; i < n; ++i)
        CHECK(x.entry(i, 0) == Poly::constant(b[static_cast<size_t>(i)]));
}

TEST_CASE("forward substitution equals block recursion on random invertible matrices") {
    std::mt19937_64 g(123456);
    for (int it = 0; it < 50; ++it) {
        const Triangle a = random_integer_triangle(g, 8, false);
        const Triangle x = inverse(a);
        CHECK(x == inverse_block_recursion(a));
        CHECK(mul(a, x).is_identity());
        CHECK(mul(x, a).is_identity());
    }
}

TEST_CASE("inversion reports the first non-invertible row") {
    Triangle a = Triangle::identity(4);
    a.set(2, 2, Poly::zero());
    CHECK_THROWS_WITH_AS(inverse(a), doctest::Contains("row 2"), MathError);
    CHECK_THROWS_WITH_AS(inverse_block_recursion(a), doctest::Contains("row 2"), MathError);
}

TEST_CASE("toeplitz construction and inversion") {
    std::vector<Poly> unit{Poly::one(), Poly::zero(), Poly::zero()};
    CHECK(Triangle::from_toeplitz(unit, 3) == Triangle::identity(3));
    CHECK_THROWS_AS(Triangle::from_toeplitz(unit, 4), MathError);

    std::vector<Poly> ones(6, Poly::one());
    const Triangle h = Triangle::toeplitz(6, [](int k) { return Poly::constant(step_h(k)); });
    CHECK(Triangle::from_toeplitz(ones, 6) == h);

    // (1,1,1,...)^{-1} = (1,-1,0,...)
    auto e = toeplitz_inverse_seq(ones, 6);
    CHECK(e[0] == Poly::one());
    CHECK(e[1] == -Poly::one());
    for (size_t k = 2; k < e.size(); ++k) CHECK(e[k].is_zero());

    CHECK(toeplitz_inverse_seq(unit, 3) == unit);

    std::vector<Poly> bad{Poly::constant(Rational(2))};
    CHECK_THROWS_AS(toeplitz_inverse_seq(bad, 3), MathError);
}

TEST_CASE("toeplitz recursion reproduces the bernoulli EGF data") {
    // d_k = 1/(k+1)!  =>  e_k = B_k/k!
    std::vector<Poly> d;
    for (int k = 0; k <= 10; ++k)
        d.push_back(Poly::constant(Rational::factorial(static_cast<unsigned long>(k + 1)).inverse()));
    const auto e = toeplitz_inverse_seq(d, 11);
    const auto b = bernoulli_numbers_by_recurrence(11);
    for (int k = 0; k <= 10; ++k)
        CHECK(e[static_cast<size_t>(k)] ==
              Poly::constant(b[static_cast<size_t>(k)] *
                             Rational::factorial(static_cast<unsigned long>(k)).inverse()));
}

TEST_CASE("toeplitz closure: the inverse of a unit toeplitz triangle is toeplitz") {
    std::mt19937_64 g(888);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    for (int it = 0; it < 50; ++it) {
        std::vector<Poly> d{Poly::one()};
        for (int k = 1; k < 7; ++k) d.push_back(Poly::constant(Rational(num(g), den(g))));
        const Triangle inv_matrix = inverse(Triangle::from_toeplitz(d, 7));
        const auto e = toeplitz_inverse_seq(d, 7);
        CHECK(inv_matrix == Triangle::from_toeplitz(e, 7));
    }
}

TEST_CASE("diagonal conjugation moves binomial weights onto factorials") {
    const int n = 8;
    const auto b = bernoulli_numbers_by_recurrence(n);
    const Triangle weighted = Triangle::build(n, [&](int i, int j) {
        return Poly::constant(Rational::binomial(i, j) * b[static_cast<size_t>(i - j)]);
    });
    DiagonalSeq inv_fact;
    for (int i = 0; i < n; ++i)
        inv_fact.push_back(Poly::constant(Rational::factorial(static_cast<unsigned long>(i)).inverse()));
    const Triangle conj = diag_conjugate(inv_fact, weighted);
    const Triangle expect = Triangle::toeplitz(n, [&](int k) {
        return Poly::constant(b[static_cast<size_t>(k)] *
                              Rational::factorial(static_cast<unsigned long>(k)).inverse());
    });
    CHECK(conj == expect);

    DiagonalSeq ones(static_cast<size_t>(n), Poly::one());
    CHECK(diag_conjugate(ones, weighted) == weighted);
}

TEST_CASE("diagonal conjugation by q-factorials clears q-pochhammer denominators") {
    const int n = 5;
    const Ctx ctx = Ctx::q_adic(20);
    std::vector<Poly> poch, poch_inv;
    for (int k = 0; k < n; ++k) {
        poch.push_back(q_pochhammer(Poly::variable(Var::Q), k));
        poch_inv.push_back(poch.back().inverse(ctx));
    }
    const Triangle a = Triangle::toeplitz(n, [&](int k) {
        return Poly::mul(Poly::variable(Var::X, k), poch_inv[static_cast<size_t>(k)], ctx);
    });
    const Triangle got = diag_conjugate(DiagonalSeq(poch.begin(), poch.end()), a, ctx);
    const Triangle expect = Triangle::build(n, [&](int i, int j) {
        return Poly::variable(Var::X, i - j) * gauss_binomial(i, j);
    });
    CHECK_FALSE(first_diff(got, expect).has_value());
}

TEST_CASE("grading by lambda preserves inverse pairs") {
    const Poly lam = Poly::variable(Var::Lambda);
    const Triangle a = grade(pascal(7), lam);
    const Triangle b = grade(pascal_signed(7), lam);
    CHECK(mul(a, b).is_identity());
    CHECK(grade(pascal(7), Poly::one()) == pascal(7));
    CHECK(grade(Triangle::identity(7), Poly::variable(Var::Q)) == Triangle::identity(7));

    const Triangle two = grade(pascal(6), Poly::constant(Rational(2)));
    CHECK(two.entry(4, 1) == Poly::constant(Rational(8 * 4)));
    CHECK(inverse(two) == grade(pascal_signed(6), Poly::constant(Rational(2))));
}

TEST_CASE("row scaling and inverse column scaling keep mutual inverses paired") {
    const int n = 6;
    DiagonalSeq fact, ones(static_cast<size_t>(n), Poly::one());
    for (int i = 0; i < n; ++i)
        fact.push_back(Poly::constant(Rational::factorial(static_cast<unsigned long>(i))));
    const Triangle a = scale_rows(pascal(n), fact);
    const Triangle b = scale_cols_inv(pascal_signed(n), fact);
    CHECK(mul(a, b).is_identity());
    CHECK(scale_rows(pascal(n), ones) == pascal(n));
}

TEST_CASE("matrix generating function columns") {
    const auto gi = matrix_gf(Triangle::identity(5));
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k <= 4; ++k)
            CHECK(gi[static_cast<size_t>(i)].coeff(k) ==
                  (k == i ? Poly::one() : Poly::zero()));

    // all-ones triangle: g_i = y^i/(1-y)
    const Triangle h = Triangle::toeplitz(5, [](int k) { return Poly::constant(step_h(k)); });
    const auto gh = matrix_gf(h);
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k <= 4; ++k)
            CHECK(gh[static_cast<size_t>(i)].coeff(k) ==
                  (k >= i ? Poly::one() : Poly::zero()));

    // pascal: A(x,y) = 1/(1 - y - x y), i.e. g_0 = 1/(1-y), g_i = g_{i-1} * y/(1-y)
    const auto gp = matrix_gf(pascal(6));
    CHECK(gp[0] == parse_series_expr("1/(1-y)", 5));
    const Series ypart = parse_series_expr("y/(1-y)", 5);
    for (int i = 1; i < 6; ++i)
        CHECK(gp[static_cast<size_t>(i)] == mul(gp[static_cast<size_t>(i - 1)], ypart));
}

TEST_CASE("nested truncation commutes with multiplication and inversion") {
    std::mt19937_64 g(5150);
    std::uniform_int_distribution<int> cut(1, 7);
    for (int it = 0; it < 50; ++it) {
        const Triangle a = random_integer_triangle(g, 8, false);
        const Triangle b = random_integer_triangle(g, 8, false);
        const int m = cut(g);
        CHECK(mul(a, b).truncated(m) == mul(a.truncated(m), b.truncated(m)));
        CHECK(inverse(a).truncated(m) == inverse(a.truncated(m)));
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    std::mt19937_64 g(31415);
    for (int it = 0; it < 50; ++it) {
        const Triangle a = random_integer_triangle(g, 6, false);
        const Triangle b = random_integer_triangle(g, 6, false);
        const Triangle c = random_integer_triangle(g, 6, false);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        Triangle sum(6);
        for (int n = 0; n < 6; ++n)
            for (int j = 0; j <= n; ++j) sum.set(n, j, b.entry(n, j) + c.entry(n, j));
        Triangle lhs = mul(a, sum);
        Triangle rhs(6);
        const Triangle ab = mul(a, b), ac = mul(a, c);
        for (int n = 0; n < 6; ++n)
            for (int j = 0; j <= n; ++j) rhs.set(n, j, ab.entry(n, j) + ac.entry(n, j));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("integer matrices with unit diagonal invert over the integers") {
    std::mt19937_64 g(666);
    for (int it = 0; it < 50; ++it) {
        const Triangle a = random_integer_triangle(g, 7, true);
        const Triangle x = inverse(a);
        for (int n = 0; n < 7; ++n)
            for (int j = 0; j <= n; ++j) {
                for (const auto& [e, c] : x.entry(n, j).terms()) CHECK(c.is_integer());
                if (n == j) CHECK(x.entry(n, n) == Poly::one());
            }
    }
}

TEST_CASE("polynomial entries with rational diagonal invert without division") {
    std::mt19937_64 g(777);
    std::uniform_int_distribution<int> val(-3, 3), expo(0, 2);
    for (int it = 0; it < 50; ++it) {
        Triangle a(6);
        for (int n = 0; n < 6; ++n)
            for (int j = 0; j <= n; ++j) {
                if (n == j) {
                    int v = val(g);
                    a.set(n, n, Poly::constant(Rational(v == 0 ? 1 : v)));
                } else {
                    Expo e{};
                    e[static_cast<int>(Var::X)] = expo(g);
                    e[static_cast<int>(Var::Q)] = expo(g);
                    a.set(n, j, Poly::monomial(e, Rational(val(g))));
                }
            }
        const Triangle x = inverse(a);
        CHECK(mul(a, x).is_identity());
    }
}

TEST_CASE("triangle json round trip is canonical") {
    std::mt19937_64 g(2024);
    Triangle a = random_integer_triangle(g, 5, false);
    a.set(3, 1, parse_poly("x^2*q - 1/2"));
    const auto j = triangle_to_json(a);
    CHECK(triangle_from_json(j) == a);
    CHECK(j.dump() == triangle_to_json(triangle_from_json(j)).dump());
}
