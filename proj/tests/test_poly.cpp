#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "riordan/errors.hpp"
#include "riordan/parse.hpp"
#include "riordan/poly.hpp"

using namespace riordan;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rational(num(g), den(g));
}

Poly random_poly(std::mt19937_64& g, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms), expo(0, 3), pick(0, 2);
    Poly p;
    for (int t = nterms(g); t > 0; --t) {
        Expo e{};
        e[static_cast<int>(Var::X)] = pick(g) == 0 ? expo(g) : 0;
        e[static_cast<int>(Var::Q)] = expo(g);
        p.add_term(e, random_rational(g));
    }
    return p;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("-3/7").str() == "-3/7");
    CHECK(Rational::parse("-174611/330").str() == "-174611/330");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK(Rational::binomial(3, -1) == Rational(0));
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK_THROWS_AS(Rational(1, 0), MathError);
    CHECK_THROWS_AS(Rational(0).inverse(), MathError);
}

TEST_CASE("polynomial literals round-trip through the canonical rendering") {
    for (const char* lit : {"0", "1", "-1/2", "x", "2*q^2 - q + 1", "x^2*q + lambda",
                            "a^2*b - 3/7*y", "alpha*x - alpha"}) {
        const Poly p = P(lit);
        CHECK(parse_poly(p.str()) == p);
    }
    CHECK(P("1 - q + 2*q^2") == P("2*q^2-q+1"));
    CHECK(P("2q^2") == P("2*q^2"));
    CHECK(P("x y") == P("x*y"));
    CHECK(P("0").str() == "0");
    CHECK_THROWS_AS(P("z + 1"), ParseError);
    CHECK_THROWS_AS(P("1 +"), ParseError);
    CHECK_THROWS_AS(P("q^-1"), ParseError);
}

TEST_CASE("products: difference of squares, absorbing zero, q-pochhammer expansion") {
    CHECK(P("1+q") * P("1-q") == P("1 - q^2"));
    CHECK(P("x") * P("0") == Poly::zero());
    // (1-q)(1-q^2)(1-q^3), expanded by hand.
    const Poly prod = P("1-q") * P("1-q^2") * P("1-q^3");
    CHECK(prod == P("1 - q - q^2 + q^4 + q^5 - q^6"));
}

TEST_CASE("substitution eliminates the variable and specializes q-symbols") {
    CHECK(P("q^4 + q^3 + 2*q^2 + q + 1").substitute(Var::Q, Rational(1)) == P("6"));
    CHECK(P("1 + q + q^2").substitute(Var::Q, Rational(0)) == Poly::one());
    // (a|q)_2 = (1-a)(1-aq) at q = 1 collapses to (1-a)^2.
    const Poly poch2 = P("1-a") * P("1 - a*q");
    CHECK(poch2.substitute(Var::Q, Rational(1)) == P("1 - 2*a + a^2"));
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 g(20240811);
    for (int it = 0; it < 60; ++it) {
        const Poly p = random_poly(g), r = random_poly(g);
        const Rational v = random_rational(g);
        CHECK((p * r).substitute(Var::Q, v) ==
              p.substitute(Var::Q, v) * r.substitute(Var::Q, v));
    }
}

TEST_CASE("q-truncation soundness: a tighter bound commutes with discarding") {
    std::mt19937_64 g(77);
    const Ctx wide = Ctx::q_adic(12), narrow = Ctx::q_adic(8);
    for (int it = 0; it < 60; ++it) {
        const Poly p = random_poly(g, 5), r = random_poly(g, 5);
        CHECK(Poly::mul(p, r, wide).truncated_q(8) == Poly::mul(p, r, narrow));
    }
}

TEST_CASE("invertibility rule: nonzero constant plus q-only terms") {
    CHECK(P("1 - q").is_q_unit());
    CHECK(P("2/3").is_q_unit());
    CHECK_FALSE(P("q").is_q_unit());
    CHECK_FALSE(P("1 + x").is_q_unit());
    CHECK_FALSE(P("0").is_q_unit());

    // constants invert exactly, with or without a context
    CHECK(P("2/3").inverse() == P("3/2"));

    // proper q-units need a q-adic context
    const Poly poch2 = P("1-q") * P("1-q^2");
    CHECK_THROWS_AS(poch2.inverse(), MathError);
    const Ctx ctx = Ctx::q_adic(5);
    CHECK(poch2.inverse(ctx) == P("1 + q + 2*q^2 + 2*q^3 + 3*q^4"));
    CHECK(Poly::mul(poch2, poch2.inverse(ctx), ctx) == Poly::one());

    CHECK_THROWS_AS(P("1+x").inverse(ctx), MathError);
}

TEST_CASE("inverse is an inverse mod q^bound for random q-units") {
    std::mt19937_64 g(99);
    const Ctx ctx = Ctx::q_adic(10);
    for (int it = 0; it < 50; ++it) {
        Poly p = Poly::constant(Rational(1));
        std::uniform_int_distribution<int> expo(1, 4);
        for (int t = 0; t < 3; ++t) {
            Expo e{};
            e[static_cast<int>(Var::Q)] = expo(g);
            p.add_term(e, random_rational(g));
        }
        CHECK(Poly::mul(p, p.inverse(ctx), ctx) == Poly::one());
    }
}

TEST_CASE("canonical ordering prints descending total degree") {
    CHECK(P("1 + q + q^2").str() == "q^2 + q + 1");
    CHECK(P("x + x*q").str() == "x*q + x");
    CHECK((P("x") + P("y")).str() == "x + y");
}
