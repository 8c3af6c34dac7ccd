#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "riordan/errors.hpp"
#include "riordan/json_io.hpp"
#include "riordan/parse.hpp"
#include "riordan/riordan_array.hpp"

using namespace riordan;

namespace {

Series S(const char* expr, int order) { return parse_series_expr(expr, order); }

RiordanArray pascal_pair(int order) {
    return parse_riordan_literal("1/(1-x);x/(1-x)", order);
}

Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rational(num(g), den(g));
}

Series random_series(std::mt19937_64& g, int order, bool invertible) {
    Series s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, Poly::constant(random_rational(g)));
    if (invertible && s.coeff(0).is_zero()) s.set_coeff(0, Poly::one());
    return s;
}

Series random_h(std::mt19937_64& g, int order) {
    const Rational heads[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
    Series h = random_series(g, order, false);
    h.set_coeff(0, Poly::zero());
    h.set_coeff(1, Poly::constant(heads[std::uniform_int_distribution<int>(0, 3)(g)]));
    return h;
}

RiordanArray random_riordan(std::mt19937_64& g, int order) {
    return RiordanArray(random_series(g, order, true), random_h(g, order));
}

}  // namespace

TEST_CASE("validation reports each broken invariant distinctly") {
    const int n = 5;
    CHECK_NOTHROW(riordan_identity(n));
    CHECK_NOTHROW(pascal_pair(n));
    CHECK_THROWS_WITH_AS(RiordanArray(Series::identity(n), Series::identity(n)),
                         doctest::Contains("f(0)"), MathError);
    CHECK_THROWS_WITH_AS(RiordanArray(Series::one(n), Series::one(n)),
                         doctest::Contains("h(0)"), MathError);
    Series h2(n);
    h2.set_coeff(2, Poly::one());
    CHECK_THROWS_WITH_AS(RiordanArray(Series::one(n), h2), doctest::Contains("h'(0)"),
                         MathError);
}

TEST_CASE("matrices of the canonical pairs") {
    CHECK(riordan_identity(5).to_matrix() == Triangle::identity(6));
    const Triangle p = pascal_pair(5).to_matrix();
    for (int n = 0; n < 6; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(p.entry(n, j) == Poly::constant(Rational::binomial(n, j)));

    // (d(x), x) is the toeplitz matrix of d's coefficients
    std::mt19937_64 g(7);
    Series d = random_series(g, 5, true);
    d.set_coeff(2, parse_poly("x^2 - 1/2"));
    const Triangle t = riordan_appell(d).to_matrix();
    for (int n = 0; n < 6; ++n)
        for (int j = 0; j <= n; ++j) CHECK(t.entry(n, j) == d.coeff(n - j));
}

TEST_CASE("product with the neutral element and the group laws") {
    std::mt19937_64 g(99);
    for (int it = 0; it < 30; ++it) {
        const RiordanArray r = random_riordan(g, 7);
        CHECK(riordan_mul(r, riordan_identity(7)) == r);
        CHECK(riordan_mul(riordan_identity(7), r) == r);
        const RiordanArray rinv = riordan_inverse(r);
        CHECK(riordan_mul(r, rinv) == riordan_identity(7));
        CHECK(riordan_mul(rinv, r) == riordan_identity(7));
    }
    for (int it = 0; it < 30; ++it) {
        const RiordanArray a = random_riordan(g, 6);
        const RiordanArray b = random_riordan(g, 6);
        const RiordanArray c = random_riordan(g, 6);
        CHECK(riordan_mul(riordan_mul(a, b), c) == riordan_mul(a, riordan_mul(b, c)));
    }
}

TEST_CASE("products map to matrix products") {
    std::mt19937_64 g(12345);
    for (int it = 0; it < 50; ++it) {
        const RiordanArray a = random_riordan(g, 7);
        const RiordanArray b = random_riordan(g, 7);
        CHECK(riordan_mul(a, b).to_matrix() == mul(a.to_matrix(), b.to_matrix()));
    }
}

TEST_CASE("inverse of the pascal pair") {
    const RiordanArray inv = riordan_inverse(pascal_pair(6));
    CHECK(inv.f() == S("1/(1+x)", 6));
    CHECK(inv.h() == S("x/(1+x)", 6));
    const Triangle m = inv.to_matrix();
    for (int n = 0; n < 7; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(m.entry(n, j) ==
                  Poly::constant(Rational(-1).pow(n - j) * Rational::binomial(n, j)));
}

TEST_CASE("inverse of a generalized pascal pair swaps the sign of alpha") {
    const int n = 7;
    std::mt19937_64 g(55);
    const Series p = random_series(g, n, true);
    const Poly alpha = Poly::variable(Var::Alpha);
    const RiordanArray r = riordan_pascal_gen(p, alpha);
    const RiordanArray rinv = riordan_inverse(r);
    CHECK(rinv.h() == pascal_h(n, -alpha));
    // p1(x/(1-alpha x)) = 1/p(x)
    CHECK(mul(compose(rinv.f(), pascal_h(n, alpha)), p) == Series::one(n));
}

TEST_CASE("subgroup constructors have the advertised shapes") {
    const int n = 6;
    std::mt19937_64 g(321);
    const Series d = random_series(g, n, true);
    // appell matrices are toeplitz
    const Triangle t = riordan_appell(d).to_matrix();
    for (int i = 0; i < n + 1; ++i)
        for (int j = 0; j <= i; ++j) CHECK(t.entry(i, j) == d.coeff(i - j));

    // bell with g = 1/(1-x) is the pascal pair
    CHECK(riordan_bell(S("1/(1-x)", n)) == pascal_pair(n));

    // pascal-subgroup multiplication adds the alpha parameters
    const RiordanArray prod = riordan_mul(riordan_pascal_gen(Series::one(n), Poly::constant(Rational(2))),
                                          riordan_pascal_gen(Series::one(n), Poly::constant(Rational(3))));
    CHECK(prod.h() == pascal_h(n, Poly::constant(Rational(5))));

    CHECK_THROWS_AS(riordan_ogroup(S("2+x", n)), MathError);
}

TEST_CASE("membership decisions by shape with extracted witnesses") {
    const int n = 6;
    const RiordanArray pas = pascal_pair(n);
    auto m = subgroup_member(SubgroupKind::PascalGen, pas);
    CHECK(m.member);
    CHECK(m.witness.at("alpha") == "1");
    CHECK(subgroup_member(SubgroupKind::IGroup, pas).member);
    auto bell = subgroup_member(SubgroupKind::Bell, pas);
    CHECK(bell.member);
    CHECK_FALSE(subgroup_member(SubgroupKind::Appell, pas).member);

    std::mt19937_64 g(11);
    Series d = random_series(g, n, true);
    d.set_coeff(0, Poly::constant(Rational(2)));
    const RiordanArray ap = riordan_appell(d);
    CHECK(subgroup_member(SubgroupKind::Appell, ap).member);
    CHECK_FALSE(subgroup_member(SubgroupKind::OGroup, ap).member);
    Series o = d;
    o.set_coeff(0, Poly::one());
    CHECK(subgroup_member(SubgroupKind::OGroup, riordan_appell(o)).member);

    const RiordanArray assoc = riordan_associated(pascal_h(n, Poly::constant(Rational(-1))));
    CHECK(subgroup_member(SubgroupKind::Associated, assoc).member);
    auto pg = subgroup_member(SubgroupKind::PascalGen, assoc);
    CHECK(pg.member);
    CHECK(pg.witness.at("alpha") == "-1");

    // report serialization carries kind, member, witness and order
    const auto rep = membership_to_json(SubgroupKind::PascalGen, pg, n + 1);
    CHECK(rep.at("kind") == "pascal");
    CHECK(rep.at("member") == true);
    CHECK(rep.at("witness").at("alpha") == "-1");
    CHECK(rep.at("order") == n + 1);
}

TEST_CASE("appell-bell decomposition") {
    const int n = 6;
    const auto [iap, ibe] = decompose_appell_bell(riordan_identity(n));
    CHECK(iap == riordan_identity(n - 1));
    CHECK(ibe == riordan_identity(n - 1));

    const auto [pap, pbe] = decompose_appell_bell(pascal_pair(n));
    CHECK(pap == riordan_identity(n - 1));  // x g / f = 1 for the pascal pair
    CHECK(pbe == pascal_pair(n - 1));

    std::mt19937_64 g(2718);
    const Series d = random_series(g, n, true);
    const auto [dap, dbe] = decompose_appell_bell(riordan_appell(d));
    CHECK(dap == riordan_appell(d.truncated(n - 1)));
    CHECK(subgroup_member(SubgroupKind::Associated, dbe).member);

    for (int it = 0; it < 30; ++it) {
        const RiordanArray r = random_riordan(g, n);
        const auto [ap, be] = decompose_appell_bell(r);
        CHECK(subgroup_member(SubgroupKind::Appell, ap).member);
        CHECK(subgroup_member(SubgroupKind::Bell, be).member);
        const RiordanArray back = riordan_mul(ap, be);
        CHECK(back.f() == r.f().truncated(n - 1));
        CHECK(back.h() == r.h().truncated(n - 1));
    }
}

TEST_CASE("pascal entry closed form against direct expansion") {
    const int n = 8;
    // all coefficients of p equal to 1 and alpha = 1 give plain binomials
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k)
            CHECK(pascal_entry_closed_form(S("1/(1-x)", n), Poly::one(), i, k) ==
                  Poly::constant(Rational::binomial(i, k)));

    std::mt19937_64 g(31);
    const Series p = random_series(g, n, true);
    // alpha = 0 picks out shifted coefficients
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k)
            CHECK(pascal_entry_closed_form(p, Poly::zero(), i, k) == p.coeff(i - k));

    const Poly two = Poly::constant(Rational(2));
    const Triangle direct = RiordanArray(p, pascal_h(n, two)).to_matrix();
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k)
            CHECK(pascal_entry_closed_form(p, two, i, k) == direct.entry(i, k));
    CHECK_THROWS_AS(pascal_entry_closed_form(p, two, 2, 3), MathError);
}

TEST_CASE("pascal substitution closed form equals composition") {
    const int n = 6;
    std::mt19937_64 g(41);
    const Series p = random_series(g, n, true);
    CHECK(pascal_substitute_closed_form(p, Poly::zero()) == p);

    const Series geo = pascal_substitute_closed_form(S("1/(1-x)", n), Poly::one());
    const long expect[] = {1, 1, 2, 4, 8, 16, 32};
    for (int k = 0; k <= n; ++k) CHECK(geo.coeff(k) == Poly::constant(Rational(expect[k])));

    const Poly alpha = Poly::variable(Var::Alpha);
    CHECK(pascal_substitute_closed_form(p, alpha) == compose(p, pascal_h(n, alpha)));

    // GBT consistency at every order
    const auto hat = gbt(p.coeffs(), Poly::one());
    const Series comp = compose(p, pascal_h(n, Poly::one()));
    for (int k = 1; k <= 3; ++k)
        CHECK(comp.coeff(k) == hat[static_cast<size_t>(k)] - hat[static_cast<size_t>(k - 1)]);
}

TEST_CASE("generalized binomial transform") {
    std::vector<Poly> ones(7, Poly::one());
    CHECK(gbt(ones, Poly::zero()) == ones);
    const auto doubled = gbt(ones, Poly::one());
    for (size_t k = 0; k < doubled.size(); ++k)
        CHECK(doubled[k] == Poly::constant(Rational::pow2(static_cast<long>(k))));
    CHECK(gbt(doubled, -Poly::one()) == ones);

    std::mt19937_64 g(17);
    const Poly alpha = Poly::variable(Var::Alpha);
    for (int it = 0; it < 50; ++it) {
        const Series seq = random_series(g, 8, false);
        CHECK(gbt(gbt(seq.coeffs(), alpha), -alpha) == seq.coeffs());
    }
}

TEST_CASE("appell subgroup is normal") {
    std::mt19937_64 g(271828);
    for (int it = 0; it < 20; ++it) {
        const RiordanArray r = random_riordan(g, 7);
        const RiordanArray a = riordan_appell(random_series(g, 7, true));
        const RiordanArray conj = riordan_mul(riordan_mul(r, a), riordan_inverse(r));
        CHECK(subgroup_member(SubgroupKind::Appell, conj).member);
    }
}

TEST_CASE("inclusion chain holds for random members") {
    std::mt19937_64 g(161803);
    for (int it = 0; it < 50; ++it) {
        Series p = random_series(g, 6, true);
        p.set_coeff(0, Poly::one());
        const RiordanArray og = riordan_ogroup(p);
        CHECK(subgroup_member(SubgroupKind::OGroup, og).member);
        CHECK(subgroup_member(SubgroupKind::Appell, og).member);
        CHECK(subgroup_member(SubgroupKind::PascalGen, og).member);
        CHECK(subgroup_member(SubgroupKind::IGroup, og).member);
    }
}
