#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "riordan/rational.hpp"

namespace riordan {

/// The fixed indeterminate alphabet shared by every polynomial in the
/// library. x is the polynomial argument, q the q-series base, a/b extra
/// parameters, y a second argument, lambda/alpha grading parameters.
enum class Var : int { X = 0, Q = 1, A = 2, B = 3, Y = 4, Lambda = 5, Alpha = 6 };

inline constexpr int kVarCount = 7;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over the alphabet, indexed by Var.
using Expo = std::array<int, kVarCount>;

inline int expo_total(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Canonical term order: descending total degree, ties broken by descending
/// lexicographic comparison in alphabet order. Map iteration therefore
/// yields the canonical printed order.
struct TermOrder {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_total(a), db = expo_total(b);
        if (da != db) return da > db;
        return b < a;
    }
};

/// Evaluation context. When q_bound is set, ring operations work q-adically:
/// every monomial of q-degree >= q_bound is dropped, i.e. computations live
/// in (polynomials) tensor Q[[q]] / (q^q_bound). Passed explicitly; there is
/// no global state.
struct Ctx {
    std::optional<int> q_bound;

    static Ctx exact() { return Ctx{}; }
    static Ctx q_adic(int bound) { return Ctx{bound}; }
};

/// Sparse multivariate polynomial over Rational in the fixed alphabet.
/// Canonical form: no zero coefficients are ever stored, so equality is
/// decidable as plain map equality.
class Poly {
public:
    using TermMap = std::map<Expo, Rational, TermOrder>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rational(1)); }
    static Poly constant(Rational c);
    static Poly variable(Var v, int exponent = 1);
    static Poly monomial(const Expo& e, Rational c);

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    /// Coefficient of the all-zero exponent vector.
    Rational constant_term() const;
    /// Coefficient of a given monomial (zero when absent).
    Rational coeff(const Expo& e) const;
    /// Requires is_constant(); returns the value.
    Rational as_rational() const;

    int degree(Var v) const;
    int total_degree() const;
    /// True when every term has exponents only in q (the constant included).
    bool only_q() const;

    void add_term(const Expo& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b, Ctx::exact()); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Product; with a q-adic context, terms of q-degree >= bound are dropped.
    static Poly mul(const Poly& a, const Poly& b, const Ctx& ctx);
    Poly scaled(const Rational& c) const;
    Poly pow(int k, const Ctx& ctx = Ctx::exact()) const;

    /// Eliminates var by substituting an exact rational value.
    Poly substitute(Var v, const Rational& value) const;

    /// Drops every term of q-degree >= bound.
    Poly truncated_q(int bound) const;

    /// Invertibility rule of the coefficient ring: the constant part is a
    /// nonzero rational and all remaining terms involve only q, so the
    /// inverse exists in the q-adic ring.
    bool is_q_unit() const;

    /// Multiplicative inverse. Constants invert exactly; proper q-units
    /// require a q-adic context and return the series inverse mod q^bound.
    Poly inverse(const Ctx& ctx = Ctx::exact()) const;

    /// Canonical rendering, parseable by parse_poly.
    std::string str() const;

private:
    TermMap t_;
};

}  // namespace riordan
