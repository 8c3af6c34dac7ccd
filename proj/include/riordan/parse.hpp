#pragma once

#include <string_view>
#include <vector>

#include "riordan/riordan_array.hpp"

namespace riordan {

Rational parse_rational(std::string_view text);

/// Polynomial literal: terms joined by +/-, each term [coef][*]var[^exp]...,
/// coef a rational like -3/7. Examples: "1 - q + 2*q^2", "1/6", "x^2*q".
Poly parse_poly(std::string_view text);

/// Comma-separated list of polynomial literals.
std::vector<Poly> parse_poly_list(std::string_view text);

/// Rational-function expression over the series variable, expanded to a
/// truncated series at parse time: "1/(1-x)", "x/(1-2*x)", "(1+x)^3".
/// Both `x` and `y` name the series variable here; q, a, b, lambda, alpha
/// stay symbolic coefficients.
Series parse_series_expr(std::string_view text, int order, const Ctx& ctx = Ctx::exact());

/// Riordan literal "f;h" with both sides in the expression grammar.
RiordanArray parse_riordan_literal(std::string_view text, int order, const Ctx& ctx = Ctx::exact());

}  // namespace riordan
