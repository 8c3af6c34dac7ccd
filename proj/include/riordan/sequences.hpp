#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riordan/poly.hpp"

namespace riordan {

// ---- Bernoulli / Euler ------------------------------------------------------

/// Bernoulli numbers B_0..B_{count-1}, computed by inverting the matrix
/// [C(n,j)/(n-j+1)] and reading off column 0.
std::vector<Rational> bernoulli_numbers(int count);
/// Independent oracle: the convolution recurrence from the exponential
/// generating function t/(e^t - 1).
std::vector<Rational> bernoulli_numbers_by_recurrence(int count);

/// Euler numbers E_0..E_{count-1}, by inverting [eps(n-j) C(n,j)].
std::vector<Rational> euler_numbers(int count);
/// Independent oracle: convolution recurrence from sech(t).
std::vector<Rational> euler_numbers_by_recurrence(int count);

/// Bernoulli polynomials B_n(x) from the EGF t e^{xt}/(e^t - 1), exact.
std::vector<Poly> bernoulli_polys(int count);
/// Euler polynomials E_n(x) from the EGF 2 e^{xt}/(e^t + 1), exact.
std::vector<Poly> euler_polys(int count);

// ---- step kernels -----------------------------------------------------------

/// 1 for even arguments, 0 for odd.
Rational eps_kernel(long n);
/// Heaviside step: 1 for n >= 0.
Rational step_h(long n);
/// H(n) + H(n-2) - 2 H(n-1): 1 at 0, -1 at 1, else 0.
Rational step_h2(long n);
/// H(n) - H(n-1) - H(n-2) + H(n-3): 1 at 0, -1 at 2, else 0.
Rational step_h3(long n);

// ---- factorial polynomials --------------------------------------------------

/// Falling factorial x(x-1)...(x-n+1); 1 for n = 0.
Poly falling_factorial(int n);
/// Rising factorial (Pochhammer) x(x+1)...(x+n-1); 1 for n = 0.
Poly rising_factorial(int n);
Poly falling_factorial_of(const Poly& base, int n);
Poly rising_factorial_of(const Poly& base, int n);

// ---- q-symbols ---------------------------------------------------------------

/// [n]_q = 1 + q + ... + q^{n-1}.
Poly q_number(int n);
/// [n]_q! = prod_{j=1}^{n} [j]_q.
Poly q_factorial(int n);
/// Gauss polynomial [n; k]_q; 0 outside 0 <= k <= n.
Poly gauss_binomial(int n, int k);
/// (a|q)_n = prod_{j=0}^{n-1} (1 - a q^j) for an arbitrary polynomial a.
Poly q_pochhammer(const Poly& a, int n);
/// x^n (1/x | q)_n = prod_{i=0}^{n-1} (x - q^i), polynomial form.
Poly reflected_q_pochhammer(const Poly& x, int n);

// ---- named polynomial families ------------------------------------------------

/// Rogers-Szego polynomials R_n(x|q) = sum_j [n;j]_q x^j together with the
/// companion family Rhat_n whose [n;j]_q-weighted convolution with R is
/// delta_{n,0}.
std::pair<std::vector<Poly>, std::vector<Poly>> rogers_szego(int count);

/// Laguerre polynomials L_n(x) from the generating function
/// (1/(1-t)) exp(-tx/(1-t)), and the companion family whose plain
/// convolution with L is delta_{n,0}.
std::pair<std::vector<Poly>, std::vector<Poly>> laguerre_pair(int count);

/// Probabilist Hermite polynomials He_n (monic, He_{n+1} = x He_n - n He_{n-1})
/// and the companion G_n = i^n He_n(ix) realized by the sign-twisted
/// recurrence G_{n+1} = -x G_n + n G_{n-1}.
std::pair<std::vector<Poly>, std::vector<Poly>> hermite_pair(int count);

// ---- family registry ------------------------------------------------------------

/// Stable string ids for CLI/JSON addressing, e.g. "bernoulli.numbers".
std::vector<std::string> list_sequence_families();
/// First `count` members of the named family; throws ParseError on unknown id.
std::vector<Poly> sequence_family(const std::string& id, int count);

}  // namespace riordan
