#include "riordan/identities.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "riordan/errors.hpp"
#include "riordan/parse.hpp"
#include "riordan/series.hpp"

namespace riordan {

namespace {

// ---- small helpers ---------------------------------------------------------

using Params = std::map<std::string, Poly>;

struct CheckResult {
    std::optional<Mismatch> mm;
    std::vector<std::string> notes;
};

struct Check {
    std::string anchor;
    std::map<std::string, std::string> defaults;
    std::function<CheckResult(const RunConfig&, const Params&)> fn;
};

Mismatch mismatch_at(int n, int j, const Poly& lhs, const Poly& rhs) {
    return Mismatch{n, j, lhs.str(), rhs.str()};
}

std::optional<Mismatch> diff_against(const Triangle& got, const Triangle& want) {
    if (auto at = first_diff(got, want))
        return mismatch_at(at->first, at->second, got.entry(at->first, at->second),
                           want.entry(at->first, at->second));
    return std::nullopt;
}

/// lt_mul(a, b) compared against the identity matrix.
std::optional<Mismatch> inverse_pair_diff(const Triangle& a, const Triangle& b, const Ctx& ctx) {
    return diff_against(mul(a, b, ctx), Triangle::identity(a.order()));
}

std::optional<Mismatch> series_diff(const Series& got, const Series& want) {
    const int n = std::min(got.order(), want.order());
    for (int i = 0; i <= n; ++i)
        if (got.coeff(i) != want.coeff(i))
            return mismatch_at(i, 0, got.coeff(i), want.coeff(i));
    return std::nullopt;
}

std::optional<Mismatch> riordan_diff(const RiordanArray& got, const RiordanArray& want) {
    if (auto d = series_diff(got.f(), want.f())) return d;
    if (auto d = series_diff(got.h(), want.h())) {
        d->j = 1;
        return d;
    }
    return std::nullopt;
}

Poly pc(long n) { return Poly::constant(Rational(n)); }
Poly pq(int e) { return Poly::variable(Var::Q, e); }

std::vector<std::vector<Poly>> gauss_table(int order) {
    std::vector<std::vector<Poly>> g(static_cast<size_t>(order));
    g[0] = {Poly::one()};
    for (int n = 1; n < order; ++n) {
        auto& row = g[static_cast<size_t>(n)];
        row.resize(static_cast<size_t>(n) + 1);
        row[0] = Poly::one();
        row[static_cast<size_t>(n)] = Poly::one();
        const auto& prev = g[static_cast<size_t>(n - 1)];
        for (int k = 1; k < n; ++k)
            row[static_cast<size_t>(k)] =
                prev[static_cast<size_t>(k - 1)] +
                pq(k) * prev[static_cast<size_t>(k)];
    }
    return g;
}

Poly truncated(const Poly& p, const Ctx& ctx) {
    return ctx.q_bound ? p.truncated_q(*ctx.q_bound) : p;
}

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(g_);
    }
    Rational small_rational() {
        return Rational(uniform(-4, 4), uniform(1, 3));
    }
    Rational nonzero_rational() {
        Rational r = small_rational();
        return r.is_zero() ? Rational(1) : r;
    }
    Rational unit_like() {
        switch (uniform(0, 3)) {
            case 0: return Rational(1);
            case 1: return Rational(-1);
            case 2: return Rational(2);
            default: return Rational(1, 2);
        }
    }
    Series series(int order, bool invertible_head) {
        Series s(order);
        s.set_coeff(0, Poly::constant(invertible_head ? nonzero_rational() : small_rational()));
        for (int n = 1; n <= order; ++n) s.set_coeff(n, Poly::constant(small_rational()));
        return s;
    }
    Series h_series(int order) {
        Series h(order);
        h.set_coeff(1, Poly::constant(unit_like()));
        for (int n = 2; n <= order; ++n) h.set_coeff(n, Poly::constant(small_rational()));
        return h;
    }
    RiordanArray riordan(int order) {
        return RiordanArray(series(order, true), h_series(order));
    }

private:
    std::mt19937_64 g_;
};

// ---- Bernoulli / Euler helpers ----------------------------------------------

Rational two_pow_bernoulli_sum(const std::vector<Rational>& b, int m) {
    // sum_{k=0}^{m} C(m,k) 2^k B_k
    Rational acc(0);
    for (int k = 0; k <= m; ++k)
        acc += Rational::binomial(m, k) * Rational::pow2(k) * b[static_cast<size_t>(k)];
    return acc;
}

// ---- the catalog -------------------------------------------------------------

const std::map<std::string, Check>& catalog() {
    static const std::map<std::string, Check> reg = [] {
        std::map<std::string, Check> m;

        auto add = [&m](std::string id, std::string anchor,
                        std::map<std::string, std::string> defaults,
                        std::function<CheckResult(const RunConfig&, const Params&)> fn) {
            m.emplace(std::move(id), Check{std::move(anchor), std::move(defaults), std::move(fn)});
        };

        // --- section 3.1: Bernoulli and Euler families ---

        add("BE_POLY",
            "(B&E): [B_{n-j}(x)/(n-j)!] [E_{n-j}(x)/(n-j)!] = [{2^n}] [B_{n-j}(x)/(n-j)!] [{2^-j}]",
            {}, [](const RunConfig& cfg, const Params&) {
                const int n = cfg.order;
                const auto bp = bernoulli_polys(n);
                const auto ep = euler_polys(n);
                auto fact_inv = [](int k) {
                    return Rational::factorial(static_cast<unsigned long>(k)).inverse();
                };
                Triangle a = Triangle::toeplitz(
                    n, [&](int k) { return bp[static_cast<size_t>(k)].scaled(fact_inv(k)); });
                Triangle b = Triangle::toeplitz(
                    n, [&](int k) { return ep[static_cast<size_t>(k)].scaled(fact_inv(k)); });
                CheckResult r;
                r.mm = diff_against(mul(a, b), grade(a, pc(2)));
                return r;
            });

        add("BINOM_INV", "[C(n,j)]^{-1} = [(-1)^{n-j} C(n,j)]", {},
            [](const RunConfig& cfg, const Params&) {
                Triangle a = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational::binomial(n, j));
                });
                Triangle b = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational(-1).pow(n - j) * Rational::binomial(n, j));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("BINOM_LAMBDA", "[lambda^{n-j} C(n,j)]^{-1} = [(-lambda)^{n-j} C(n,j)]",
            {{"lambda", "lambda"}}, [](const RunConfig& cfg, const Params& p) {
                const Poly lam = p.at("lambda");
                Triangle binom = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational::binomial(n, j));
                });
                Triangle signed_binom = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational(-1).pow(n - j) * Rational::binomial(n, j));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(grade(binom, lam), grade(signed_binom, lam), Ctx::exact());
                r.notes.push_back(
                    "below the diagonal C(j,n) vanishes identically, so the companion is read as "
                    "[(-lambda)^{n-j} C(n,j)]");
                return r;
            });

        add("H_H2", "[H(n-j)]^{-1} = [H2(n-j)]", {}, [](const RunConfig& cfg, const Params&) {
            Triangle a = Triangle::toeplitz(cfg.order, [](int k) { return Poly::constant(step_h(k)); });
            Triangle b = Triangle::toeplitz(cfg.order, [](int k) { return Poly::constant(step_h2(k)); });
            CheckResult r;
            r.mm = inverse_pair_diff(a, b, Ctx::exact());
            return r;
        });

        add("EPSH_H3", "[eps(n-j) H(n-j)]^{-1} = [H3(n-j)]", {},
            [](const RunConfig& cfg, const Params&) {
                Triangle a = Triangle::toeplitz(
                    cfg.order, [](int k) { return Poly::constant(eps_kernel(k) * step_h(k)); });
                Triangle b = Triangle::toeplitz(
                    cfg.order, [](int k) { return Poly::constant(step_h3(k)); });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                r.notes.push_back("H3 evaluates to 1, 0, -1, 0, 0, ... on 0, 1, 2, 3, ...");
                return r;
            });

        add("BERN_INV", "(BiE): [C(n,j)/(n-j+1)]^{-1} = [C(n,j) B_{n-j}]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto b = bernoulli_numbers(cfg.order);
                Triangle a = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational::binomial(n, j) * Rational(1, n - j + 1));
                });
                Triangle bi = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational::binomial(n, j) * b[static_cast<size_t>(n - j)]);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, bi, Ctx::exact());
                return r;
            });

        add("EULER_INV", "(BiE): [eps(n-j) C(n,j)]^{-1} = [C(n,j) E_{n-j}]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto e = euler_numbers(cfg.order);
                Triangle a = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(eps_kernel(n - j) * Rational::binomial(n, j));
                });
                Triangle bi = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational::binomial(n, j) * e[static_cast<size_t>(n - j)]);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, bi, Ctx::exact());
                r.notes.push_back("registered once; the same identity reappears in the even-index block");
                return r;
            });

        add("SIGN_FACT", "(sila): [1/(n-j)!]^{-1} = [(-1)^{n-j}/(n-j)!]", {},
            [](const RunConfig& cfg, const Params&) {
                auto fact_inv = [](int k) {
                    return Rational::factorial(static_cast<unsigned long>(k)).inverse();
                };
                Triangle a = Triangle::toeplitz(
                    cfg.order, [&](int k) { return Poly::constant(fact_inv(k)); });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    return Poly::constant(Rational(-1).pow(k) * fact_inv(k));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                r.notes.push_back("verified as an inverse pair; the two matrices are not equal entrywise");
                return r;
            });

        add("BERN_FACT", "(silb): [1/(n-j+1)!]^{-1} = [B_{n-j}/(n-j)!]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto bn = bernoulli_numbers(cfg.order);
                Triangle a = Triangle::toeplitz(cfg.order, [](int k) {
                    return Poly::constant(
                        Rational::factorial(static_cast<unsigned long>(k + 1)).inverse());
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    return Poly::constant(bn[static_cast<size_t>(k)] *
                                          Rational::factorial(static_cast<unsigned long>(k)).inverse());
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("EULER_FACT", "(silc): [eps(n-j)/(n-j)!]^{-1} = [E_{n-j}/(n-j)!]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto en = euler_numbers(cfg.order);
                Triangle a = Triangle::toeplitz(cfg.order, [](int k) {
                    return Poly::constant(eps_kernel(k) *
                                          Rational::factorial(static_cast<unsigned long>(k)).inverse());
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    return Poly::constant(en[static_cast<size_t>(k)] *
                                          Rational::factorial(static_cast<unsigned long>(k)).inverse());
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("EPS_2B",
            "[eps(n-j) C(n,j)/(n-j+1)]^{-1} = [C(n,j) sum_k C(n-j,k) 2^k B_k]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto bn = bernoulli_numbers(cfg.order);
                Triangle a = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(eps_kernel(n - j) * Rational::binomial(n, j) *
                                          Rational(1, n - j + 1));
                });
                Triangle b = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational::binomial(n, j) *
                                          two_pow_bernoulli_sum(bn, n - j));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("BINOM2N_EULER", "[C(2n,2j)]^{-1} = [C(2n,2j) E_{2(n-j)}]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto en = euler_numbers(2 * cfg.order - 1);
                Triangle a = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational::binomial(2 * n, 2 * j));
                });
                Triangle b = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational::binomial(2 * n, 2 * j) *
                                          en[static_cast<size_t>(2 * (n - j))]);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("BINOM2N_2B",
            "[C(2n,2j)/(2(n-j)+1)]^{-1} = [C(2n,2j) sum_k C(2(n-j),k) 2^k B_k]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto bn = bernoulli_numbers(2 * cfg.order - 1);
                Triangle a = Triangle::build(cfg.order, [](int n, int j) {
                    return Poly::constant(Rational::binomial(2 * n, 2 * j) *
                                          Rational(1, 2 * (n - j) + 1));
                });
                Triangle b = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational::binomial(2 * n, 2 * j) *
                                          two_pow_bernoulli_sum(bn, 2 * (n - j)));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("EULER_ROWSUM", "sum_{k=0}^{s} C(2s,2k) E_{2k} = 0 for s >= 1", {},
            [](const RunConfig& cfg, const Params&) {
                const auto en = euler_numbers(2 * cfg.order + 1);
                CheckResult r;
                for (int s = 1; s <= cfg.order; ++s) {
                    Rational acc(0);
                    for (int k = 0; k <= s; ++k)
                        acc += Rational::binomial(2 * s, 2 * k) * en[static_cast<size_t>(2 * k)];
                    if (!acc.is_zero()) {
                        r.mm = mismatch_at(s, 0, Poly::constant(acc), Poly::zero());
                        break;
                    }
                }
                return r;
            });

        add("BERN_ROWSUM", "sum_{k=0}^{2s} C(2s,k) B_k/(2s-k+1) = 0 for s >= 1", {},
            [](const RunConfig& cfg, const Params&) {
                const auto bn = bernoulli_numbers(2 * cfg.order + 1);
                CheckResult r;
                for (int s = 1; s <= cfg.order; ++s) {
                    Rational acc(0);
                    for (int k = 0; k <= 2 * s; ++k)
                        acc += Rational::binomial(2 * s, k) * bn[static_cast<size_t>(k)] *
                               Rational(1, 2 * s - k + 1);
                    if (!acc.is_zero()) {
                        r.mm = mismatch_at(s, 0, Poly::constant(acc), Poly::zero());
                        break;
                    }
                }
                return r;
            });

        add("HALF_SUM",
            "sum_{m=floor(l/2)}^{s} C(2s-l,2m-l)/(2s-2m+1) = 2^{2s-l}/(2s-l+1), 0 <= l <= 2s", {},
            [](const RunConfig& cfg, const Params&) {
                CheckResult r;
                for (int s = 0; s <= cfg.order && !r.mm; ++s)
                    for (int l = 0; l <= 2 * s; ++l) {
                        Rational acc(0);
                        for (int m = l / 2; m <= s; ++m)
                            acc += Rational::binomial(2 * s - l, 2 * m - l) *
                                   Rational(1, 2 * s - 2 * m + 1);
                        const Rational want = Rational::pow2(2 * s - l) * Rational(1, 2 * s - l + 1);
                        if (acc != want) {
                            r.mm = mismatch_at(s, l, Poly::constant(acc), Poly::constant(want));
                            break;
                        }
                    }
                return r;
            });

        add("SIL2A", "(sil2a): [eps(n-j)/(n-j+1)!]^{-1} = [sum_k 2^k B_k/(k!(n-j-k)!)]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto bn = bernoulli_numbers(cfg.order);
                Triangle a = Triangle::toeplitz(cfg.order, [](int k) {
                    return Poly::constant(eps_kernel(k) *
                                          Rational::factorial(static_cast<unsigned long>(k + 1)).inverse());
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int mlag) {
                    Rational acc(0);
                    for (int k = 0; k <= mlag; ++k)
                        acc += Rational::pow2(k) * bn[static_cast<size_t>(k)] *
                               Rational::factorial(static_cast<unsigned long>(k)).inverse() *
                               Rational::factorial(static_cast<unsigned long>(mlag - k)).inverse();
                    return Poly::constant(acc);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                r.notes.push_back(
                    "companion entries use 2^k B_k; the variant with B_{n-j-k} in place of B_k is "
                    "not the inverse (it already fails at lag 1)");
                return r;
            });

        add("SIL2B", "(sil2b): [1/(2(n-j))!]^{-1} = [E_{2(n-j)}/(2(n-j))!]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto en = euler_numbers(2 * cfg.order - 1);
                Triangle a = Triangle::toeplitz(cfg.order, [](int k) {
                    return Poly::constant(
                        Rational::factorial(static_cast<unsigned long>(2 * k)).inverse());
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    return Poly::constant(en[static_cast<size_t>(2 * k)] *
                                          Rational::factorial(static_cast<unsigned long>(2 * k)).inverse());
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("SIL2C", "(sil2c): [1/(2(n-j)+1)!]^{-1} = [sum_k 2^k B_k/(k!(2(n-j)-k)!)]", {},
            [](const RunConfig& cfg, const Params&) {
                const auto bn = bernoulli_numbers(2 * cfg.order - 1);
                Triangle a = Triangle::toeplitz(cfg.order, [](int k) {
                    return Poly::constant(
                        Rational::factorial(static_cast<unsigned long>(2 * k + 1)).inverse());
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int mlag) {
                    Rational acc(0);
                    for (int k = 0; k <= 2 * mlag; ++k)
                        acc += Rational::pow2(k) * bn[static_cast<size_t>(k)] *
                               Rational::factorial(static_cast<unsigned long>(k)).inverse() *
                               Rational::factorial(static_cast<unsigned long>(2 * mlag - k)).inverse();
                    return Poly::constant(acc);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        // --- section 3.2: factorial symbols ---

        add("POCHH_SELF",
            "(=odwr): [(-1)^j C(n,j) (x)^{(n)}/(x)^{(j)}] is its own inverse", {{"x", "x"}},
            [](const RunConfig& cfg, const Params& p) {
                const Poly x = p.at("x");
                Triangle a = Triangle::build(cfg.order, [&](int n, int j) {
                    Poly ratio = Poly::one();
                    for (int i = j; i < n; ++i) ratio = ratio * (x + pc(i));
                    return ratio.scaled(Rational(-1).pow(j) * Rational::binomial(n, j));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, a, Ctx::exact());
                r.notes.push_back("runs with x as a live indeterminate by default");
                return r;
            });

        add("POCHH_RISING", "[(x)^{(n-j)}/(n-j)!]^{-1} = [(-x)^{(n-j)}/(n-j)!]", {{"x", "x"}},
            [](const RunConfig& cfg, const Params& p) {
                const Poly x = p.at("x");
                auto fact_inv = [](int k) {
                    return Rational::factorial(static_cast<unsigned long>(k)).inverse();
                };
                Triangle a = Triangle::toeplitz(cfg.order, [&](int k) {
                    return rising_factorial_of(x, k).scaled(fact_inv(k));
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    return rising_factorial_of(-x, k).scaled(fact_inv(k));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("POCHH_FALLING", "[(x)_{(n-j)}/(n-j)!]^{-1} = [(-x)_{(n-j)}/(n-j)!]", {{"x", "x"}},
            [](const RunConfig& cfg, const Params& p) {
                const Poly x = p.at("x");
                auto fact_inv = [](int k) {
                    return Rational::factorial(static_cast<unsigned long>(k)).inverse();
                };
                Triangle a = Triangle::toeplitz(cfg.order, [&](int k) {
                    return falling_factorial_of(x, k).scaled(fact_inv(k));
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    return falling_factorial_of(-x, k).scaled(fact_inv(k));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                return r;
            });

        add("POCHH_SQBIN",
            "[(n-j)! C(n,j)^2]^{-1} = [(-1)^{n-j} (n-j)! C(n,j)^2]; the (-1)^n-graded form is "
            "its own inverse",
            {}, [](const RunConfig& cfg, const Params&) {
                auto base = [](int n, int j) {
                    return Rational::factorial(static_cast<unsigned long>(n - j)) *
                           Rational::binomial(n, j) * Rational::binomial(n, j);
                };
                Triangle a = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(base(n, j));
                });
                Triangle b = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational(-1).pow(n - j) * base(n, j));
                });
                Triangle s = Triangle::build(cfg.order, [&](int n, int j) {
                    return Poly::constant(Rational(-1).pow(n) * base(n, j));
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                if (!r.mm) r.mm = inverse_pair_diff(s, s, Ctx::exact());
                return r;
            });

        // --- section 3.3: q-series ---

        add("QBIN_ROWSUM", "sum_j (-1)^j q^{C(j,2)} [n;j]_q = 0 for n >= 1 ((fbin) at a = 1)", {},
            [](const RunConfig& cfg, const Params&) {
                const auto g = gauss_table(cfg.order + 1);
                CheckResult r;
                for (int n = 1; n <= cfg.order; ++n) {
                    Poly acc;
                    for (int j = 0; j <= n; ++j) {
                        Poly term = g[static_cast<size_t>(n)][static_cast<size_t>(j)] *
                                    pq(j * (j - 1) / 2);
                        acc += (j % 2 == 0) ? term : -term;
                    }
                    if (!acc.is_zero()) {
                        r.mm = mismatch_at(n, 0, acc, Poly::zero());
                        break;
                    }
                }
                return r;
            });

        add("QEXP_INV",
            "[x^{n-j}/(q|q)_{n-j}]^{-1} = [(-1)^{n-j} x^{n-j} q^{C(n-j,2)}/(q|q)_{n-j}]",
            {{"x", "x"}}, [](const RunConfig& cfg, const Params& p) {
                const Ctx ctx = Ctx::q_adic(cfg.q_bound);
                const Poly x = p.at("x");
                std::vector<Poly> poch_inv;
                for (int k = 0; k < cfg.order; ++k)
                    poch_inv.push_back(q_pochhammer(pq(1), k).inverse(ctx));
                Triangle a = Triangle::toeplitz(cfg.order, [&](int k) {
                    return truncated(Poly::mul(x.pow(k), poch_inv[static_cast<size_t>(k)], ctx), ctx);
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    Poly t = Poly::mul(x.pow(k) * pq(k * (k - 1) / 2),
                                       poch_inv[static_cast<size_t>(k)], ctx);
                    return truncated(k % 2 == 0 ? t : -t, ctx);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, ctx);
                r.notes.push_back("entries are q-series; verified exactly mod q^q_bound");
                return r;
            });

        add("QFACT_INV", "[1/[n-j]_q!]^{-1} = [(-1)^{n-j} q^{C(n-j,2)}/[n-j]_q!]", {},
            [](const RunConfig& cfg, const Params&) {
                const Ctx ctx = Ctx::q_adic(cfg.q_bound);
                std::vector<Poly> qfact_inv;
                for (int k = 0; k < cfg.order; ++k)
                    qfact_inv.push_back(q_factorial(k).inverse(ctx));
                Triangle a = Triangle::toeplitz(cfg.order, [&](int k) {
                    return qfact_inv[static_cast<size_t>(k)];
                });
                Triangle b = Triangle::toeplitz(cfg.order, [&](int k) {
                    Poly t = Poly::mul(pq(k * (k - 1) / 2), qfact_inv[static_cast<size_t>(k)], ctx);
                    return truncated(k % 2 == 0 ? t : -t, ctx);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, ctx);
                r.notes.push_back(
                    "companion exponent is q^C(n-j,2); the variant with q^C(n-j+1,2) is not the "
                    "inverse (it already fails at lag 1)");
                return r;
            });

        add("QBIN_INV", "(qbin): [x^{n-j} [n;j]_q]^{-1} = [(-x)^{n-j} q^{C(n-j,2)} [n;j]_q]",
            {{"x", "x"}}, [](const RunConfig& cfg, const Params& p) {
                const Poly x = p.at("x");
                const auto g = gauss_table(cfg.order);
                Triangle a = Triangle::build(cfg.order, [&](int n, int j) {
                    return x.pow(n - j) * g[static_cast<size_t>(n)][static_cast<size_t>(j)];
                });
                Triangle b = Triangle::build(cfg.order, [&](int n, int j) {
                    const int k = n - j;
                    Poly t = x.pow(k) * pq(k * (k - 1) / 2) *
                             g[static_cast<size_t>(n)][static_cast<size_t>(j)];
                    return k % 2 == 0 ? t : -t;
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                r.notes.push_back("exact polynomial identity in x and q; no truncation applied");
                return r;
            });

        add("QPOCH_PAIR",
            "[y^{n-j} [n;j]_q (x|q)_{n-j}]^{-1} = [y^{n-j} [n;j]_q prod_i (x - q^i)]",
            {{"x", "x"}, {"y", "y"}}, [](const RunConfig& cfg, const Params& p) {
                const Poly x = p.at("x");
                const Poly y = p.at("y");
                const auto g = gauss_table(cfg.order);
                Triangle a = Triangle::build(cfg.order, [&](int n, int j) {
                    return y.pow(n - j) * g[static_cast<size_t>(n)][static_cast<size_t>(j)] *
                           q_pochhammer(x, n - j);
                });
                Triangle b = Triangle::build(cfg.order, [&](int n, int j) {
                    return y.pow(n - j) * g[static_cast<size_t>(n)][static_cast<size_t>(j)] *
                           reflected_q_pochhammer(x, n - j);
                });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                r.notes.push_back(
                    "denominator-cleared form: conjugating by [{(q|q)_n}] recovers the pair "
                    "[y^{n-j}(x|q)_{n-j}/(q|q)_{n-j}]^{-1} = [y^{n-j} x^{n-j} (1/x|q)_{n-j}/(q|q)_{n-j}]");
                return r;
            });

        add("QNAW_ZERO", "(qnaw): sum_j [n;j]_q (x|q)_{n-j} x^j (1/x|q)_j = 0 for n >= 1",
            {{"x", "x"}}, [](const RunConfig& cfg, const Params& p) {
                const Poly x = p.at("x");
                const auto g = gauss_table(cfg.order + 1);
                CheckResult r;
                for (int n = 1; n <= cfg.order; ++n) {
                    Poly acc;
                    for (int j = 0; j <= n; ++j)
                        acc += g[static_cast<size_t>(n)][static_cast<size_t>(j)] *
                               q_pochhammer(x, n - j) * reflected_q_pochhammer(x, j);
                    if (!acc.is_zero()) {
                        r.mm = mismatch_at(n, 0, acc, Poly::zero());
                        break;
                    }
                }
                r.notes.push_back("x^j (1/x|q)_j is expanded as the polynomial prod_i (x - q^i)");
                return r;
            });

        add("QGF_RATIO",
            "sum_j y^j (x|q)_j/(q|q)_j = (yx|q)_inf / (y|q)_inf, coefficientwise in y", {{"x", "x"}},
            [](const RunConfig& cfg, const Params& p) {
                const Ctx ctx = Ctx::q_adic(cfg.q_bound);
                const Poly x = p.at("x");
                const int n = cfg.order;
                Series lhs(n);
                for (int j = 0; j <= n; ++j)
                    lhs.set_coeff(j, truncated(Poly::mul(q_pochhammer(x, j),
                                                         q_pochhammer(pq(1), j).inverse(ctx), ctx),
                                               ctx));
                auto infinite_product = [&](const Poly& c) {
                    Series acc = Series::one(n);
                    for (int i = 0; i <= cfg.q_bound; ++i) {
                        Series factor = Series::one(n);
                        factor.set_coeff(1, truncated(-(c * pq(i)), ctx));
                        acc = mul(acc, factor, ctx);
                    }
                    return acc;
                };
                Series rhs = mul(infinite_product(x), inverse(infinite_product(Poly::one()), ctx), ctx);
                CheckResult r;
                r.mm = series_diff(lhs, rhs);
                r.notes.push_back(
                    "infinite q-products truncated at q^i, i <= q_bound, which fixes every "
                    "retained q-coefficient; comparison exact mod q^q_bound");
                return r;
            });

        add("EULER_PROD",
            "(binT)/(obinT): 1/(t|q)_inf = sum_k t^k/(q|q)_k and (t|q)_inf = "
            "sum_k (-1)^k q^{C(k,2)} t^k/(q|q)_k",
            {}, [](const RunConfig& cfg, const Params&) {
                const Ctx ctx = Ctx::q_adic(cfg.q_bound);
                const int n = cfg.order;
                Series prod = Series::one(n);
                for (int i = 0; i <= cfg.q_bound; ++i) {
                    Series factor = Series::one(n);
                    factor.set_coeff(1, -pq(i));
                    prod = mul(prod, factor, ctx);
                }
                std::vector<Poly> poch_inv;
                for (int k = 0; k <= n; ++k)
                    poch_inv.push_back(q_pochhammer(pq(1), k).inverse(ctx));
                Series s1(n), s2(n);
                for (int k = 0; k <= n; ++k) {
                    s1.set_coeff(k, poch_inv[static_cast<size_t>(k)]);
                    Poly t = Poly::mul(pq(k * (k - 1) / 2), poch_inv[static_cast<size_t>(k)], ctx);
                    s2.set_coeff(k, truncated(k % 2 == 0 ? t : -t, ctx));
                }
                CheckResult r;
                r.mm = series_diff(mul(prod, s1, ctx), Series::one(n));
                if (!r.mm) r.mm = series_diff(s2, prod);
                r.notes.push_back(
                    "the product over (1 - t q^i) is truncated at i <= q_bound; its t-coefficients "
                    "are thereby exact mod q^q_bound, so both expansions are certified to that "
                    "q-degree");
                return r;
            });

        add("RS_GF", "sum_s t^s R_s(x|q)/(q|q)_s = 1/((t|q)_inf (tx|q)_inf)", {},
            [](const RunConfig& cfg, const Params&) {
                const Ctx ctx = Ctx::q_adic(cfg.q_bound);
                const int n = cfg.order;
                const auto rs = rogers_szego(n + 1).first;
                Series lhs(n);
                for (int s = 0; s <= n; ++s)
                    lhs.set_coeff(s, truncated(Poly::mul(rs[static_cast<size_t>(s)],
                                                         q_pochhammer(pq(1), s).inverse(ctx), ctx),
                                               ctx));
                auto infinite_product = [&](const Poly& c) {
                    Series acc = Series::one(n);
                    for (int i = 0; i <= cfg.q_bound; ++i) {
                        Series factor = Series::one(n);
                        factor.set_coeff(1, truncated(-(c * pq(i)), ctx));
                        acc = mul(acc, factor, ctx);
                    }
                    return acc;
                };
                Series rhs = inverse(
                    mul(infinite_product(Poly::one()), infinite_product(Poly::variable(Var::X)), ctx),
                    ctx);
                CheckResult r;
                r.mm = series_diff(lhs, rhs);
                r.notes.push_back("comparison exact mod q^q_bound after product truncation");
                return r;
            });

        add("RS_PAIR",
            "sum_j [n;j]_q R_j Rhat_{n-j} = delta_{n,0}; equivalently "
            "[[n;j]_q R_{n-j}] [[n;j]_q Rhat_{n-j}] = 1",
            {}, [](const RunConfig& cfg, const Params&) {
                const Ctx ctx = Ctx::q_adic(cfg.q_bound);
                const int n = cfg.order;
                const auto [rs, rhat] = rogers_szego(n + 1);
                const auto g = gauss_table(n + 1);
                CheckResult r;
                // Exact delta-convolution, no truncation.
                for (int k = 0; k <= n && !r.mm; ++k) {
                    Poly acc;
                    for (int j = 0; j <= k; ++j)
                        acc += g[static_cast<size_t>(k)][static_cast<size_t>(j)] *
                               rs[static_cast<size_t>(j)] * rhat[static_cast<size_t>(k - j)];
                    const Poly want = k == 0 ? Poly::one() : Poly::zero();
                    if (acc != want) r.mm = mismatch_at(k, 0, acc, want);
                }
                // Denominator-cleared matrix pair, mod q^q_bound.
                if (!r.mm) {
                    Triangle a = Triangle::build(n, [&](int i, int j) {
                        return truncated(Poly::mul(g[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                                   rs[static_cast<size_t>(i - j)], ctx),
                                         ctx);
                    });
                    Triangle b = Triangle::build(n, [&](int i, int j) {
                        return truncated(Poly::mul(g[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                                   rhat[static_cast<size_t>(i - j)], ctx),
                                         ctx);
                    });
                    r.mm = inverse_pair_diff(a, b, ctx);
                }
                r.notes.push_back(
                    "matrix form is the denominator-cleared conjugate of "
                    "[R_{n-j}/(q|q)_{n-j}]^{-1} = [Rhat_{n-j}/(q|q)_{n-j}] by [{(q|q)_n}]; "
                    "the convolution is checked exactly, the matrix product mod q^q_bound");
                return r;
            });

        // --- section 3.4: classical orthogonal families ---

        add("LAGUERRE_PAIR", "[L_{n-j}(x)]^{-1} = [Lc_{n-j}(x)] with plain convolution delta",
            {}, [](const RunConfig& cfg, const Params&) {
                const int n = cfg.order;
                const auto [lag, comp] = laguerre_pair(n);
                Triangle a = Triangle::toeplitz(n, [&](int k) { return lag[static_cast<size_t>(k)]; });
                Triangle b = Triangle::toeplitz(n, [&](int k) { return comp[static_cast<size_t>(k)]; });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                if (!r.mm) {
                    // GF cross-check: sum t^n Lc_n = (1-t) exp(tx/(1-t)).
                    Series tgeom(n - 1);
                    for (int i = 1; i <= n - 1; ++i) tgeom.set_coeff(i, Poly::one());
                    Series rhs = exp_series(scalar_mul(tgeom, Poly::variable(Var::X)));
                    Series one_minus_t(n - 1);
                    one_minus_t.set_coeff(0, Poly::one());
                    if (n - 1 >= 1) one_minus_t.set_coeff(1, -Poly::one());
                    rhs = mul(one_minus_t, rhs);
                    Series lhs(n - 1);
                    for (int i = 0; i <= n - 1; ++i) lhs.set_coeff(i, comp[static_cast<size_t>(i)]);
                    r.mm = series_diff(lhs, rhs);
                }
                return r;
            });

        add("HERMITE_PAIR", "[He_{n-j}(x)/(n-j)!]^{-1} = [G_{n-j}(x)/(n-j)!], G_n = i^n He_n(ix)",
            {}, [](const RunConfig& cfg, const Params&) {
                const int n = cfg.order;
                const auto [he, g] = hermite_pair(n);
                auto fact_inv = [](int k) {
                    return Rational::factorial(static_cast<unsigned long>(k)).inverse();
                };
                Triangle a = Triangle::toeplitz(
                    n, [&](int k) { return he[static_cast<size_t>(k)].scaled(fact_inv(k)); });
                Triangle b = Triangle::toeplitz(
                    n, [&](int k) { return g[static_cast<size_t>(k)].scaled(fact_inv(k)); });
                CheckResult r;
                r.mm = inverse_pair_diff(a, b, Ctx::exact());
                r.notes.push_back(
                    "the companion G_n = i^n He_n(ix) is real and satisfies "
                    "G_{n+1} = -x G_n + n G_{n-1}; the recurrence with +x G_n instead yields "
                    "(-i)^n He_n(ix), which is not the inverse partner");
                return r;
            });

        // --- section 2: Riordan group structure ---

        add("ROMAN_PRODUCT",
            "(f1,h1)(f2,h2) = (f1 (f2 o h1), h2 o h1), matching the matrix product", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("ROMAN_PRODUCT"));
                CheckResult r;
                for (int it = 0; it < 50 && !r.mm; ++it) {
                    const RiordanArray r1 = rng.riordan(cfg.order - 1);
                    const RiordanArray r2 = rng.riordan(cfg.order - 1);
                    const Triangle got = riordan_mul(r1, r2).to_matrix();
                    const Triangle want = mul(r1.to_matrix(), r2.to_matrix());
                    r.mm = diff_against(got, want);
                }
                return r;
            });

        add("ROMAN_INVERSE", "(f,h)^{-1} = (1/(f o hbar), hbar) with hbar the reversion of h", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("ROMAN_INVERSE"));
                CheckResult r;
                for (int it = 0; it < 50 && !r.mm; ++it) {
                    const RiordanArray ra = rng.riordan(cfg.order - 1);
                    const RiordanArray rinv = riordan_inverse(ra);
                    r.mm = riordan_diff(riordan_mul(ra, rinv), riordan_identity(cfg.order - 1));
                    if (!r.mm) r.mm = diff_against(rinv.to_matrix(), inverse(ra.to_matrix()));
                }
                return r;
            });

        add("SUBGROUP_I",
            "(p1, b1 x/(1-a1 x)) (p2, b2 x/(1-a2 x)) = (p1 p2(b1 x/(1-a1 x)), "
            "b1 b2 x/(1-(a1+b1 a2) x))",
            {}, [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("SUBGROUP_I"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    const Series p1 = rng.series(ord, true), p2 = rng.series(ord, true);
                    const Poly b1 = Poly::constant(rng.nonzero_rational());
                    const Poly b2 = Poly::constant(rng.nonzero_rational());
                    const Poly a1 = Poly::constant(rng.small_rational());
                    const Poly a2 = Poly::constant(rng.small_rational());
                    const RiordanArray prod =
                        riordan_mul(riordan_igroup(p1, b1, a1), riordan_igroup(p2, b2, a2));
                    const RiordanArray want(
                        mul(p1, compose(p2, pascal_h(ord, a1, b1))),
                        pascal_h(ord, a1 + b1 * a2, b1 * b2));
                    r.mm = riordan_diff(prod, want);
                    if (!r.mm && !subgroup_member(SubgroupKind::IGroup, prod).member)
                        r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                }
                return r;
            });

        add("SUBGROUP_L", "(p1, a1 x)(p2, a2 x) = (p1 p2(a1 x), a1 a2 x); closed for Appell and O",
            {}, [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("SUBGROUP_L"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    const Series p1 = rng.series(ord, true), p2 = rng.series(ord, true);
                    const Poly a1 = Poly::constant(rng.nonzero_rational());
                    const Poly a2 = Poly::constant(rng.nonzero_rational());
                    const RiordanArray prod =
                        riordan_mul(riordan_lgroup(p1, a1), riordan_lgroup(p2, a2));
                    Series scaled_arg(ord);
                    {
                        Poly pw = Poly::one();
                        for (int n = 0; n <= ord; ++n) {
                            scaled_arg.set_coeff(n, p2.coeff(n) * pw);
                            pw = pw * a1;
                        }
                    }
                    const RiordanArray want = riordan_lgroup(mul(p1, scaled_arg), a1 * a2);
                    r.mm = riordan_diff(prod, want);
                    if (!r.mm) {
                        // Appell and O closures.
                        Series o1 = p1, o2 = p2;
                        o1.set_coeff(0, Poly::one());
                        o2.set_coeff(0, Poly::one());
                        const RiordanArray ap =
                            riordan_mul(riordan_appell(p1), riordan_appell(p2));
                        const RiordanArray og = riordan_mul(riordan_ogroup(o1), riordan_ogroup(o2));
                        if (!subgroup_member(SubgroupKind::Appell, ap).member ||
                            !subgroup_member(SubgroupKind::OGroup, og).member)
                            r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                        if (!r.mm) r.mm = series_diff(ap.f(), mul(p1, p2));
                    }
                }
                return r;
            });

        add("SUBGROUP_P",
            "(p1, x/(1-a1 x))(p2, x/(1-a2 x)) = (p1 p2(x/(1-a1 x)), x/(1-(a1+a2) x))", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("SUBGROUP_P"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    const Series p1 = rng.series(ord, true), p2 = rng.series(ord, true);
                    const Poly a1 = Poly::constant(rng.small_rational());
                    const Poly a2 = Poly::constant(rng.small_rational());
                    const RiordanArray prod =
                        riordan_mul(riordan_pascal_gen(p1, a1), riordan_pascal_gen(p2, a2));
                    const RiordanArray want(
                        mul(p1, compose(p2, pascal_h(ord, a1))), pascal_h(ord, a1 + a2));
                    r.mm = riordan_diff(prod, want);
                    if (!r.mm) {
                        const auto mem = subgroup_member(SubgroupKind::PascalGen, prod);
                        // The parameter witness needs the quadratic coefficient.
                        if (!mem.member ||
                            (ord >= 2 && mem.witness.at("alpha") != (a1 + a2).str()))
                            r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                    }
                }
                return r;
            });

        add("SUBGROUP_C", "(1, p1)(1, p2) = (1, p2 o p1)", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("SUBGROUP_C"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    const Series h1 = rng.h_series(ord), h2 = rng.h_series(ord);
                    const RiordanArray prod =
                        riordan_mul(riordan_associated(h1), riordan_associated(h2));
                    r.mm = riordan_diff(prod, riordan_associated(compose(h2, h1)));
                    if (!r.mm && !subgroup_member(SubgroupKind::Associated, prod).member)
                        r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                }
                return r;
            });

        add("SUBGROUP_B",
            "(g1, x g1)(g2, x g2) = (g1 g2(x g1), x g1 g2(x g1))", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("SUBGROUP_B"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    const Series g1 = rng.series(ord, true), g2 = rng.series(ord, true);
                    const RiordanArray b1 = riordan_bell(g1), b2 = riordan_bell(g2);
                    const RiordanArray prod = riordan_mul(b1, b2);
                    const RiordanArray want = riordan_bell(mul(g1, compose(g2, b1.h())));
                    r.mm = riordan_diff(prod, want);
                    if (!r.mm && !subgroup_member(SubgroupKind::Bell, prod).member)
                        r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                }
                return r;
            });

        add("CHAIN", "O(p) < A(p) < P(p,alpha) < I(p,beta,alpha) inside the Riordan group", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("CHAIN"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    Series p = rng.series(ord, true);
                    p.set_coeff(0, Poly::one());
                    const RiordanArray og = riordan_ogroup(p);
                    const bool chain_o =
                        subgroup_member(SubgroupKind::OGroup, og).member &&
                        subgroup_member(SubgroupKind::Appell, og).member &&
                        subgroup_member(SubgroupKind::PascalGen, og).member &&
                        subgroup_member(SubgroupKind::IGroup, og).member;
                    const RiordanArray pg =
                        riordan_pascal_gen(rng.series(ord, true), Poly::constant(rng.small_rational()));
                    const bool chain_p = subgroup_member(SubgroupKind::PascalGen, pg).member &&
                                         subgroup_member(SubgroupKind::IGroup, pg).member;
                    if (!chain_o || !chain_p)
                        r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                }
                return r;
            });

        add("APPELL_NORMAL", "R (p, x) R^{-1} stays in the Appell subgroup", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("APPELL_NORMAL"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 20 && !r.mm; ++it) {
                    const RiordanArray ra = rng.riordan(ord);
                    const RiordanArray ap = riordan_appell(rng.series(ord, true));
                    const RiordanArray conj =
                        riordan_mul(riordan_mul(ra, ap), riordan_inverse(ra));
                    if (!subgroup_member(SubgroupKind::Appell, conj).member)
                        r.mm = mismatch_at(it, 0, conj.h().coeff(std::min(2, ord)), Poly::zero());
                }
                return r;
            });

        add("APPELL_BELL", "(x f/h, x)(h/x, h) = (f, h)", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("APPELL_BELL"));
                const int ord = std::max(cfg.order - 1, 2);  // decomposition drops one order
                CheckResult r;
                for (int it = 0; it < 20 && !r.mm; ++it) {
                    const RiordanArray ra = rng.riordan(ord);
                    const auto [ap, be] = decompose_appell_bell(ra);
                    if (!subgroup_member(SubgroupKind::Appell, ap).member ||
                        !subgroup_member(SubgroupKind::Bell, be).member) {
                        r.mm = mismatch_at(it, 0, Poly::zero(), Poly::one());
                        break;
                    }
                    const RiordanArray back = riordan_mul(ap, be);
                    const RiordanArray want(ra.f().truncated(ord - 1), ra.h().truncated(ord - 1));
                    r.mm = riordan_diff(back, want);
                }
                r.notes.push_back("the exact division by h loses one order; compared at order-1");
                return r;
            });

        add("TWO_PASCAL", "(d, x/(1-alpha x)) (1, x/(1+alpha x)) = (d, x)", {{"alpha", "alpha"}},
            [](const RunConfig& cfg, const Params& p) {
                Rng rng(fnv1a("TWO_PASCAL"));
                const Poly alpha = p.at("alpha");
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 10 && !r.mm; ++it) {
                    const Series d = rng.series(ord, true);
                    const RiordanArray left(d, pascal_h(ord, alpha));
                    const RiordanArray right = riordan_associated(pascal_h(ord, -alpha));
                    r.mm = riordan_diff(riordan_mul(left, right), riordan_appell(d));
                }
                return r;
            });

        add("MN1",
            "(Mn1): (1/(1-alpha x), x/(1-alpha x)) (d, x) = (D(x,alpha), x/(1-alpha x)), "
            "D built from the generalized binomial transform",
            {{"alpha", "alpha"}}, [](const RunConfig& cfg, const Params& p) {
                Rng rng(fnv1a("MN1"));
                const Poly alpha = p.at("alpha");
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 10 && !r.mm; ++it) {
                    const Series d = rng.series(ord, true);
                    Series f1(ord);
                    {
                        Poly pw = Poly::one();
                        for (int n = 0; n <= ord; ++n) {
                            f1.set_coeff(n, pw);
                            pw = pw * alpha;
                        }
                    }
                    const RiordanArray left(f1, pascal_h(ord, alpha));
                    const RiordanArray prod = riordan_mul(left, riordan_appell(d));
                    const auto dv = gbt(d.coeffs(), alpha);
                    const RiordanArray want(Series(ord, dv), pascal_h(ord, alpha));
                    r.mm = riordan_diff(prod, want);
                }
                return r;
            });

        add("MN2_GENERIC", "(d, x)(c, k) = (d c, k); covers (Mn2) for c = 1/(1-alpha x), k = x/(1-x)",
            {{"alpha", "alpha"}}, [](const RunConfig& cfg, const Params& p) {
                Rng rng(fnv1a("MN2_GENERIC"));
                const Poly alpha = p.at("alpha");
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 10 && !r.mm; ++it) {
                    const Series d = rng.series(ord, true);
                    const Series c = rng.series(ord, true);
                    const Series k = rng.h_series(ord);
                    const RiordanArray prod =
                        riordan_mul(riordan_appell(d), RiordanArray(c, k));
                    r.mm = riordan_diff(prod, RiordanArray(mul(d, c), k));
                    if (!r.mm) {
                        Series geo(ord);
                        Poly pw = Poly::one();
                        for (int n = 0; n <= ord; ++n) {
                            geo.set_coeff(n, pw);
                            pw = pw * alpha;
                        }
                        const RiordanArray printed = riordan_mul(
                            riordan_appell(d), RiordanArray(geo, pascal_h(ord, Poly::one())));
                        r.mm = riordan_diff(
                            printed, RiordanArray(mul(d, geo), pascal_h(ord, Poly::one())));
                    }
                }
                r.notes.push_back(
                    "the displayed special case mixes 1/(1-alpha x) with x/(1-x); both follow "
                    "from the generic product with first component (d, x)");
                return r;
            });

        add("COR_APPELL_2",
            "(1/(1-alpha x), x/(1-alpha x)) (d, x/(1+alpha x)) = (D(x,alpha), x)",
            {{"alpha", "alpha"}}, [](const RunConfig& cfg, const Params& p) {
                Rng rng(fnv1a("COR_APPELL_2"));
                const Poly alpha = p.at("alpha");
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 10 && !r.mm; ++it) {
                    const Series d = rng.series(ord, true);
                    Series f1(ord);
                    {
                        Poly pw = Poly::one();
                        for (int n = 0; n <= ord; ++n) {
                            f1.set_coeff(n, pw);
                            pw = pw * alpha;
                        }
                    }
                    const RiordanArray left(f1, pascal_h(ord, alpha));
                    const RiordanArray right(d, pascal_h(ord, -alpha));
                    const auto dv = gbt(d.coeffs(), alpha);
                    const RiordanArray want = riordan_appell(Series(ord, dv));
                    r.mm = riordan_diff(riordan_mul(left, right), want);
                }
                return r;
            });

        add("GBT_INV",
            "GBT(-alpha) o GBT(alpha) = id; GF of GBT(alpha)(p) is p(x/(1-alpha x))/(1-alpha x)",
            {{"alpha", "alpha"}}, [](const RunConfig& cfg, const Params& p) {
                Rng rng(fnv1a("GBT_INV"));
                const Poly alpha = p.at("alpha");
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 25 && !r.mm; ++it) {
                    const Series seq = rng.series(ord, false);
                    const auto hat = gbt(seq.coeffs(), alpha);
                    const auto back = gbt(hat, -alpha);
                    for (int n = 0; n <= ord && !r.mm; ++n)
                        if (back[static_cast<size_t>(n)] != seq.coeff(n))
                            r.mm = mismatch_at(n, 0, back[static_cast<size_t>(n)], seq.coeff(n));
                    if (r.mm) break;
                    // GF relation and the coefficient recurrence.
                    const Series comp = compose(seq, pascal_h(ord, alpha));
                    Series geo(ord);
                    Poly pw = Poly::one();
                    for (int n = 0; n <= ord; ++n) {
                        geo.set_coeff(n, pw);
                        pw = pw * alpha;
                    }
                    r.mm = series_diff(mul(geo, comp), Series(ord, hat));
                    for (int n = 1; n <= ord && !r.mm; ++n) {
                        const Poly want = hat[static_cast<size_t>(n)] -
                                          alpha * hat[static_cast<size_t>(n - 1)];
                        if (comp.coeff(n) != want)
                            r.mm = mismatch_at(n, 1, comp.coeff(n), want);
                    }
                }
                return r;
            });

        add("PASCAL_CF1",
            "[[x^n]] p(x) (x/(1-alpha x))^k = sum_j p_j alpha^{n-k-j} C(n-j-1, k-1)", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("PASCAL_CF1"));
                const int ord = cfg.order - 1;
                const std::vector<Poly> alphas = {pc(0), pc(1), pc(-1), pc(2),
                                                  Poly::variable(Var::Alpha)};
                CheckResult r;
                for (const Poly& alpha : alphas) {
                    const Series p = rng.series(ord, true);
                    const Triangle want = RiordanArray(p, pascal_h(ord, alpha)).to_matrix();
                    for (int n = 0; n <= ord && !r.mm; ++n)
                        for (int k = 0; k <= n; ++k) {
                            const Poly got = pascal_entry_closed_form(p, alpha, n, k);
                            if (got != want.entry(n, k)) {
                                r.mm = mismatch_at(n, k, got, want.entry(n, k));
                                break;
                            }
                        }
                    if (r.mm) break;
                }
                r.notes.push_back("alpha runs over 0, 1, -1, 2 and the live indeterminate");
                return r;
            });

        add("PASCAL_CF2",
            "p(x/(1-alpha x)) = p_0 + sum_s x^s sum_j p_{j+1} alpha^{s-1-j} C(s-1, j); "
            "[[x^n]] equals phat_n - alpha phat_{n-1}",
            {}, [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("PASCAL_CF2"));
                const int ord = cfg.order - 1;
                const std::vector<Poly> alphas = {pc(0), pc(1), pc(-1), pc(2),
                                                  Poly::variable(Var::Alpha)};
                CheckResult r;
                for (const Poly& alpha : alphas) {
                    const Series p = rng.series(ord, true);
                    const Series got = pascal_substitute_closed_form(p, alpha);
                    const Series want = compose(p, pascal_h(ord, alpha));
                    r.mm = series_diff(got, want);
                    if (r.mm) break;
                    const auto hat = gbt(p.coeffs(), alpha);
                    for (int n = 1; n <= ord && !r.mm; ++n) {
                        const Poly rhs = hat[static_cast<size_t>(n)] -
                                         alpha * hat[static_cast<size_t>(n - 1)];
                        if (got.coeff(n) != rhs) r.mm = mismatch_at(n, 1, got.coeff(n), rhs);
                    }
                    if (r.mm) break;
                }
                return r;
            });

        add("ZERO_DIV", "the ring of lower-triangular matrices has zero divisors", {},
            [](const RunConfig& cfg, const Params&) {
                const int n = std::min(cfg.order, 3);
                Triangle a(n), b(n);
                for (int i = 0; i < n; ++i)
                    a.set(i, 0, Poly::variable(Var::A) * Poly::variable(Var::X, i));
                int e = 0;
                for (int i = 1; i < n; ++i)
                    for (int j = 0; j <= i; ++j) {
                        if (i == 1 && j == 0) continue;  // zero below the empty first row
                        b.set(i, j, Poly::variable(Var::B) * Poly::variable(Var::Y, e++));
                    }
                CheckResult r;
                if (a.is_zero() || b.is_zero()) {
                    r.mm = mismatch_at(0, 0, Poly::zero(), Poly::one());
                    return r;
                }
                r.mm = diff_against(mul(a, b), Triangle(n));
                r.notes.push_back(
                    "the left factor has a single nonzero column, the right factor a zero first "
                    "row, with symbolic entries standing in for arbitrary values");
                return r;
            });

        add("GF_RIORDAN",
            "A(x,y) (1 - x h(y)) = f(y): column series satisfy g_0 = f and g_i = g_{i-1} h", {},
            [](const RunConfig& cfg, const Params&) {
                Rng rng(fnv1a("GF_RIORDAN"));
                const int ord = cfg.order - 1;
                CheckResult r;
                for (int it = 0; it < 10 && !r.mm; ++it) {
                    const RiordanArray ra = rng.riordan(ord);
                    const auto g = matrix_gf(ra.to_matrix());
                    r.mm = series_diff(g[0], ra.f());
                    for (size_t i = 1; i < g.size() && !r.mm; ++i)
                        r.mm = series_diff(g[i], mul(g[i - 1], ra.h()));
                }
                return r;
            });

        return m;
    }();
    return reg;
}

Params resolve_params(const Check& chk, const RunConfig& cfg,
                      std::map<std::string, std::string>& used) {
    for (const auto& [k, v] : cfg.params)
        if (!chk.defaults.count(k))
            throw ParseError("identity does not take a parameter named '" + k + "'");
    Params out;
    for (const auto& [k, dflt] : chk.defaults) {
        auto it = cfg.params.find(k);
        const std::string& literal = it == cfg.params.end() ? dflt : it->second;
        out.emplace(k, parse_poly(literal));
        used[k] = literal;
    }
    return out;
}

}  // namespace

std::vector<IdentityInfo> list_identities() {
    std::vector<IdentityInfo> out;
    out.reserve(catalog().size());
    for (const auto& [id, chk] : catalog()) out.push_back(IdentityInfo{id, chk.anchor});
    return out;
}

bool has_identity(const std::string& id) { return catalog().count(id) > 0; }

const IdentityInfo& identity_info(const std::string& id) {
    static const std::map<std::string, IdentityInfo> infos = [] {
        std::map<std::string, IdentityInfo> m;
        for (const auto& [key, chk] : catalog()) m.emplace(key, IdentityInfo{key, chk.anchor});
        return m;
    }();
    const auto it = infos.find(id);
    if (it == infos.end()) throw ParseError("unknown identity id: '" + id + "'");
    return it->second;
}

IdentityReport run_identity(const std::string& id, const RunConfig& cfg) {
    auto it = catalog().find(id);
    if (it == catalog().end()) throw ParseError("unknown identity id: '" + id + "'");
    if (cfg.order < 2) throw MathError("identity runs need order >= 2");
    if (cfg.q_bound < cfg.order) throw MathError("q_bound must be at least the order");

    IdentityReport rep;
    rep.id = id;
    rep.order = cfg.order;
    rep.q_bound = cfg.q_bound;

    const Params params = resolve_params(it->second, cfg, rep.params);
    const auto start = std::chrono::steady_clock::now();
    CheckResult res = it->second.fn(cfg, params);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    rep.pass = !res.mm.has_value();
    rep.first_mismatch = std::move(res.mm);
    rep.notes = std::move(res.notes);
    return rep;
}

std::vector<IdentityReport> run_all(const RunConfig& cfg) {
    std::vector<IdentityReport> out;
    out.reserve(catalog().size());
    for (const auto& [id, chk] : catalog()) out.push_back(run_identity(id, cfg));
    return out;
}

std::vector<Poly> family_from_table(const FamilyTable& table, int count) {
    if (count < 1) throw MathError("count must be positive");
    if (!table.explicit_polys.empty()) {
        if (static_cast<int>(table.explicit_polys.size()) < count)
            throw MathError("family table provides too few members");
        return {table.explicit_polys.begin(), table.explicit_polys.begin() + count};
    }
    if (static_cast<int>(table.rec_a.size()) < count - 1)
        throw MathError("recurrence table provides too few coefficients");
    std::vector<Poly> p{Poly::one()};
    const Poly x = Poly::variable(Var::X);
    for (int n = 0; n + 1 < count; ++n) {
        const Poly prev = n >= 1 ? p[static_cast<size_t>(n - 1)] : Poly::zero();
        p.push_back((table.rec_a[static_cast<size_t>(n)] * x + table.rec_b[static_cast<size_t>(n)]) *
                        p[static_cast<size_t>(n)] -
                    table.rec_c[static_cast<size_t>(n)] * prev);
    }
    return p;
}

IdentityReport pair_check(const FamilyTable& a, const FamilyTable& b, int order) {
    if (order < 2) throw MathError("pair check needs order >= 2");
    IdentityReport rep;
    rep.id = "PAIR_CHECK";
    rep.order = order;
    rep.q_bound = 0;

    const auto start = std::chrono::steady_clock::now();
    const auto pa = family_from_table(a, order);
    const auto pb = family_from_table(b, order);
    const auto g = gauss_table(order);
    Triangle ta = Triangle::build(order, [&](int n, int j) {
        return g[static_cast<size_t>(n)][static_cast<size_t>(j)] * pa[static_cast<size_t>(n - j)];
    });
    Triangle tb = Triangle::build(order, [&](int n, int j) {
        return g[static_cast<size_t>(n)][static_cast<size_t>(j)] * pb[static_cast<size_t>(n - j)];
    });
    rep.first_mismatch = inverse_pair_diff(ta, tb, Ctx::exact());
    rep.pass = !rep.first_mismatch.has_value();
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    rep.notes.push_back(
        "checks [[n;j]_q P_{n-j}] [[n;j]_q Phat_{n-j}] = 1, the denominator-cleared form of "
        "[P_{n-j}/[n-j]_q!]^{-1} = [Phat_{n-j}/[n-j]_q!]");
    return rep;
}

}  // namespace riordan
