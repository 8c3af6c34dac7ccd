#pragma once

#include <map>
#include <string>
#include <utility>

#include "riordan/triangle.hpp"

namespace riordan {

/// Validated Riordan pair (f, h): f(0) invertible, h(0) = 0, h'(0)
/// invertible, both truncated at the same order. The associated matrix has
/// column k equal to the coefficient list of f * h^k.
class RiordanArray {
public:
    RiordanArray(Series f, Series h);

    const Series& f() const { return f_; }
    const Series& h() const { return h_; }
    /// Series truncation order; the matrix has order()+1 rows.
    int order() const { return f_.order(); }

    Triangle to_matrix(const Ctx& ctx = Ctx::exact()) const;

    friend bool operator==(const RiordanArray& a, const RiordanArray& b) {
        return a.f_ == b.f_ && a.h_ == b.h_;
    }
    friend bool operator!=(const RiordanArray& a, const RiordanArray& b) { return !(a == b); }

private:
    Series f_, h_;
};

/// Group identity (1, y).
RiordanArray riordan_identity(int order);

/// (f1 * (f2 o h1), h2 o h1).
RiordanArray riordan_mul(const RiordanArray& r1, const RiordanArray& r2,
                         const Ctx& ctx = Ctx::exact());

/// (1 / (f o hbar), hbar) with hbar the compositional inverse of h.
RiordanArray riordan_inverse(const RiordanArray& r, const Ctx& ctx = Ctx::exact());

// ---- subgroup constructors ------------------------------------------------

/// (p, beta*x / (1 - alpha*x))
RiordanArray riordan_igroup(const Series& p, const Poly& beta, const Poly& alpha);
/// (p, a*x)
RiordanArray riordan_lgroup(const Series& p, const Poly& a);
/// (p, x)
RiordanArray riordan_appell(const Series& p);
/// (p, x) with p(0) = 1
RiordanArray riordan_ogroup(const Series& p);
/// (p, x / (1 - alpha*x))
RiordanArray riordan_pascal_gen(const Series& p, const Poly& alpha);
/// (1, p)
RiordanArray riordan_associated(const Series& p);
/// (g, x*g)
RiordanArray riordan_bell(const Series& g);

/// The h-series of a generalized Pascal matrix: beta*x / (1 - alpha*x).
Series pascal_h(int order, const Poly& alpha, const Poly& beta = Poly::one());

// ---- subgroup membership --------------------------------------------------

enum class SubgroupKind { IGroup, LGroup, Appell, OGroup, PascalGen, Associated, Bell };

const char* subgroup_name(SubgroupKind k);
SubgroupKind subgroup_from_name(const std::string& name);

/// Membership decision at the pair's truncation order, by shape, with the
/// extracted parameters as witnesses (canonical strings).
struct Membership {
    bool member = false;
    std::map<std::string, std::string> witness;
};

Membership subgroup_member(SubgroupKind kind, const RiordanArray& r,
                           const Ctx& ctx = Ctx::exact());

// ---- decompositions and closed forms ---------------------------------------

/// Appell * Bell factorization (x*f/h, x) * (h/x, h) = (f, h). The exact
/// division by h loses one order, so both parts are returned at order-1.
std::pair<RiordanArray, RiordanArray> decompose_appell_bell(const RiordanArray& r,
                                                            const Ctx& ctx = Ctx::exact());

/// Closed form for a generalized Pascal entry:
/// [[x^n]] p(x) (x/(1-alpha*x))^k = sum_{j=0}^{n-k} p_j alpha^{n-k-j} C(n-j-1, k-1).
Poly pascal_entry_closed_form(const Series& p, const Poly& alpha, int n, int k);

/// Closed form for p(x / (1 - alpha*x)):
/// p_0 + sum_s x^s sum_{j=0}^{s-1} p_{j+1} alpha^{s-1-j} C(s-1, j).
Series pascal_substitute_closed_form(const Series& p, const Poly& alpha);

/// Generalized binomial transform: out_n = sum_j C(n,j) seq_j alpha^{n-j}.
std::vector<Poly> gbt(const std::vector<Poly>& seq, const Poly& alpha);

}  // namespace riordan
