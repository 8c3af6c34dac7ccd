#include "riordan/riordan_array.hpp"

#include "riordan/errors.hpp"

namespace riordan {

RiordanArray::RiordanArray(Series f, Series h) : f_(std::move(f)), h_(std::move(h)) {
    if (f_.order() != h_.order())
        throw MathError("riordan pair with mismatched truncation orders");
    if (!f_.coeff(0).is_q_unit())
        throw MathError("riordan pair: f(0) is not invertible");
    if (!h_.coeff(0).is_zero())
        throw MathError("riordan pair: h(0) must be zero");
    if (h_.order() < 1 || !h_.coeff(1).is_q_unit())
        throw MathError("riordan pair: h'(0) is not invertible");
}

Triangle RiordanArray::to_matrix(const Ctx& ctx) const {
    const int rows = order() + 1;
    Triangle t(rows);
    Series col = f_;
    for (int k = 0; k < rows; ++k) {
        for (int n = k; n < rows; ++n) t.set(n, k, col.coeff(n));
        if (k + 1 < rows) col = mul(col, h_, ctx);
    }
    return t;
}

RiordanArray riordan_identity(int order) {
    return RiordanArray(Series::one(order), Series::identity(order));
}

RiordanArray riordan_mul(const RiordanArray& r1, const RiordanArray& r2, const Ctx& ctx) {
    if (r1.order() != r2.order())
        throw MathError("order mismatch in riordan product");
    Series f = mul(r1.f(), compose(r2.f(), r1.h(), ctx), ctx);
    Series h = compose(r2.h(), r1.h(), ctx);
    return RiordanArray(std::move(f), std::move(h));
}

RiordanArray riordan_inverse(const RiordanArray& r, const Ctx& ctx) {
    Series hbar = revert(r.h(), ctx);
    Series f = inverse(compose(r.f(), hbar, ctx), ctx);
    return RiordanArray(std::move(f), std::move(hbar));
}

Series pascal_h(int order, const Poly& alpha, const Poly& beta) {
    // beta*x/(1-alpha*x) = sum_{m>=1} beta alpha^{m-1} x^m
    Series h(order);
    Poly pw = beta;
    for (int m = 1; m <= order; ++m) {
        h.set_coeff(m, pw);
        pw = pw * alpha;
    }
    return h;
}

RiordanArray riordan_igroup(const Series& p, const Poly& beta, const Poly& alpha) {
    return RiordanArray(p, pascal_h(p.order(), alpha, beta));
}

RiordanArray riordan_lgroup(const Series& p, const Poly& a) {
    Series h(p.order());
    if (p.order() >= 1) h.set_coeff(1, a);
    return RiordanArray(p, std::move(h));
}

RiordanArray riordan_appell(const Series& p) {
    return RiordanArray(p, Series::identity(p.order()));
}

RiordanArray riordan_ogroup(const Series& p) {
    if (p.coeff(0) != Poly::one())
        throw MathError("O-subgroup requires constant term 1");
    return riordan_appell(p);
}

RiordanArray riordan_pascal_gen(const Series& p, const Poly& alpha) {
    return RiordanArray(p, pascal_h(p.order(), alpha));
}

RiordanArray riordan_associated(const Series& p) {
    return RiordanArray(Series::one(p.order()), p);
}

RiordanArray riordan_bell(const Series& g) {
    Series h(g.order());
    for (int m = 1; m <= g.order(); ++m) h.set_coeff(m, g.coeff(m - 1));
    return RiordanArray(g, std::move(h));
}

const char* subgroup_name(SubgroupKind k) {
    switch (k) {
        case SubgroupKind::IGroup: return "igroup";
        case SubgroupKind::LGroup: return "lgroup";
        case SubgroupKind::Appell: return "appell";
        case SubgroupKind::OGroup: return "ogroup";
        case SubgroupKind::PascalGen: return "pascal";
        case SubgroupKind::Associated: return "associated";
        case SubgroupKind::Bell: return "bell";
    }
    return "?";
}

SubgroupKind subgroup_from_name(const std::string& name) {
    for (SubgroupKind k : {SubgroupKind::IGroup, SubgroupKind::LGroup, SubgroupKind::Appell,
                           SubgroupKind::OGroup, SubgroupKind::PascalGen,
                           SubgroupKind::Associated, SubgroupKind::Bell})
        if (name == subgroup_name(k)) return k;
    throw ParseError("unknown subgroup kind: '" + name + "'");
}

namespace {

bool h_matches_igroup_shape(const Series& h, const Poly& beta, const Poly& alpha,
                            const Ctx& ctx) {
    Poly expect = beta;
    for (int m = 1; m <= h.order(); ++m) {
        if (h.coeff(m) != expect) return false;
        expect = Poly::mul(expect, alpha, ctx);
    }
    return true;
}

}  // namespace

Membership subgroup_member(SubgroupKind kind, const RiordanArray& r, const Ctx& ctx) {
    Membership m;
    const Series& f = r.f();
    const Series& h = r.h();
    const int n = r.order();
    switch (kind) {
        case SubgroupKind::Appell:
            m.member = h == Series::identity(n);
            break;
        case SubgroupKind::OGroup:
            m.member = h == Series::identity(n) && f.coeff(0) == Poly::one();
            break;
        case SubgroupKind::Associated:
            m.member = f == Series::one(n);
            break;
        case SubgroupKind::Bell: {
            m.member = true;
            for (int k = 1; k <= n && m.member; ++k)
                if (h.coeff(k) != f.coeff(k - 1)) m.member = false;
            if (m.member) m.witness["g"] = f.str();
            break;
        }
        case SubgroupKind::LGroup: {
            m.member = true;
            for (int k = 2; k <= n; ++k)
                if (!h.coeff(k).is_zero()) m.member = false;
            if (m.member) m.witness["a"] = h.coeff(1).str();
            break;
        }
        case SubgroupKind::PascalGen: {
            // h = x/(1-alpha*x) forces h_1 = 1 and alpha = h_2.
            if (h.coeff(1) != Poly::one()) {
                m.member = false;
                break;
            }
            const Poly alpha = n >= 2 ? h.coeff(2) : Poly::zero();
            m.member = h_matches_igroup_shape(h, Poly::one(), alpha, ctx);
            if (m.member) m.witness["alpha"] = alpha.str();
            break;
        }
        case SubgroupKind::IGroup: {
            const Poly beta = h.coeff(1);
            Poly alpha;
            if (n >= 2) alpha = Poly::mul(h.coeff(2), beta.inverse(ctx), ctx);
            m.member = h_matches_igroup_shape(h, beta, alpha, ctx);
            if (m.member) {
                m.witness["beta"] = beta.str();
                m.witness["alpha"] = alpha.str();
            }
            break;
        }
    }
    return m;
}

std::pair<RiordanArray, RiordanArray> decompose_appell_bell(const RiordanArray& r,
                                                            const Ctx& ctx) {
    if (r.order() < 1)
        throw MathError("decomposition needs order at least 1");
    const Series g = r.h().shifted_down();  // h / x, invertible constant term
    const Series appell_f = mul(r.f().truncated(r.order() - 1), inverse(g, ctx), ctx);
    RiordanArray appell_part = riordan_appell(appell_f);
    RiordanArray bell_part(g, r.h().truncated(r.order() - 1));
    return {std::move(appell_part), std::move(bell_part)};
}

Poly pascal_entry_closed_form(const Series& p, const Poly& alpha, int n, int k) {
    if (k > n) throw MathError("pascal closed form requires k <= n");
    // p_{n-k} + sum_{j<n-k} p_j alpha^{n-k-j} C(n-j-1, k-1)
    Poly acc = p.coeff(n - k);
    Poly pw = alpha;  // alpha^{n-k-j} for j = n-k-1 downwards
    for (int j = n - k - 1; j >= 0; --j) {
        acc += p.coeff(j) * pw.scaled(Rational::binomial(n - j - 1, k - 1));
        pw = pw * alpha;
    }
    return acc;
}

Series pascal_substitute_closed_form(const Series& p, const Poly& alpha) {
    const int n = p.order();
    Series r(n);
    r.set_coeff(0, p.coeff(0));
    for (int s = 1; s <= n; ++s) {
        Poly acc;
        Poly pw = Poly::one();  // alpha^{s-1-j} for j = s-1 downwards
        for (int j = s - 1; j >= 0; --j) {
            acc += p.coeff(j + 1) * pw.scaled(Rational::binomial(s - 1, j));
            pw = pw * alpha;
        }
        r.set_coeff(s, std::move(acc));
    }
    return r;
}

std::vector<Poly> gbt(const std::vector<Poly>& seq, const Poly& alpha) {
    std::vector<Poly> out;
    out.reserve(seq.size());
    for (size_t n = 0; n < seq.size(); ++n) {
        Poly acc;
        Poly pw = Poly::one();  // alpha^{n-j} for j = n downwards
        for (size_t j = n + 1; j-- > 0;) {
            acc += seq[j] * pw.scaled(Rational::binomial(static_cast<long>(n), static_cast<long>(j)));
            pw = pw * alpha;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace riordan
