#include "riordan/poly.hpp"

#include <sstream>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

namespace {
constexpr const char* kVarNames[kVarCount] = {"x", "q", "a", "b", "y", "lambda", "alpha"};
constexpr int kQ = static_cast<int>(Var::Q);
}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kVarCount; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(Expo{}, std::move(c));
    return p;
}

Poly Poly::variable(Var v, int exponent) {
    if (exponent < 0) throw MathError("negative exponent");
    if (exponent == 0) return one();
    Expo e{};
    e[static_cast<int>(v)] = exponent;
    return monomial(e, Rational(1));
}

Poly Poly::monomial(const Expo& e, Rational c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(e, std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{});
}

Rational Poly::constant_term() const { return coeff(Expo{}); }

Rational Poly::coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
}

Rational Poly::as_rational() const {
    if (!is_constant()) throw MathError("polynomial is not a constant: " + str());
    return constant_term();
}

int Poly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

int Poly::total_degree() const {
    return t_.empty() ? 0 : expo_total(t_.begin()->first);
}

bool Poly::only_q() const {
    for (const auto& [e, c] : t_)
        for (int i = 0; i < kVarCount; ++i)
            if (i != kQ && e[i] != 0) return false;
    return true;
}

void Poly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
    return r;
}

Poly Poly::mul(const Poly& a, const Poly& b, const Ctx& ctx) {
    Poly r;
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            Expo e;
            for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
            if (ctx.q_bound && e[kQ] >= *ctx.q_bound) continue;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
    return r;
}

Poly Poly::pow(int k, const Ctx& ctx) const {
    if (k < 0) throw MathError("negative exponent");
    Poly r = one();
    for (int i = 0; i < k; ++i) r = mul(r, *this, ctx);
    return r;
}

Poly Poly::substitute(Var v, const Rational& value) const {
    const int iv = static_cast<int>(v);
    Poly r;
    for (const auto& [e, c] : t_) {
        Expo e2 = e;
        int k = e2[iv];
        e2[iv] = 0;
        r.add_term(e2, c * value.pow(k));
    }
    return r;
}

Poly Poly::truncated_q(int bound) const {
    Poly r;
    for (const auto& [e, c] : t_)
        if (e[kQ] < bound) r.t_.emplace(e, c);
    return r;
}

bool Poly::is_q_unit() const {
    return !constant_term().is_zero() && only_q();
}

Poly Poly::inverse(const Ctx& ctx) const {
    if (is_constant()) return constant(constant_term().inverse());
    if (!is_q_unit())
        throw MathError("element is not invertible in the coefficient ring: " + str());
    if (!ctx.q_bound)
        throw MathError("inverting a proper q-series requires a q-adic context: " + str());
    const int bound = *ctx.q_bound;
    // Univariate series inversion in q, mod q^bound.
    std::vector<Rational> c(static_cast<size_t>(bound), Rational(0));
    for (const auto& [e, v] : t_)
        if (e[kQ] < bound) c[static_cast<size_t>(e[kQ])] = v;
    std::vector<Rational> r(static_cast<size_t>(bound), Rational(0));
    r[0] = c[0].inverse();
    for (int n = 1; n < bound; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) s += c[static_cast<size_t>(k)] * r[static_cast<size_t>(n - k)];
        r[static_cast<size_t>(n)] = -(r[0] * s);
    }
    Poly out;
    for (int n = 0; n < bound; ++n) {
        Expo e{};
        e[kQ] = n;
        out.add_term(e, r[static_cast<size_t>(n)]);
    }
    return out;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        const bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += kVarNames[i];
            if (e[i] > 1) vars += '^' + std::to_string(e[i]);
        }
        if (vars.empty()) {
            os << mag.str();
        } else if (mag.is_one()) {
            os << vars;
        } else {
            os << mag.str() << '*' << vars;
        }
    }
    return os.str();
}

}  // namespace riordan
