#include "riordan/parse.hpp"

#include <cctype>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "'");
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
    bool at_alpha() { return std::isalpha(static_cast<unsigned char>(peek())); }

    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        if (out.empty()) fail("expected digits");
        return out;
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        if (out.empty()) fail("expected name");
        return out;
    }

    int uint_value() {
        const std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        return std::stoi(d);
    }

    Rational rational() {
        std::string num = digits();
        if (accept('/')) num += "/" + digits();
        return Rational::parse(num);
    }

private:
    std::string_view s_;
    size_t pos_ = 0;
};

Poly parse_term(Cursor& c) {
    Rational coef(1);
    Expo e{};
    bool any = false;
    if (c.at_digit()) {
        coef = c.rational();
        any = true;
    }
    for (;;) {
        if (c.accept('*')) {
            // explicit separator, a factor must follow
        } else if (!c.at_alpha()) {
            break;
        }
        const std::string name = c.ident();
        const auto v = var_from_name(name);
        if (!v) c.fail("unknown indeterminate '" + name + "'");
        int exp = 1;
        if (c.accept('^')) exp = c.uint_value();
        e[static_cast<int>(*v)] += exp;
        any = true;
    }
    if (!any) c.fail("expected a term");
    return Poly::monomial(e, coef);
}

// ---- series expression grammar ----

Series parse_expr(Cursor& c, int order, const Ctx& ctx);

Series parse_atom(Cursor& c, int order, const Ctx& ctx) {
    if (c.accept('(')) {
        Series s = parse_expr(c, order, ctx);
        c.expect(')');
        return s;
    }
    // Integers only; '/' is always series division here, so "1/2" still
    // evaluates to one half.
    if (c.at_digit()) return Series::constant(order, Poly::constant(Rational::parse(c.digits())));
    if (c.at_alpha()) {
        const std::string name = c.ident();
        if (name == "x" || name == "y") return Series::identity(order);
        const auto v = var_from_name(name);
        if (!v) c.fail("unknown name '" + name + "'");
        return Series::constant(order, Poly::variable(*v));
    }
    c.fail("expected a value");
}

Series parse_power(Cursor& c, int order, const Ctx& ctx) {
    Series base = parse_atom(c, order, ctx);
    if (c.accept('^')) return power(base, c.uint_value(), ctx);
    return base;
}

Series parse_product(Cursor& c, int order, const Ctx& ctx) {
    Series acc = parse_power(c, order, ctx);
    for (;;) {
        if (c.accept('*')) {
            acc = mul(acc, parse_power(c, order, ctx), ctx);
        } else if (c.accept('/')) {
            acc = mul(acc, inverse(parse_power(c, order, ctx), ctx), ctx);
        } else {
            return acc;
        }
    }
}

Series parse_expr(Cursor& c, int order, const Ctx& ctx) {
    bool negate = false;
    if (c.accept('-')) negate = true;
    else c.accept('+');
    Series acc = parse_product(c, order, ctx);
    if (negate) acc = neg(acc);
    for (;;) {
        if (c.accept('+')) acc = add(acc, parse_product(c, order, ctx));
        else if (c.accept('-')) acc = sub(acc, parse_product(c, order, ctx));
        else return acc;
    }
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    bool negate = c.accept('-');
    Rational r = c.rational();
    if (!c.done()) c.fail("trailing input");
    return negate ? -r : r;
}

Poly parse_poly(std::string_view text) {
    Cursor c(text);
    Poly p;
    bool negate = false;
    if (c.accept('-')) negate = true;
    else c.accept('+');
    for (;;) {
        Poly t = parse_term(c);
        p += negate ? -t : t;
        if (c.done()) return p;
        if (c.accept('+')) negate = false;
        else if (c.accept('-')) negate = true;
        else c.fail("expected '+' or '-'");
    }
}

std::vector<Poly> parse_poly_list(std::string_view text) {
    std::vector<Poly> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_poly(text.substr(start, comma - start)));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

Series parse_series_expr(std::string_view text, int order, const Ctx& ctx) {
    Cursor c(text);
    Series s = parse_expr(c, order, ctx);
    if (!c.done()) c.fail("trailing input");
    return s;
}

RiordanArray parse_riordan_literal(std::string_view text, int order, const Ctx& ctx) {
    const size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("riordan literal must be 'f;h'");
    if (text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError("riordan literal must contain exactly one ';'");
    Series f = parse_series_expr(text.substr(0, semi), order, ctx);
    Series h = parse_series_expr(text.substr(semi + 1), order, ctx);
    return RiordanArray(std::move(f), std::move(h));
}

}  // namespace riordan
