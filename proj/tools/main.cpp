#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "riordan/errors.hpp"
#include "riordan/identities.hpp"
#include "riordan/json_io.hpp"
#include "riordan/parse.hpp"
#include "riordan/sequences.hpp"

namespace {

using namespace riordan;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

struct GlobalOpts {
    int order = 12;
    int q_bound = -1;  // resolved to 2*order+4 when unset
    std::string format = "pretty";
    std::string output;
    bool timing = false;

    Ctx ctx() const { return Ctx::q_adic(q_bound); }
};

bool glob_match(const std::string& pat, const std::string& s, size_t p = 0, size_t i = 0) {
    while (p < pat.size()) {
        if (pat[p] == '*') {
            for (size_t k = i; k <= s.size(); ++k)
                if (glob_match(pat, s, p + 1, k)) return true;
            return false;
        }
        if (i == s.size()) return false;
        if (pat[p] != '?' && pat[p] != s[i]) return false;
        ++p;
        ++i;
    }
    return i == s.size();
}

std::string render_triangle(const Triangle& t, const std::string& format) {
    if (format == "json") return triangle_to_json(t).dump() + "\n";
    std::ostringstream os;
    for (int n = 0; n < t.order(); ++n) {
        for (int j = 0; j < (format == "csv" ? t.order() : n + 1); ++j) {
            if (j) os << (format == "csv" ? "," : "  ");
            if (j <= n) os << t.entry(n, j).str();
        }
        os << "\n";
    }
    return os.str();
}

std::string render_riordan(const RiordanArray& r, const std::string& format) {
    if (format == "json") return riordan_to_json(r).dump() + "\n";
    auto join = [](const std::vector<Poly>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += v[i].str();
        }
        return s;
    };
    if (format == "csv")
        return "f," + join(r.f().coeffs()) + "\nh," + join(r.h().coeffs()) + "\n";
    return "f: " + join(r.f().coeffs()) + "\nh: " + join(r.h().coeffs()) + "\n";
}

std::string render_poly_list(const std::vector<Poly>& v, const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : v) arr.push_back(p.str());
        return arr.dump() + "\n";
    }
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (format == "csv") os << i << "," << v[i].str() << "\n";
        else os << v[i].str() << "\n";
    }
    return os.str();
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw ParseError("cannot open output file '" + g.output + "'");
    out << text;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad json in '" + path + "': " + e.what());
    }
}

/// One triangle-producing input: a riordan literal, toeplitz data, a json
/// file, or a prefixed spec string "riordan:...", "toeplitz:...", "json:...".
struct TriangleInput {
    std::string riordan_literal;
    std::string toeplitz_literal;
    std::string json_path;

    static TriangleInput from_spec(const std::string& spec) {
        TriangleInput in;
        if (spec.rfind("riordan:", 0) == 0) in.riordan_literal = spec.substr(8);
        else if (spec.rfind("toeplitz:", 0) == 0) in.toeplitz_literal = spec.substr(9);
        else if (spec.rfind("json:", 0) == 0) in.json_path = spec.substr(5);
        else throw ParseError("spec must start with riordan:, toeplitz: or json:");
        return in;
    }

    bool is_riordan() const { return !riordan_literal.empty(); }

    RiordanArray as_riordan(const GlobalOpts& g) const {
        return parse_riordan_literal(riordan_literal, g.order - 1, g.ctx());
    }

    std::vector<Poly> toeplitz_data(const GlobalOpts& g) const {
        std::vector<Poly> d = parse_poly_list(toeplitz_literal);
        if (static_cast<int>(d.size()) < g.order)
            throw ParseError("toeplitz data has " + std::to_string(d.size()) +
                             " entries but --order is " + std::to_string(g.order));
        return d;
    }

    Triangle load(const GlobalOpts& g) const {
        if (!riordan_literal.empty()) return as_riordan(g).to_matrix(g.ctx());
        if (!toeplitz_literal.empty())
            return Triangle::from_toeplitz(toeplitz_data(g), g.order);
        return triangle_from_json(load_json_file(json_path));
    }
};

int cmd_show(const GlobalOpts& g, const TriangleInput& in, const std::string& family) {
    if (!family.empty()) {
        if (family == "q.binomial") {
            Triangle t = Triangle::build(g.order, [](int n, int k) { return gauss_binomial(n, k); });
            emit(g, render_triangle(t, g.format));
        } else {
            emit(g, render_poly_list(sequence_family(family, g.order), g.format));
        }
        return 0;
    }
    emit(g, render_triangle(in.load(g), g.format));
    return 0;
}

int cmd_invert(const GlobalOpts& g, const TriangleInput& in, bool as_riordan) {
    if (as_riordan) {
        if (!in.is_riordan())
            throw ParseError("--as-riordan needs a riordan input");
        emit(g, render_riordan(riordan_inverse(in.as_riordan(g), g.ctx()), g.format));
        return 0;
    }
    if (!in.toeplitz_literal.empty()) {
        // Toeplitz in, Toeplitz data out.
        std::vector<Poly> d = in.toeplitz_data(g);
        std::vector<Poly> e;
        if (!d.empty() && d[0] == Poly::one()) {
            e = toeplitz_inverse_seq(d, g.order, g.ctx());
        } else {
            Triangle t = inverse(Triangle::from_toeplitz(d, g.order), g.ctx());
            for (int n = 0; n < g.order; ++n) e.push_back(t.entry(n, 0));
        }
        if (g.format == "pretty") {
            std::string s;
            for (size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + e[i].str();
            emit(g, s + "\n");
        } else {
            emit(g, render_poly_list(e, g.format));
        }
        return 0;
    }
    emit(g, render_triangle(inverse(in.load(g), g.ctx()), g.format));
    return 0;
}

int cmd_mul(const GlobalOpts& g, const std::string& spec_a, const std::string& spec_b,
            bool as_riordan) {
    const TriangleInput a = TriangleInput::from_spec(spec_a);
    const TriangleInput b = TriangleInput::from_spec(spec_b);
    if (as_riordan) {
        if (!a.is_riordan() || !b.is_riordan())
            throw ParseError("--as-riordan needs two riordan inputs");
        emit(g, render_riordan(riordan_mul(a.as_riordan(g), b.as_riordan(g), g.ctx()), g.format));
        return 0;
    }
    emit(g, render_triangle(mul(a.load(g), b.load(g), g.ctx()), g.format));
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::vector<std::string>& filters, bool all,
               const std::vector<std::string>& params) {
    std::vector<std::string> ids;
    for (const auto& info : list_identities()) {
        if (all) {
            ids.push_back(info.id);
            continue;
        }
        for (const auto& f : filters)
            if (glob_match(f, info.id)) {
                ids.push_back(info.id);
                break;
            }
    }
    if (ids.empty()) {
        std::cerr << "error: no identity matches "
                  << (filters.empty() ? "(no filter given; try --all)" : "the given filters")
                  << "\n";
        return kExitUsage;
    }
    RunConfig cfg;
    cfg.order = g.order;
    cfg.q_bound = g.q_bound;
    for (const auto& kv : params) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("--param expects key=value");
        cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }

    std::ostringstream os;
    int failures = 0;
    for (const auto& id : ids) {
        const IdentityReport rep = run_identity(id, cfg);
        failures += !rep.pass;
        if (g.format == "json") {
            os << report_to_json(rep, g.timing).dump() << "\n";
        } else if (g.format == "csv") {
            os << rep.id << "," << (rep.pass ? "pass" : "fail") << "," << rep.order << ","
               << rep.q_bound << "\n";
        } else {
            os << (rep.pass ? "PASS " : "FAIL ") << rep.id;
            if (!rep.pass && rep.first_mismatch)
                os << "  at (" << rep.first_mismatch->n << "," << rep.first_mismatch->j
                   << "): " << rep.first_mismatch->lhs << " != " << rep.first_mismatch->rhs;
            if (g.timing) os << "  (" << rep.elapsed_ms << " ms)";
            os << "\n";
        }
    }
    if (g.format == "pretty")
        os << (static_cast<int>(ids.size()) - failures) << "/" << ids.size()
           << " identities passed (order=" << g.order << ", q-bound=" << g.q_bound << ")\n";
    emit(g, os.str());
    return failures == 0 ? 0 : kExitVerifyFail;
}

int cmd_list(const GlobalOpts& g, bool families) {
    std::ostringstream os;
    if (families) {
        if (g.format == "json") {
            nlohmann::json arr = list_sequence_families();
            arr.push_back("q.binomial");
            os << arr.dump() << "\n";
        } else {
            for (const auto& id : list_sequence_families()) os << id << "\n";
            os << "q.binomial\n";
        }
    } else if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& info : list_identities())
            arr.push_back({{"id", info.id}, {"anchor", info.anchor}});
        os << arr.dump() << "\n";
    } else {
        for (const auto& info : list_identities()) os << info.id << "\t" << info.anchor << "\n";
    }
    emit(g, os.str());
    return 0;
}

int cmd_pair_check(const GlobalOpts& g, const std::string& file_a, const std::string& file_b) {
    const FamilyTable a = family_table_from_json(load_json_file(file_a));
    const FamilyTable b = family_table_from_json(load_json_file(file_b));
    const IdentityReport rep = pair_check(a, b, g.order);
    if (g.format == "json") {
        emit(g, report_to_json(rep, g.timing).dump() + "\n");
    } else {
        std::ostringstream os;
        os << (rep.pass ? "PASS" : "FAIL") << " pair check (order=" << g.order << ")";
        if (!rep.pass && rep.first_mismatch)
            os << "  at (" << rep.first_mismatch->n << "," << rep.first_mismatch->j
               << "): " << rep.first_mismatch->lhs << " != " << rep.first_mismatch->rhs;
        os << "\n";
        emit(g, os.str());
    }
    return rep.pass ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Riordan-array and lower-triangular matrix calculator"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--order", g.order, "truncation order (matrix rows)")
        ->check(CLI::Range(2, 64));
    app.add_option("--q-bound", g.q_bound, "q-adic truncation degree (default 2*order+4)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--output", g.output, "write output to a file instead of stdout");
    app.add_flag("--timing", g.timing, "include elapsed milliseconds in reports");

    // show
    auto* show = app.add_subcommand("show", "render a triangle, riordan pair or sequence family")->fallthrough();
    TriangleInput show_in;
    std::string show_family;
    show->add_option("--riordan", show_in.riordan_literal, "riordan literal 'f;h'");
    show->add_option("--toeplitz", show_in.toeplitz_literal, "comma-separated toeplitz data");
    show->add_option("--json", show_in.json_path, "triangle json file");
    show->add_option("--family", show_family, "sequence family id (see 'list --families')");

    // invert
    auto* inv = app.add_subcommand("invert", "invert a triangle or riordan pair")->fallthrough();
    TriangleInput inv_in;
    bool inv_as_riordan = false;
    inv->add_option("--riordan", inv_in.riordan_literal, "riordan literal 'f;h'");
    inv->add_option("--toeplitz", inv_in.toeplitz_literal, "comma-separated toeplitz data");
    inv->add_option("--json", inv_in.json_path, "triangle json file");
    inv->add_flag("--as-riordan", inv_as_riordan, "print the inverse as an (f,h) pair");

    // mul
    auto* mulcmd = app.add_subcommand("mul", "multiply two triangles")->fallthrough();
    std::string mul_a, mul_b;
    bool mul_as_riordan = false;
    mulcmd->add_option("a", mul_a, "first factor: riordan:F;H | toeplitz:... | json:path")
        ->required();
    mulcmd->add_option("b", mul_b, "second factor")->required();
    mulcmd->add_flag("--as-riordan", mul_as_riordan, "print the product as an (f,h) pair");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks")->fallthrough();
    std::vector<std::string> verify_filters, verify_params;
    bool verify_all = false;
    verify->add_option("ids", verify_filters, "identity id globs, e.g. BERN_* QBIN_INV");
    verify->add_flag("--all", verify_all, "run the whole catalog");
    verify->add_option("--param", verify_params, "parameter override key=value (repeatable)");

    // list
    auto* list = app.add_subcommand("list", "list the identity catalog")->fallthrough();
    bool list_families = false;
    list->add_flag("--families", list_families, "list sequence family ids instead");

    // pair-check
    auto* pc = app.add_subcommand("pair-check",
                                  "inverse-pair check for externally supplied families")->fallthrough();
    std::string pc_a, pc_b;
    pc->add_option("family", pc_a, "json table: {\"polys\": [...]} or {\"a_n\",\"b_n\",\"c_n\"}")
        ->required();
    pc->add_option("companion", pc_b, "json table of the claimed inverse family")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (g.q_bound < 0) g.q_bound = 2 * g.order + 4;
    try {
        if (g.q_bound < g.order) throw ParseError("--q-bound must be at least --order");
        if (show->parsed()) {
            const int given = (!show_in.riordan_literal.empty()) +
                              (!show_in.toeplitz_literal.empty()) + (!show_in.json_path.empty()) +
                              (!show_family.empty());
            if (given != 1)
                throw ParseError("show needs exactly one of --riordan/--toeplitz/--json/--family");
            return cmd_show(g, show_in, show_family);
        }
        if (inv->parsed()) {
            const int given = (!inv_in.riordan_literal.empty()) +
                              (!inv_in.toeplitz_literal.empty()) + (!inv_in.json_path.empty());
            if (given != 1)
                throw ParseError("invert needs exactly one of --riordan/--toeplitz/--json");
            return cmd_invert(g, inv_in, inv_as_riordan);
        }
        if (mulcmd->parsed()) return cmd_mul(g, mul_a, mul_b, mul_as_riordan);
        if (verify->parsed()) return cmd_verify(g, verify_filters, verify_all, verify_params);
        if (list->parsed()) return cmd_list(g, list_families);
        if (pc->parsed()) return cmd_pair_check(g, pc_a, pc_b);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitUsage;
}
