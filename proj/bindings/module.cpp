#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riordan/errors.hpp"
#include "riordan/identities.hpp"
#include "riordan/json_io.hpp"
#include "riordan/parse.hpp"
#include "riordan/sequences.hpp"

namespace py = pybind11;
using namespace riordan;

namespace {

Ctx make_ctx(std::optional<int> q_bound) {
    Ctx ctx;
    ctx.q_bound = q_bound;
    return ctx;
}

py::dict report_to_dict(const IdentityReport& rep, bool timing) {
    py::dict d;
    d["id"] = rep.id;
    d["verdict"] = rep.pass ? "pass" : "fail";
    d["order"] = rep.order;
    d["q_bound"] = rep.q_bound;
    py::dict params;
    for (const auto& [k, v] : rep.params) params[py::str(k)] = v;
    d["params"] = params;
    if (rep.first_mismatch) {
        py::dict mm;
        mm["n"] = rep.first_mismatch->n;
        mm["j"] = rep.first_mismatch->j;
        mm["lhs"] = rep.first_mismatch->lhs;
        mm["rhs"] = rep.first_mismatch->rhs;
        d["first_mismatch"] = mm;
    } else {
        d["first_mismatch"] = py::none();
    }
    d["notes"] = rep.notes;
    if (timing) d["elapsed_ms"] = rep.elapsed_ms;
    return d;
}

std::vector<std::string> poly_strs(const std::vector<Poly>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Riordan-array and lower-triangular matrix algebra";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }))
        .def_static("parse", &parse_poly)
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.str() + "')"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("is_zero", &Poly::is_zero)
        .def("substitute",
             [](const Poly& p, const std::string& var, const std::string& value) {
                 const auto v = var_from_name(var);
                 if (!v) throw ParseError("unknown indeterminate '" + var + "'");
                 return p.substitute(*v, parse_rational(value));
             },
             py::arg("var"), py::arg("value"))
        .def("degree", [](const Poly& p, const std::string& var) {
            const auto v = var_from_name(var);
            if (!v) throw ParseError("unknown indeterminate '" + var + "'");
            return p.degree(*v);
        });

    py::class_<Series>(m, "Series")
        .def(py::init([](int order, const std::vector<std::string>& coeffs) {
                 std::vector<Poly> c;
                 c.reserve(coeffs.size());
                 for (const auto& s : coeffs) c.push_back(parse_poly(s));
                 return Series(order, std::move(c));
             }),
             py::arg("order"), py::arg("coeffs"))
        .def_static("expression",
                    [](const std::string& text, int order, std::optional<int> q_bound) {
                        return parse_series_expr(text, order, make_ctx(q_bound));
                    },
                    py::arg("text"), py::arg("order"), py::arg("q_bound") = py::none())
        .def("order", &Series::order)
        .def("coeff", &Series::coeff, py::arg("n"))
        .def("coeffs", [](const Series& s) { return poly_strs(s.coeffs()); })
        .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
        .def("__str__", &Series::str)
        .def("mul",
             [](const Series& a, const Series& b, std::optional<int> q_bound) {
                 return mul(a, b, make_ctx(q_bound));
             },
             py::arg("other"), py::arg("q_bound") = py::none())
        .def("inverse",
             [](const Series& s, std::optional<int> q_bound) {
                 return inverse(s, make_ctx(q_bound));
             },
             py::arg("q_bound") = py::none())
        .def("compose",
             [](const Series& outer, const Series& inner, std::optional<int> q_bound) {
                 return compose(outer, inner, make_ctx(q_bound));
             },
             py::arg("inner"), py::arg("q_bound") = py::none())
        .def("revert", [](const Series& h, std::optional<int> q_bound) {
            return revert(h, make_ctx(q_bound));
        }, py::arg("q_bound") = py::none());

    py::class_<Triangle>(m, "Triangle")
        .def_static("identity", &Triangle::identity, py::arg("order"))
        .def_static("from_toeplitz",
                    [](const std::vector<std::string>& data, int order) {
                        std::vector<Poly> d;
                        d.reserve(data.size());
                        for (const auto& s : data) d.push_back(parse_poly(s));
                        return Triangle::from_toeplitz(d, order);
                    },
                    py::arg("data"), py::arg("order"))
        .def_static("from_json",
                    [](const std::string& text) {
                        return triangle_from_json(nlohmann::json::parse(text));
                    })
        .def("order", &Triangle::order)
        .def("entry", [](const Triangle& t, int n, int j) { return t.entry(n, j); })
        .def("__eq__", [](const Triangle& a, const Triangle& b) { return a == b; })
        .def("is_identity", &Triangle::is_identity)
        .def("mul",
             [](const Triangle& a, const Triangle& b, std::optional<int> q_bound) {
                 return mul(a, b, make_ctx(q_bound));
             },
             py::arg("other"), py::arg("q_bound") = py::none())
        .def("inverse",
             [](const Triangle& t, std::optional<int> q_bound) {
                 return inverse(t, make_ctx(q_bound));
             },
             py::arg("q_bound") = py::none())
        .def("inverse_block_recursion",
             [](const Triangle& t, std::optional<int> q_bound) {
                 return inverse_block_recursion(t, make_ctx(q_bound));
             },
             py::arg("q_bound") = py::none())
        .def("grade",
             [](const Triangle& t, const Poly& lam) { return grade(t, lam); }, py::arg("lam"))
        .def("truncated", &Triangle::truncated, py::arg("order"))
        .def("to_json", [](const Triangle& t) { return triangle_to_json(t).dump(); });

    py::class_<RiordanArray>(m, "RiordanArray")
        .def(py::init<Series, Series>(), py::arg("f"), py::arg("h"))
        .def_static("parse",
                    [](const std::string& literal, int order, std::optional<int> q_bound) {
                        return parse_riordan_literal(literal, order - 1, make_ctx(q_bound));
                    },
                    py::arg("literal"), py::arg("order"), py::arg("q_bound") = py::none(),
                    "Parse 'f;h' with order matrix rows")
        .def("f", &RiordanArray::f)
        .def("h", &RiordanArray::h)
        .def("order", [](const RiordanArray& r) { return r.order() + 1; })
        .def("to_matrix",
             [](const RiordanArray& r, std::optional<int> q_bound) {
                 return r.to_matrix(make_ctx(q_bound));
             },
             py::arg("q_bound") = py::none())
        .def("__eq__", [](const RiordanArray& a, const RiordanArray& b) { return a == b; })
        .def("mul",
             [](const RiordanArray& a, const RiordanArray& b, std::optional<int> q_bound) {
                 return riordan_mul(a, b, make_ctx(q_bound));
             },
             py::arg("other"), py::arg("q_bound") = py::none())
        .def("inverse",
             [](const RiordanArray& r, std::optional<int> q_bound) {
                 return riordan_inverse(r, make_ctx(q_bound));
             },
             py::arg("q_bound") = py::none())
        .def("subgroup_member",
             [](const RiordanArray& r, const std::string& kind, std::optional<int> q_bound) {
                 const SubgroupKind k = subgroup_from_name(kind);
                 const Membership mem = subgroup_member(k, r, make_ctx(q_bound));
                 py::dict d;
                 d["kind"] = subgroup_name(k);
                 d["member"] = mem.member;
                 py::dict w;
                 for (const auto& [key, v] : mem.witness) w[py::str(key)] = v;
                 d["witness"] = w;
                 d["order"] = r.order() + 1;
                 return d;
             },
             py::arg("kind"), py::arg("q_bound") = py::none())
        .def("decompose_appell_bell", [](const RiordanArray& r) {
            return decompose_appell_bell(r);
        })
        .def("to_json", [](const RiordanArray& r) { return riordan_to_json(r).dump(); });

    m.def("gbt",
          [](const std::vector<std::string>& seq, const std::string& alpha) {
              std::vector<Poly> s;
              s.reserve(seq.size());
              for (const auto& t : seq) s.push_back(parse_poly(t));
              return poly_strs(gbt(s, parse_poly(alpha)));
          },
          py::arg("seq"), py::arg("alpha"), "generalized binomial transform");

    m.def("sequence_family",
          [](const std::string& id, int count) { return poly_strs(sequence_family(id, count)); },
          py::arg("id"), py::arg("count"));
    m.def("list_sequence_families", &list_sequence_families);
    m.def("bernoulli_numbers", [](int count) {
        std::vector<std::string> out;
        for (const auto& r : bernoulli_numbers(count)) out.push_back(r.str());
        return out;
    });
    m.def("euler_numbers", [](int count) {
        std::vector<std::string> out;
        for (const auto& r : euler_numbers(count)) out.push_back(r.str());
        return out;
    });
    m.def("gauss_binomial", [](int n, int k) { return gauss_binomial(n, k); });

    m.def("list_identities", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& info : list_identities()) out.emplace_back(info.id, info.anchor);
        return out;
    });
    m.def("run_identity",
          [](const std::string& id, int order, int q_bound,
             const std::map<std::string, std::string>& params, bool timing) {
              RunConfig cfg;
              cfg.order = order;
              cfg.q_bound = q_bound < 0 ? 2 * order + 4 : q_bound;
              cfg.params = params;
              return report_to_dict(run_identity(id, cfg), timing);
          },
          py::arg("id"), py::arg("order") = 12, py::arg("q_bound") = -1,
          py::arg("params") = std::map<std::string, std::string>{}, py::arg("timing") = false);
    m.def("run_all",
          [](int order, int q_bound, bool timing) {
              RunConfig cfg;
              cfg.order = order;
              cfg.q_bound = q_bound < 0 ? 2 * order + 4 : q_bound;
              py::list out;
              for (const auto& rep : run_all(cfg)) out.append(report_to_dict(rep, timing));
              return out;
          },
          py::arg("order") = 12, py::arg("q_bound") = -1, py::arg("timing") = false);
    m.def("pair_check",
          [](const std::string& table_a, const std::string& table_b, int order, bool timing) {
              const FamilyTable a = family_table_from_json(nlohmann::json::parse(table_a));
              const FamilyTable b = family_table_from_json(nlohmann::json::parse(table_b));
              return report_to_dict(pair_check(a, b, order), timing);
          },
          py::arg("table_a"), py::arg("table_b"), py::arg("order") = 12,
          py::arg("timing") = false);
}
