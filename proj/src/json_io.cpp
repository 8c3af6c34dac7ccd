#include "riordan/json_io.hpp"

#include "riordan/errors.hpp"
#include "riordan/parse.hpp"

namespace riordan {

using nlohmann::json;

namespace {

json poly_list_to_json(const std::vector<Poly>& polys) {
    json arr = json::array();
    for (const auto& p : polys) arr.push_back(p.str());
    return arr;
}

std::vector<Poly> poly_list_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Poly> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError(std::string(what) + " entries must be strings");
        out.push_back(parse_poly(item.get<std::string>()));
    }
    return out;
}

}  // namespace

json triangle_to_json(const Triangle& t) {
    json rows = json::array();
    for (int n = 0; n < t.order(); ++n) {
        json row = json::array();
        for (int j = 0; j <= n; ++j) row.push_back(t.entry(n, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"order", t.order()}, {"entries", std::move(rows)}};
}

Triangle triangle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("entries"))
        throw ParseError("triangle json needs 'order' and 'entries'");
    const int order = j.at("order").get<int>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != order)
        throw ParseError("triangle json: 'entries' must have one row per order");
    Triangle t(order);
    for (int n = 0; n < order; ++n) {
        const json& row = rows[static_cast<size_t>(n)];
        if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
            throw ParseError("triangle json: row " + std::to_string(n) + " must have " +
                             std::to_string(n + 1) + " entries");
        for (int k = 0; k <= n; ++k)
            t.set(n, k, parse_poly(row[static_cast<size_t>(k)].get<std::string>()));
    }
    return t;
}

json riordan_to_json(const RiordanArray& r) {
    return json{{"order", r.order() + 1},
                {"f", poly_list_to_json(r.f().coeffs())},
                {"h", poly_list_to_json(r.h().coeffs())}};
}

RiordanArray riordan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("f") || !j.contains("h"))
        throw ParseError("riordan json needs 'order', 'f' and 'h'");
    const int rows = j.at("order").get<int>();
    if (rows < 1) throw ParseError("riordan json: order must be positive");
    const int series_order = rows - 1;
    auto load = [&](const char* key) {
        std::vector<Poly> coeffs = poly_list_from_json(j.at(key), key);
        return Series(series_order, std::move(coeffs));
    };
    return RiordanArray(load("f"), load("h"));
}

json membership_to_json(SubgroupKind kind, const Membership& m, int order) {
    json witness = json::object();
    for (const auto& [k, v] : m.witness) witness[k] = v;
    return json{{"kind", subgroup_name(kind)},
                {"member", m.member},
                {"witness", std::move(witness)},
                {"order", order}};
}

json report_to_json(const IdentityReport& r, bool with_timing) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json mismatch;
    if (r.first_mismatch) {
        mismatch = json{{"n", r.first_mismatch->n},
                        {"j", r.first_mismatch->j},
                        {"lhs", r.first_mismatch->lhs},
                        {"rhs", r.first_mismatch->rhs}};
    } else {
        mismatch = nullptr;
    }
    json out{{"id", r.id},
             {"verdict", r.pass ? "pass" : "fail"},
             {"order", r.order},
             {"q_bound", r.q_bound},
             {"params", std::move(params)},
             {"first_mismatch", std::move(mismatch)},
             {"notes", r.notes}};
    if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

FamilyTable family_table_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("family table must be a json object");
    FamilyTable t;
    if (j.contains("polys")) {
        t.explicit_polys = poly_list_from_json(j.at("polys"), "polys");
        return t;
    }
    if (!j.contains("a_n") || !j.contains("b_n") || !j.contains("c_n"))
        throw ParseError("family table needs 'polys' or all of 'a_n', 'b_n', 'c_n'");
    t.rec_a = poly_list_from_json(j.at("a_n"), "a_n");
    t.rec_b = poly_list_from_json(j.at("b_n"), "b_n");
    t.rec_c = poly_list_from_json(j.at("c_n"), "c_n");
    if (t.rec_a.size() != t.rec_b.size() || t.rec_a.size() != t.rec_c.size())
        throw ParseError("family table: a_n, b_n, c_n must have equal lengths");
    return t;
}

}  // namespace riordan
