#pragma once

#include <json.hpp>

#include "riordan/identities.hpp"

namespace riordan {

/// {"order": N, "entries": [[row 0], [row 1], ...]} with polynomial literals.
nlohmann::json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);

/// {"order": N, "f": [...], "h": [...]} with polynomial literals per power.
nlohmann::json riordan_to_json(const RiordanArray& r);
RiordanArray riordan_from_json(const nlohmann::json& j);

/// {"kind": ..., "member": ..., "witness": {...}, "order": N}
nlohmann::json membership_to_json(SubgroupKind kind, const Membership& m, int order);

/// Report object; elapsed_ms only with with_timing.
nlohmann::json report_to_json(const IdentityReport& r, bool with_timing);

/// {"a_n": [...], "b_n": [...], "c_n": [...]} or {"polys": [...]}.
FamilyTable family_table_from_json(const nlohmann::json& j);

}  // namespace riordan
