#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riordan/riordan_array.hpp"
#include "riordan/sequences.hpp"

namespace riordan {

/// Settings for one identity run. Checks over plain rationals ignore
/// q_bound; q-series checks compute mod q^q_bound.
struct RunConfig {
    int order = 12;
    int q_bound = 28;
    /// Optional overrides, polynomial literals keyed by parameter name.
    std::map<std::string, std::string> params;
};

struct Mismatch {
    int n = 0;
    int j = 0;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    bool pass = false;
    int order = 0;
    int q_bound = 0;
    std::map<std::string, std::string> params;
    std::optional<Mismatch> first_mismatch;
    long long elapsed_ms = 0;
    std::vector<std::string> notes;
};

struct IdentityInfo {
    std::string id;
    /// Human-readable statement with its equation tag.
    std::string anchor;
};

/// Catalog of every registered identity, ordered by id.
std::vector<IdentityInfo> list_identities();
bool has_identity(const std::string& id);
const IdentityInfo& identity_info(const std::string& id);

/// Runs one identity; throws ParseError for unknown ids, MathError for
/// order < 2.
IdentityReport run_identity(const std::string& id, const RunConfig& cfg);

/// Runs the whole catalog in id order with the same configuration.
std::vector<IdentityReport> run_all(const RunConfig& cfg);

/// Polynomial family defined either by explicit members or by a three-term
/// recurrence P_{n+1} = (a_n x + b_n) P_n - c_n P_{n-1}, P_0 = 1.
/// Recurrence coefficients are indexed by n and may involve any alphabet
/// indeterminate.
struct FamilyTable {
    std::vector<Poly> explicit_polys;
    std::vector<Poly> rec_a, rec_b, rec_c;
};

/// Materializes the first `count` members of the family.
std::vector<Poly> family_from_table(const FamilyTable& table, int count);

/// Generic inverse-pair hook for externally supplied recurrence families:
/// checks [ [n;j]_q P_{n-j} ] * [ [n;j]_q Phat_{n-j} ] = 1, the
/// denominator-cleared form of [P_{n-j}/[n-j]_q!]^{-1} = [Phat_{n-j}/[n-j]_q!].
IdentityReport pair_check(const FamilyTable& a, const FamilyTable& b, int order);

}  // namespace riordan
