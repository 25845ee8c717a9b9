// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nmlab/properties.hpp"
#include "nmlab/report.hpp"

namespace nmlab {

// Scenario documents:
//   {"id": str, "summary": str, "tags": [str],
//    "universe": <universe>, "operation": <operation>,
//    "assumptions": <assumptions>            (optional),
//    "checks": [{"run": kind, ..., "expect": fragment}]}
// Check kinds and their parameters:
//   property {property}            representation {kind}
//   query {input, formula}         union_query {input, base, formula}
//   represent_query {input, kind, formula}
//   extension_query {input | theory, kind, formula}
//   assumption_representation      assumption_antitonicity
//   maximality {kind}              cuminters       supracompact_equiv
//   unique_extension               cumuni
//   extension_agreement {kind}     cocompact {kind}
//   admissibility   strong_admissibility {max_family}   arrow_set
// A check passes when its result document contains the "expect" fragment.

struct ScenarioInfo {
  std::string id;
  std::string summary;
  std::vector<std::string> tags;
};

/// The builtin registry, ordered by id.
std::vector<ScenarioInfo> list_scenarios();
const Json& scenario_document(std::string_view id);

/// Runs a builtin scenario by id, or a scenario document read from a path.
/// Errors: Error for an unknown id, ConfigError for invalid documents,
/// UniverseTooLarge when a check exceeds its cap.
RunReport run_scenario(std::string_view id_or_path);
RunReport run_scenario_document(const Json& doc);

// Kernel identity sweeps over every combination drawn from u.

/// cn(X,Y) ∩ cn(X,Z) = cn(X, cn(Y) ∩ cn(Z)) for all triples.
PropertyVerdict sweep_admissibility(const Universe& u);
/// cn(A, ⋂ cn(Y_i)) = ⋂ cn(A, Y_i) for every A in u and every family of
/// 1..max_family distinct members drawn from the sets of u with at most one
/// formula.
PropertyVerdict sweep_strong_admissibility(const Universe& u, std::size_t max_family);
/// arrow_set(A, Y) ⊆ cn(X) iff Y ⊆ cn(X ∪ A) for all triples.
PropertyVerdict sweep_arrow_set(const Universe& u);

// Randomized table operations.

enum class TableFamily {
  arbitrary,       // a structured table with one entry replaced at random
  supraclassical,  // the same, but the replacement stays inside its input
  antitonic,       // cn(X ∪ S(X)) for a random antitonic S
  ranked,          // minimal valuations of a random ranking
};

std::string_view to_string(TableFamily family);

/// Properties every table of the family has; all tables are left- and
/// right-absorbing.
std::vector<PropertyKind> guaranteed_properties(TableFamily family);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned atoms = 2;
  /// Only families guaranteeing all of these are generated.
  std::vector<PropertyKind> enforce;
};

/// A total table over all theories of `lang`, deterministic in the RNG
/// state. Uses raw engine output only, so tables are portable.
TheoryTable random_table(TableFamily family, std::uint64_t seed, const Language& lang);

/// Generates `count` table operations and checks, on the universe whose pool
/// is the canonical axiom of every theory (max set size 2):
///   largest equation          ⟺ supraclassical ∧ deductive
///   trace equation            ⟺ supraclassical ∧ right-absorbing ∧ deductive
///   cumulative-trace equation ⟺ supraclassical ∧ left-absorbing ∧ deductive
///                                ∧ cumulative
/// One check record per operation. Throws std::invalid_argument for more
/// than 2 atoms or when no family satisfies `enforce`.
RunReport run_fuzz(const FuzzOptions& options);

/// The universe used by run_fuzz.
Universe theory_universe(const Language& lang);

}  // namespace nmlab
