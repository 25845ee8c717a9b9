// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmlab/operations.hpp"
#include "nmlab/universe.hpp"

namespace nmlab {

enum class PropertyKind {
  supraclassicality,
  left_absorption,
  right_absorption,
  deductivity,
  cumulativity,
  antitonicity,
  compactness,
  supracompactness,
};

inline constexpr std::array<PropertyKind, 8> kAllProperties = {
    PropertyKind::supraclassicality, PropertyKind::left_absorption, PropertyKind::right_absorption,
    PropertyKind::deductivity,       PropertyKind::cumulativity,    PropertyKind::antitonicity,
    PropertyKind::compactness,       PropertyKind::supracompactness,
};

std::string_view to_string(PropertyKind kind);
/// Accepts the names produced by to_string (and '-' for '_').
std::optional<PropertyKind> parse_property_kind(std::string_view name);

enum class Outcome { counterexample, no_counterexample_in_universe, precondition_failed };

std::string_view to_string(Outcome outcome);

/// Instantiation of a schema that violates it. `y` and `formula` are present
/// when the schema has them.
struct Witness {
  FormulaSet x;
  std::optional<FormulaSet> y;
  std::optional<Formula> formula;
};

/// Result of one bounded check.
struct PropertyVerdict {
  std::string property;
  std::string operation;
  Outcome outcome = Outcome::no_counterexample_in_universe;
  std::optional<Witness> witness;
  UniverseDescriptor universe;
  std::vector<std::string> triviality_flags;
  std::vector<std::string> notes;
  std::uint64_t instantiations = 0;

  bool passed() const noexcept { return outcome == Outcome::no_counterexample_in_universe; }
};

/// Checks one property of `op` over every instantiation drawn from `u`.
///
/// Schemas (C = op, all sets drawn from u unless noted):
///   supraclassicality  cn(X) ⊆ C(X)
///   left_absorption    cn(C(X)) = C(X)   (structural for theory outputs)
///   right_absorption   cn(X) = cn(Y) ⇒ C(X) = C(Y); Y also ranges over the
///                      canonical axiomatization of cn(X)
///   deductivity        Y ⊆ X ⇒ C(X) ⊆ cn(X ∪ C(Y))
///   cumulativity       Y ⊆ cn(C(X)) ⇒ cn(C(X ∪ Y)) = cn(C(X)); Y also ranges
///                      over canonical axioms of every theory extending C(X)
///   antitonicity       X ⊆ Y ⇒ C(Y) ⊆ C(X)
///   compactness        x ∈ C(X) ⇒ ∃A ⊆ X ∀Y (A ⊆ Y ⊆ X ⇒ x ∈ C(Y))
///   supracompactness   x ∈ C(X) ⇒ ∃A ⊆ X ∀Y (A ⊆ Y ⊆ C(X) ⇒ x ∈ C(Y)),
///                      with Y = A ∪ Z for Z from the cumulativity Y-space
/// x ranges over the pool. The first violation in enumeration order is
/// reported, and is replayed before it is returned.
///
/// Throws UniverseTooLarge when the instantiation cap is exceeded.
PropertyVerdict check_property(const InferenceOp& op, PropertyKind prop, const Universe& u);

/// One verdict per property, in kAllProperties order.
std::vector<PropertyVerdict> check_all(const InferenceOp& op, const Universe& u);

/// Re-evaluates a witness from scratch (no memoization) and reports whether
/// it violates the schema of `prop`.
bool replay_violation(const InferenceOp& op, PropertyKind prop, const Witness& w, const Universe& u);

/// First pool formula in `in` but not in `out`, else the canonical axiom of
/// `in`. Requires that `in` is not a subset of `out`.
Formula separating_formula(const Theory& in, const Theory& out, const Universe& u);

/// Runs the listed properties; returns the first failing verdict, or nullopt
/// when all pass. Used to gate checks on their hypotheses.
std::optional<PropertyVerdict> first_failure(const InferenceOp& op, std::span<const PropertyKind> props,
                                             const Universe& u);

/// A precondition_failed verdict that carries the failing property's witness.
PropertyVerdict precondition_failure(std::string check, const InferenceOp& op, const Universe& u,
                                     const PropertyVerdict& cause);

}  // namespace nmlab
