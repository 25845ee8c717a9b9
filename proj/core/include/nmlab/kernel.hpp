// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/language.hpp"

namespace nmlab {

/// A deductively closed set of formulas, represented by its models. The
/// empty model set is the inconsistent theory (every formula); the full
/// model set is the set of tautologies.
class Theory {
 public:
  Theory() = default;
  explicit Theory(ModelSet models) : models_(models) {}

  static Theory tautologies(const Language& lang) { return Theory(ModelSet::full(lang.size())); }
  static Theory inconsistent(const Language& lang) { return Theory(ModelSet::none(lang.size())); }

  const ModelSet& models() const noexcept { return models_; }
  bool consistent() const noexcept { return !models_.empty(); }

  bool contains(const Formula& x, const Language& lang) const;

  /// Inclusion as formula sets: this ⊆ other iff models(other) ⊆ models(this).
  bool subset_of(const Theory& other) const noexcept { return other.models_.subset_of(models_); }

  /// Set intersection of the two theories (a theory again).
  Theory meet(const Theory& other) const { return Theory(models_ | other.models_); }
  /// Closure of the union of the two theories.
  Theory join(const Theory& other) const { return Theory(models_ & other.models_); }

  bool operator==(const Theory&) const = default;

 private:
  ModelSet models_;
};

/// Models of every member at once; the full set for the empty FormulaSet.
ModelSet models(const FormulaSet& set, const Language& lang);

/// Consequence closure.
Theory cn(const FormulaSet& set, const Language& lang);

bool entails(const Theory& t, const Formula& x, const Language& lang);

/// Conjunction of the members, left to right; `top` for the empty set.
Formula conjoin(const FormulaSet& set);

/// {χ_A -> y : y ∈ Y} where χ_A = conjoin(A). For every X,
/// arrow_set(A,Y) ⊆ cn(X) iff Y ⊆ cn(X ∪ A).
FormulaSet arrow_set(const FormulaSet& a, const FormulaSet& y);

/// cn(X,Y) ∩ cn(X,Z) = cn(X, cn(Y) ∩ cn(Z)). The right-hand side is built
/// syntactically from the disjunctions {y | z}, so the comparison exercises
/// two independent routes to the same theory.
bool verify_admissibility(const FormulaSet& x, const FormulaSet& y, const FormulaSet& z,
                          const Language& lang);

/// cn(A, ⋂ cn(Y_i)) = ⋂ cn(A, Y_i). The intersection on the left is
/// axiomatized by one disjunction per choice function over the family.
/// Throws std::invalid_argument on an empty family.
bool verify_strong_admissibility(const FormulaSet& a, std::span<const FormulaSet> family,
                                 const Language& lang);

/// The disjunction of the minterms of `models`, in ascending valuation order;
/// `bot` for the empty set and `top` for the full set.
Formula canonical_axiom(const ModelSet& models, const Language& lang);

/// Every model set over `lang` (2^(2^n) of them), ascending by bitmask.
/// Throws UniverseTooLarge above `max_atoms` atoms.
std::vector<ModelSet> all_model_sets(const Language& lang, unsigned max_atoms = 3);

/// Theory-quantifying operations default to this atom limit.
inline constexpr unsigned kTheoryQuantifierAtomLimit = 3;

}  // namespace nmlab
