// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/kernel.hpp"

namespace nmlab {

/// Resource limits shared by every bounded check.
struct CheckLimits {
  /// Maximum schema instantiations (assignments to the universally
  /// quantified variables whose hypothesis holds) per check.
  std::uint64_t instantiation_cap = 1'000'000;
  /// Theory-level quantifiers enumerate up to 2^(2^n) model sets.
  unsigned theory_atom_limit = kTheoryQuantifierAtomLimit;
};

/// One finite test set of a universe together with its cached semantics.
struct TestSet {
  std::uint64_t mask;  // pool indices, bit i = pool[i]
  FormulaSet formulas;
  ModelSet models;
};

/// The finite test space: all duplicate-free subsets of a formula pool with
/// at most `max_set_size` members, ordered by size and then
/// lexicographically by pool index.
class Universe {
 public:
  Universe(Language lang, FormulaSet pool, std::size_t max_set_size, CheckLimits limits = {});

  static Universe with_default_pool(Language lang, std::size_t max_set_size, CheckLimits limits = {});

  const Language& language() const noexcept { return lang_; }
  const FormulaSet& pool() const noexcept { return pool_; }
  std::size_t max_set_size() const noexcept { return max_set_size_; }
  const CheckLimits& limits() const noexcept { return limits_; }

  std::span<const TestSet> sets() const noexcept { return sets_; }
  const ModelSet& pool_models(std::size_t i) const { return pool_models_.at(i); }

  /// Position in sets() of the test set with the given pool mask.
  std::optional<std::size_t> index_of(std::uint64_t mask) const;

  /// Guards theory-level quantifiers; throws UniverseTooLarge.
  void require_theory_quantification() const;

 private:
  Language lang_;
  FormulaSet pool_;
  std::size_t max_set_size_;
  CheckLimits limits_;
  std::vector<ModelSet> pool_models_;
  std::vector<TestSet> sets_;
  std::unordered_map<std::uint64_t, std::size_t> by_mask_;
};

/// Atoms, negated atoms, then for every pair of distinct literals a | b,
/// a & b, a -> b and b -> a (literals ordered atoms first, then negations).
FormulaSet default_pool(const Language& lang);

/// Printable identity of a universe, as carried by reports.
struct UniverseDescriptor {
  std::vector<std::string> atoms;
  std::vector<std::string> pool;
  std::size_t max_set_size = 0;

  bool operator==(const UniverseDescriptor&) const = default;
};

UniverseDescriptor describe(const Universe& u);

}  // namespace nmlab
