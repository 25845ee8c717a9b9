// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <unordered_map>
#include <vector>

#include "nmlab/operations.hpp"

namespace nmlab {

/// Memoizing front end for one InferenceOp, owned by a single check.
///
/// Right-absorbing operations are cached by the models of their input;
/// anything else is cached by the syntactic identity of the input set.
/// The right-absorption checker must use Memo::by_syntax so a wrongly
/// flagged operation cannot hide behind the cache.
class Evaluator {
 public:
  enum class Memo { by_theory, by_syntax };

  explicit Evaluator(const InferenceOp& op);
  Evaluator(const InferenceOp& op, Memo memo);

  const InferenceOp& op() const noexcept { return op_; }
  const Language& language() const noexcept { return op_.language(); }

  /// Models of C(x); `x_models` must equal models(x).
  ModelSet operator()(const FormulaSet& x, const ModelSet& x_models);
  ModelSet operator()(const FormulaSet& x);

  /// Models of C(a ∪ b) given `models` = models(a ∪ b). The union is only
  /// materialized on a cache miss.
  ModelSet on_union(const FormulaSet& a, const FormulaSet& b, const ModelSet& models);

  /// Models of C({canonical_axiom(m)}).
  ModelSet on_theory(const ModelSet& m);

  /// The singleton {canonical_axiom(m)}, shared across calls.
  const FormulaSet& axiom_set(const ModelSet& m);

 private:
  const InferenceOp& op_;
  Memo memo_;
  std::unordered_map<std::uint32_t, ModelSet> by_theory_;
  // The stored FormulaSet keeps the keyed nodes alive, so addresses stay unique.
  std::map<std::vector<const void*>, std::pair<FormulaSet, ModelSet>> by_syntax_;
  std::unordered_map<std::uint32_t, FormulaSet> axioms_;
};

}  // namespace nmlab
