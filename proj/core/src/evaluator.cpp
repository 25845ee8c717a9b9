// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "nmlab/evaluator.hpp"

namespace nmlab {

Evaluator::Evaluator(const InferenceOp& op)
    : Evaluator(op, op.right_absorbing() ? Memo::by_theory : Memo::by_syntax) {}

Evaluator::Evaluator(const InferenceOp& op, Memo memo) : op_(op), memo_(memo) {}

ModelSet Evaluator::operator()(const FormulaSet& x) { return (*this)(x, models(x, op_.language())); }

ModelSet Evaluator::operator()(const FormulaSet& x, const ModelSet& x_models) {
  if (memo_ == Memo::by_theory) {
    auto it = by_theory_.find(x_models.bits());
    if (it != by_theory_.end()) return it->second;
    const ModelSet out = op_.apply(x).models();
    by_theory_.emplace(x_models.bits(), out);
    return out;
  }
  std::vector<const void*> key;
  key.reserve(x.size());
  for (const auto& f : x) key.push_back(f.identity());
  std::sort(key.begin(), key.end());
  auto it = by_syntax_.find(key);
  if (it != by_syntax_.end()) return it->second.second;
  const ModelSet out = op_.apply(x).models();
  by_syntax_.emplace(std::move(key), std::make_pair(x, out));
  return out;
}

ModelSet Evaluator::on_union(const FormulaSet& a, const FormulaSet& b, const ModelSet& m) {
  if (memo_ == Memo::by_theory) {
    auto it = by_theory_.find(m.bits());
    if (it != by_theory_.end()) return it->second;
  }
  return (*this)(a.united(b), m);
}

const FormulaSet& Evaluator::axiom_set(const ModelSet& m) {
  auto it = axioms_.find(m.bits());
  if (it == axioms_.end()) {
    it = axioms_.emplace(m.bits(), FormulaSet{canonical_axiom(m, op_.language())}).first;
  }
  return it->second;
}

ModelSet Evaluator::on_theory(const ModelSet& m) { return (*this)(axiom_set(m), m); }

}  // namespace nmlab
