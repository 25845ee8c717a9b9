// SPDX-License-Identifier: Apache-2.0
#include <optional>
#include <stdexcept>

#include "nmlab/error.hpp"
#include "nmlab/kernel.hpp"

namespace nmlab {

bool Theory::contains(const Formula& x, const Language& lang) const {
  return models_.subset_of(nmlab::models(x, lang));
}

ModelSet models(const FormulaSet& set, const Language& lang) {
  ModelSet out = ModelSet::full(lang.size());
  for (const auto& f : set) out = out & models(f, lang);
  return out;
}

Theory cn(const FormulaSet& set, const Language& lang) { return Theory(models(set, lang)); }

bool entails(const Theory& t, const Formula& x, const Language& lang) { return t.contains(x, lang); }

Formula conjoin(const FormulaSet& set) {
  if (set.empty()) return Formula::top();
  Formula out = set[0];
  for (std::size_t i = 1; i < set.size(); ++i) out = out & set[i];
  return out;
}

FormulaSet arrow_set(const FormulaSet& a, const FormulaSet& y) {
  const Formula chi = conjoin(a);
  FormulaSet out;
  for (const auto& f : y) out.insert(chi >> f);
  return out;
}

namespace {

// Disjunction of one member per family element, for every choice function.
// An empty member makes cn(Y_i) = cn(∅), which contributes no axioms.
void choice_disjunctions(std::span<const FormulaSet> family, std::size_t i, const Formula* acc,
                         FormulaSet& out) {
  if (i == family.size()) {
    if (acc != nullptr) out.insert(*acc);
    return;
  }
  for (const auto& member : family[i]) {
    Formula next = acc == nullptr ? member : (*acc | member);
    choice_disjunctions(family, i + 1, &next, out);
  }
}

}  // namespace

bool verify_admissibility(const FormulaSet& x, const FormulaSet& y, const FormulaSet& z,
                          const Language& lang) {
  const ModelSet lhs = models(x.united(y), lang) | models(x.united(z), lang);
  FormulaSet axioms = x;
  if (!y.empty() && !z.empty()) {
    for (const auto& a : y) {
      for (const auto& b : z) axioms.insert(a | b);
    }
  }
  return lhs == models(axioms, lang);
}

bool verify_strong_admissibility(const FormulaSet& a, std::span<const FormulaSet> family,
                                 const Language& lang) {
  if (family.empty()) throw std::invalid_argument("strong admissibility needs a nonempty family");
  ModelSet rhs = ModelSet::none(lang.size());
  bool any_empty = false;
  for (const auto& y : family) {
    rhs = rhs | models(a.united(y), lang);
    any_empty = any_empty || y.empty();
  }
  FormulaSet axioms = a;
  if (!any_empty) choice_disjunctions(family, 0, nullptr, axioms);
  return models(axioms, lang) == rhs;
}

Formula canonical_axiom(const ModelSet& m, const Language& lang) {
  if (m.atom_count() != lang.size()) throw std::invalid_argument("model set over a different language");
  if (m.empty()) return Formula::bottom();
  if (m.is_full()) return Formula::top();
  std::optional<Formula> out;
  for (Valuation v : m.valuations()) {
    std::optional<Formula> minterm;
    for (unsigned i = 0; i < lang.size(); ++i) {
      Formula lit = ((v >> i) & 1u) ? Formula::atom(i) : !Formula::atom(i);
      minterm = minterm ? (*minterm & lit) : lit;
    }
    out = out ? (*out | *minterm) : *minterm;
  }
  return *out;
}

std::vector<ModelSet> all_model_sets(const Language& lang, unsigned max_atoms) {
  if (lang.size() > max_atoms) {
    throw UniverseTooLarge("theory enumeration over " + std::to_string(lang.size()) +
                           " atoms exceeds the limit of " + std::to_string(max_atoms));
  }
  return ModelSet::none(lang.size()).supersets();
}

}  // namespace nmlab
