// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>

#include "nmlab/operations.hpp"

namespace nmlab {

InferenceOp::InferenceOp(std::string name, Language lang, ApplyFn apply, OpCapabilities caps)
    : name_(std::move(name)), lang_(std::move(lang)), apply_(std::move(apply)), caps_(caps) {
  if (!apply_) throw std::invalid_argument("inference operation without an apply function");
}

Theory InferenceOp::apply_theory(const ModelSet& m) const {
  return apply(FormulaSet{canonical_axiom(m, lang_)});
}

AssumptionFn::AssumptionFn(std::string name, Language lang, Fn fn, bool right_absorbing)
    : name_(std::move(name)), lang_(std::move(lang)), fn_(std::move(fn)), right_absorbing_(right_absorbing) {
  if (!fn_) throw std::invalid_argument("assumption operator without a function");
}

namespace {

// Models of the negative literals ¬p for the atoms selected by `atoms`.
ModelSet negated_atoms(std::uint32_t atoms, unsigned n) {
  std::uint32_t bits = 0;
  for (Valuation v = 0; v < (1u << n); ++v) {
    if ((v & atoms) == 0) bits |= 1u << v;
  }
  return ModelSet(bits, n);
}

// Atoms false in at least one model of `m`, i.e. not proved by it.
std::uint32_t unproved_atoms(const ModelSet& m, unsigned n) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < n; ++i) {
    bool proved = true;
    for (Valuation v : m.valuations()) {
      if (((v >> i) & 1u) == 0) {
        proved = false;
        break;
      }
    }
    if (!proved) out |= 1u << i;
  }
  return out;
}

}  // namespace

InferenceOp op_cn(const Language& lang) {
  return InferenceOp(
      "cn", lang, [lang](const FormulaSet& x) { return cn(x, lang); }, {.right_absorbing_by_construction = true});
}

AssumptionFn cwa_assumptions(const Language& lang) {
  return AssumptionFn(
      "cwa-negative-literals", lang,
      [lang](const FormulaSet& x) {
        const ModelSet m = models(x, lang);
        return Theory(negated_atoms(unproved_atoms(m, lang.size()), lang.size()));
      },
      true);
}

InferenceOp op_cwa(const Language& lang) {
  const AssumptionFn s = cwa_assumptions(lang);
  return InferenceOp(
      "cwa", lang, [lang, s](const FormulaSet& x) { return cn(x, lang).join(s(x)); },
      {.right_absorbing_by_construction = true});
}

InferenceOp op_gcwa(const Language& lang) {
  return InferenceOp(
      "gcwa", lang,
      [lang](const FormulaSet& x) {
        const ModelSet m = models(x, lang);
        if (m.empty()) return Theory(m);
        const auto vals = m.valuations();
        std::uint32_t true_in_some_minimal = 0;
        for (Valuation v : vals) {
          bool minimal = true;
          for (Valuation w : vals) {
            if (w != v && (w & v) == w) {
              minimal = false;
              break;
            }
          }
          if (minimal) true_in_some_minimal |= v;
        }
        const std::uint32_t false_everywhere = ~true_in_some_minimal & ((1u << lang.size()) - 1u);
        return Theory(m & negated_atoms(false_everywhere, lang.size()));
      },
      {.right_absorbing_by_construction = true});
}

std::vector<FormulaSet> poole_basis(const PooleSystem& sys, const FormulaSet& x, const Language& lang) {
  const std::size_t d = sys.defaults.size();
  if (d >= 24) throw std::length_error("too many defaults to enumerate");
  const ModelSet mx = models(x, lang);
  std::vector<ModelSet> default_models;
  for (const auto& f : sys.defaults) default_models.push_back(models(f, lang));

  const std::uint64_t count = std::uint64_t{1} << d;
  std::vector<bool> consistent(count, false);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ModelSet m = mx;
    for (std::size_t i = 0; i < d; ++i) {
      if ((mask >> i) & 1u) m = m & default_models[i];
    }
    consistent[mask] = !m.empty();
  }
  std::vector<FormulaSet> out;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!consistent[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < d && maximal; ++i) {
      const std::uint64_t bigger = mask | (std::uint64_t{1} << i);
      if (bigger != mask && consistent[bigger]) maximal = false;
    }
    if (maximal) out.push_back(sys.defaults.select(mask));
  }
  return out;
}

AssumptionFn poole_natural_assumptions(const PooleSystem& sys, const Language& lang) {
  return AssumptionFn(
      "poole-natural", lang,
      [sys, lang](const FormulaSet& x) {
        ModelSet u = ModelSet::none(lang.size());
        for (const auto& b : poole_basis(sys, x, lang)) u = u | models(b, lang);
        return Theory(u);
      },
      true);
}

InferenceOp op_poole(const PooleSystem& sys, const Language& lang) {
  const AssumptionFn s = poole_natural_assumptions(sys, lang);
  return InferenceOp(
      "poole" + to_string(sys.defaults, lang), lang,
      [lang, s](const FormulaSet& x) { return cn(x, lang).join(s(x)); },
      {.right_absorbing_by_construction = true});
}

namespace {

void validate_table(const TheoryTable& table, const Language& lang, bool enforce_supra) {
  for (const auto& [key, value] : table) {
    if (key.atom_count() != lang.size() || value.atom_count() != lang.size()) {
      throw std::invalid_argument("table entry over a different language");
    }
    if (enforce_supra && !value.subset_of(key)) {
      throw std::invalid_argument("table entry " + to_string(key) + " -> " + to_string(value) +
                                  " is not supraclassical");
    }
  }
}

}  // namespace

InferenceOp op_from_table(TheoryTable table, const Language& lang, TableOptions options) {
  validate_table(table, lang, options.enforce_supraclassical);
  return InferenceOp(
      options.name, lang,
      [table = std::move(table), lang](const FormulaSet& x) {
        const ModelSet m = models(x, lang);
        auto it = table.find(m);
        return Theory(it == table.end() ? m : it->second);
      },
      {.right_absorbing_by_construction = true});
}

InferenceOp op_from_assumptions(const AssumptionFn& s) {
  const Language lang = s.language();
  return InferenceOp(
      "cn+" + s.name(), lang, [lang, s](const FormulaSet& x) { return cn(x, lang).join(s(x)); },
      {.right_absorbing_by_construction = s.right_absorbing()});
}

AssumptionFn no_assumptions(const Language& lang) {
  return AssumptionFn(
      "empty", lang, [lang](const FormulaSet&) { return Theory::tautologies(lang); }, true);
}

AssumptionFn anchored_assumptions(const Formula& anchor, const Language& lang) {
  const ModelSet anchor_models = models(anchor, lang);
  return AssumptionFn(
      "anchored(" + to_string(anchor, lang) + ")", lang,
      [lang, anchor_models](const FormulaSet& x) {
        return models(x, lang).is_full() ? Theory(anchor_models) : Theory::tautologies(lang);
      },
      true);
}

AssumptionFn table_assumptions(TheoryTable table, const Language& lang, std::string name) {
  validate_table(table, lang, false);
  return AssumptionFn(
      std::move(name), lang,
      [table = std::move(table), lang](const FormulaSet& x) {
        auto it = table.find(models(x, lang));
        return it == table.end() ? Theory::tautologies(lang) : Theory(it->second);
      },
      true);
}

}  // namespace nmlab
