// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "nmlab/evaluator.hpp"
#include "nmlab/representations.hpp"

namespace nmlab {

std::string_view to_string(ReprKind kind) {
  switch (kind) {
    case ReprKind::largest: return "largest";
    case ReprKind::trace: return "trace";
    case ReprKind::cumulative_trace: return "cumulative_trace";
  }
  return "unknown";
}

std::optional<ReprKind> parse_repr_kind(std::string_view name) {
  if (name == "largest") return ReprKind::largest;
  if (name == "trace") return ReprKind::trace;
  if (name == "cumulative_trace" || name == "cumulative-trace") return ReprKind::cumulative_trace;
  return std::nullopt;
}

namespace {

void require_right_absorbing(const InferenceOp& op, ReprKind kind) {
  if (kind != ReprKind::largest && !op.right_absorbing()) {
    throw std::invalid_argument(std::string(to_string(kind)) + " representation needs a right-absorbing operation, '" +
                                op.name() + "' is not flagged as one");
  }
}

// Models of ⋂ C(M) over every model set M ⊇ base (union of their models).
ModelSet theory_trace(Evaluator& ev, const ModelSet& base) {
  ModelSet out = ModelSet::none(base.atom_count());
  for (const ModelSet& m : base.supersets()) out = out | ev.on_theory(m);
  return out;
}

ModelSet represent_models(Evaluator& ev, const FormulaSet& x, const ModelSet& x_models, ReprKind kind) {
  const Language& lang = ev.language();
  switch (kind) {
    case ReprKind::largest: {
      ModelSet out = ModelSet::none(lang.size());
      x.for_each_subset([&](const FormulaSet& y) { out = out | ev(y); });
      return out;
    }
    case ReprKind::trace:
      return theory_trace(ev, x_models);
    case ReprKind::cumulative_trace:
      return theory_trace(ev, ev(x, x_models));
  }
  return ModelSet::none(lang.size());
}

std::string repr_check_name(ReprKind kind) { return "representation:" + std::string(to_string(kind)); }

PropertyVerdict fresh_verdict(std::string name, std::string op, const Universe& u) {
  PropertyVerdict v;
  v.property = std::move(name);
  v.operation = std::move(op);
  v.universe = describe(u);
  return v;
}

Formula separate_unequal(const ModelSet& a, const ModelSet& b, const Universe& u) {
  if (!b.subset_of(a)) return separating_formula(Theory(a), Theory(b), u);
  return separating_formula(Theory(b), Theory(a), u);
}

}  // namespace

Theory represent(const InferenceOp& op, const FormulaSet& x, ReprKind kind, const Universe& u) {
  require_right_absorbing(op, kind);
  if (kind != ReprKind::largest) u.require_theory_quantification();
  Evaluator ev(op);
  return Theory(represent_models(ev, x, models(x, u.language()), kind));
}

PropertyVerdict verify_representation(const InferenceOp& op, ReprKind kind, const Universe& u) {
  require_right_absorbing(op, kind);
  if (kind != ReprKind::largest) u.require_theory_quantification();
  PropertyVerdict v = fresh_verdict(repr_check_name(kind), op.name(), u);
  if (kind != ReprKind::largest) v.triviality_flags.push_back("canonical_axiom_quantification");
  Evaluator ev(op);
  for (const auto& t : u.sets()) {
    ++v.instantiations;
    const ModelSet c = ev(t.formulas, t.models);
    const ModelSet rhs = t.models & represent_models(ev, t.formulas, t.models, kind);
    if (c != rhs) {
      v.outcome = Outcome::counterexample;
      v.witness = Witness{t.formulas, std::nullopt, separate_unequal(c, rhs, u)};
      return v;
    }
  }
  return v;
}

PropertyVerdict check_assumption_antitonicity(const AssumptionFn& s, const Universe& u) {
  PropertyVerdict v = fresh_verdict("assumption_antitonicity", s.name(), u);
  std::vector<ModelSet> values;
  values.reserve(u.sets().size());
  for (const auto& t : u.sets()) values.push_back(s(t.formulas).models());
  for (std::size_t i = 0; i < u.sets().size(); ++i) {
    const TestSet& x = u.sets()[i];
    for (std::size_t j = 0; j < u.sets().size(); ++j) {
      const TestSet& y = u.sets()[j];
      if ((y.mask & x.mask) != x.mask) continue;
      ++v.instantiations;
      if (!values[i].subset_of(values[j])) {
        v.outcome = Outcome::counterexample;
        v.witness = Witness{x.formulas, y.formulas, separating_formula(Theory(values[j]), Theory(values[i]), u)};
        return v;
      }
    }
  }
  return v;
}

PropertyVerdict check_maximality(const AssumptionFn& s, const InferenceOp& op, ReprKind kind,
                                 const Universe& u) {
  if (kind == ReprKind::cumulative_trace) {
    throw std::invalid_argument("maximality is only defined for the largest and trace representations");
  }
  require_right_absorbing(op, kind);
  if (kind != ReprKind::largest) u.require_theory_quantification();
  PropertyVerdict v = fresh_verdict("maximality:" + std::string(to_string(kind)), op.name(), u);
  auto fail_pre = [&](std::string note, Witness w) {
    v.outcome = Outcome::precondition_failed;
    v.notes.push_back(std::move(note));
    v.witness = std::move(w);
    return v;
  };

  Evaluator ev(op);
  std::vector<ModelSet> s_values;
  for (const auto& t : u.sets()) {
    const ModelSet sx = s(t.formulas).models();
    const ModelSet c = ev(t.formulas, t.models);
    if ((t.models & sx) != c) {
      return fail_pre("assumption operator " + s.name() + " does not represent the operation",
                      Witness{t.formulas, std::nullopt, separate_unequal(c, t.models & sx, u)});
    }
    s_values.push_back(sx);
  }
  PropertyVerdict anti = check_assumption_antitonicity(s, u);
  if (!anti.passed()) return fail_pre("assumption operator " + s.name() + " is not antitonic", *anti.witness);

  if (kind == ReprKind::trace) {
    std::unordered_map<std::uint32_t, std::size_t> first;
    for (std::size_t i = 0; i < u.sets().size(); ++i) {
      const TestSet& t = u.sets()[i];
      const FormulaSet ax{canonical_axiom(t.models, u.language())};
      const ModelSet sa = s(ax).models();
      if (sa != s_values[i]) {
        return fail_pre("assumption operator " + s.name() + " is not right-absorbing",
                        Witness{t.formulas, ax, separate_unequal(s_values[i], sa, u)});
      }
      auto [it, fresh] = first.emplace(t.models.bits(), i);
      if (!fresh && s_values[it->second] != s_values[i]) {
        return fail_pre("assumption operator " + s.name() + " is not right-absorbing",
                        Witness{u.sets()[it->second].formulas, t.formulas,
                                separate_unequal(s_values[it->second], s_values[i], u)});
      }
    }
  }

  for (std::size_t i = 0; i < u.sets().size(); ++i) {
    const TestSet& t = u.sets()[i];
    ++v.instantiations;
    const ModelSet rep = represent_models(ev, t.formulas, t.models, kind);
    // S(X) ⊆ represent(X) as theories
    if (!rep.subset_of(s_values[i])) {
      v.outcome = Outcome::counterexample;
      v.witness = Witness{t.formulas, std::nullopt, separating_formula(Theory(s_values[i]), Theory(rep), u)};
      return v;
    }
  }
  return v;
}

namespace {

constexpr std::array<PropertyKind, 4> kCumulativeCore = {
    PropertyKind::supraclassicality, PropertyKind::left_absorption, PropertyKind::deductivity,
    PropertyKind::cumulativity};

}  // namespace

PropertyVerdict verify_cuminters(const InferenceOp& op, const Universe& u) {
  require_right_absorbing(op, ReprKind::trace);
  u.require_theory_quantification();
  const std::string name = "theory_intersection_equality";
  if (auto bad = first_failure(op, kCumulativeCore, u)) return precondition_failure(name, op, u, *bad);
  PropertyVerdict v = fresh_verdict(name, op.name(), u);
  v.triviality_flags.push_back("canonical_axiom_quantification");
  Evaluator ev(op);
  for (const auto& t : u.sets()) {
    ++v.instantiations;
    const ModelSet by_cn = theory_trace(ev, t.models);
    const ModelSet by_c = theory_trace(ev, ev(t.formulas, t.models));
    if (by_cn != by_c) {
      v.outcome = Outcome::counterexample;
      v.witness = Witness{t.formulas, std::nullopt, separate_unequal(by_cn, by_c, u)};
      return v;
    }
  }
  return v;
}

PropertyVerdict check_supracompact_equiv(const InferenceOp& op, const Universe& u) {
  const std::string name = "supracompact_iff_compact";
  if (auto bad = first_failure(op, kCumulativeCore, u)) return precondition_failure(name, op, u, *bad);
  PropertyVerdict v = fresh_verdict(name, op.name(), u);
  const PropertyVerdict compact = check_property(op, PropertyKind::compactness, u);
  const PropertyVerdict supra = check_property(op, PropertyKind::supracompactness, u);
  v.instantiations = compact.instantiations + supra.instantiations;
  v.triviality_flags = {"finite_language", "finite_language_trivial", "bounded_y_space"};
  v.notes.push_back("compactness: " + std::string(to_string(compact.outcome)));
  v.notes.push_back("supracompactness: " + std::string(to_string(supra.outcome)));
  if (compact.outcome != supra.outcome) {
    v.outcome = Outcome::counterexample;
    v.witness = compact.witness ? compact.witness : supra.witness;
  }
  return v;
}

}  // namespace nmlab
