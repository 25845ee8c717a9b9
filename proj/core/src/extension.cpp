// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <stdexcept>
#include <vector>

#include "nmlab/error.hpp"
#include "nmlab/evaluator.hpp"
#include "nmlab/extension.hpp"
#include "nmlab/representations.hpp"

namespace nmlab {

std::string_view to_string(ExtensionKind kind) {
  return kind == ExtensionKind::plain ? "plain" : "right_absorbing";
}

std::string_view to_string(CoCompactKind kind) { return kind == CoCompactKind::strong ? "strong" : "weak"; }

std::optional<ExtensionKind> parse_extension_kind(std::string_view name) {
  if (name == "plain") return ExtensionKind::plain;
  if (name == "right_absorbing" || name == "right-absorbing" || name == "ra") return ExtensionKind::right_absorbing;
  return std::nullopt;
}

std::optional<CoCompactKind> parse_cocompact_kind(std::string_view name) {
  if (name == "strong") return CoCompactKind::strong;
  if (name == "weak") return CoCompactKind::weak;
  return std::nullopt;
}

namespace {

void require_theory_atoms(const Language& lang, unsigned limit) {
  if (lang.size() > limit) {
    throw UniverseTooLarge("theory-level quantification over " + std::to_string(lang.size()) +
                           " atoms exceeds the limit of " + std::to_string(limit));
  }
}

void require_ra(const InferenceOp& f) {
  if (!f.right_absorbing()) {
    throw std::invalid_argument("right-absorbing extension of '" + f.name() +
                                "', which is not flagged right-absorbing");
  }
}

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

InferenceOp extend(const InferenceOp& f, ExtensionKind kind, unsigned theory_atom_limit) {
  const Language lang = f.language();
  if (kind == ExtensionKind::plain) {
    return InferenceOp("extend-plain(" + f.name() + ")", lang, [f, lang](const FormulaSet& x) {
      ModelSet core = ModelSet::none(lang.size());
      x.for_each_subset([&](const FormulaSet& b) { core = core | f.apply(b).models(); });
      return Theory(models(x, lang) & core);
    });
  }
  require_ra(f);
  require_theory_atoms(lang, theory_atom_limit);
  return InferenceOp(
      "extend-ra(" + f.name() + ")", lang,
      [f, lang](const FormulaSet& x) {
        const ModelSet mx = models(x, lang);
        ModelSet core = ModelSet::none(lang.size());
        for (const ModelSet& m : mx.supersets()) core = core | f.apply_theory(m).models();
        return Theory(mx & core);
      },
      {.right_absorbing_by_construction = true});
}

bool extension_contains(const InferenceOp& f, ExtensionKind kind, const FormulaSet& x, const Formula& formula,
                        unsigned theory_atom_limit) {
  const Language& lang = f.language();
  const ModelSet fx = models(formula, lang);
  std::vector<FormulaSet> bs;
  if (kind == ExtensionKind::plain) {
    x.for_each_subset([&](const FormulaSet& b) { bs.push_back(b); });
  } else {
    require_ra(f);
    require_theory_atoms(lang, theory_atom_limit);
    for (const ModelSet& m : models(x, lang).supersets()) bs.push_back(FormulaSet{canonical_axiom(m, lang)});
  }
  Evaluator ev(f);
  bool found = false;
  x.for_each_subset([&](const FormulaSet& a) {
    if (found) return;
    bool all = true;
    for (const auto& b : bs) {
      if (!ev(a.united(b)).subset_of(fx)) {
        all = false;
        break;
      }
    }
    found = all;
  });
  return found;
}

InferenceOp compose_with_cn(const InferenceOp& op) {
  const Language lang = op.language();
  return InferenceOp(
      op.name() + "∘cn", lang, [op, lang](const FormulaSet& x) { return op.apply_theory(models(x, lang)); },
      {.right_absorbing_by_construction = true});
}

PropertyVerdict check_cocompact(const InferenceOp& op, CoCompactKind kind, const Universe& u) {
  if (kind == CoCompactKind::weak) u.require_theory_quantification();
  PropertyVerdict v = fresh_verdict("cocompactness:" + std::string(to_string(kind)), op.name(), u);
  v.triviality_flags = {"finite_language", "finite_set_self_witness"};
  Evaluator ev(op);
  for (const auto& t : u.sets()) {
    const ModelSet cx = ev(t.formulas, t.models);
    // Models of every admissible C(A); x is refuted by A iff C(A) ⊄ models(x).
    std::vector<ModelSet> values;
    std::uint64_t s = 0;
    while (true) {
      const TestSet& a = u.sets()[*u.index_of(s)];
      values.push_back(ev(a.formulas, a.models));
      if (s == t.mask) break;
      s = (s - t.mask) & t.mask;
    }
    if (kind == CoCompactKind::weak) {
      for (const ModelSet& m : t.models.supersets()) values.push_back(ev.on_theory(m));
    }
    for (std::size_t i = 0; i < u.pool().size(); ++i) {
      const ModelSet& pm = u.pool_models(i);
      if (cx.subset_of(pm)) continue;
      ++v.instantiations;
      bool refuted = false;
      for (const ModelSet& c : values) {
        if (!c.subset_of(pm)) {
          refuted = true;
          break;
        }
      }
      if (!refuted) {
        v.outcome = Outcome::counterexample;
        v.witness = Witness{t.formulas, std::nullopt, u.pool()[i]};
        return v;
      }
    }
  }
  return v;
}

namespace {

// Pointwise agreement of two operations over the universe sets.
std::optional<Witness> first_disagreement(const InferenceOp& a, const InferenceOp& b, const Universe& u) {
  Evaluator ea(a);
  Evaluator eb(b);
  for (const auto& t : u.sets()) {
    const ModelSet ca = ea(t.formulas, t.models);
    const ModelSet cb = eb(t.formulas, t.models);
    if (ca != cb) return Witness{t.formulas, std::nullopt, separate_unequal(ca, cb, u)};
  }
  return std::nullopt;
}

// x ∈ extend(F)(X) iff extension_contains(...), for X in u and x in the pool.
std::optional<Witness> membership_mismatch(const InferenceOp& f, const InferenceOp& ext, ExtensionKind kind,
                                           const Universe& u) {
  Evaluator ev(ext);
  for (const auto& t : u.sets()) {
    const ModelSet c = ev(t.formulas, t.models);
    for (std::size_t i = 0; i < u.pool().size(); ++i) {
      const bool by_theory = c.subset_of(u.pool_models(i));
      const bool by_membership =
          extension_contains(f, kind, t.formulas, u.pool()[i], u.limits().theory_atom_limit);
      if (by_theory != by_membership) return Witness{t.formulas, std::nullopt, u.pool()[i]};
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyVerdict verify_unique_extension(const InferenceOp& f, const Universe& u) {
  const std::string name = "unique_extension";
  std::vector<PropertyKind> pre = {PropertyKind::supraclassicality, PropertyKind::left_absorption,
                                   PropertyKind::deductivity};
  if (f.right_absorbing()) pre.push_back(PropertyKind::right_absorption);
  if (auto bad = first_failure(f, pre, u)) return precondition_failure(name, f, u, *bad);

  PropertyVerdict v = fresh_verdict(name, f.name(), u);
  v.triviality_flags = {"bounded_evidence"};
  auto fail = [&](std::string what, Witness w) {
    v.outcome = Outcome::counterexample;
    v.notes.push_back(std::move(what));
    v.witness = std::move(w);
    return v;
  };

  std::vector<ExtensionKind> kinds = {ExtensionKind::plain};
  if (f.right_absorbing()) kinds.push_back(ExtensionKind::right_absorbing);
  for (ExtensionKind kind : kinds) {
    const std::string tag = std::string(to_string(kind));
    const InferenceOp ext = extend(f, kind, u.limits().theory_atom_limit);
    if (auto w = first_disagreement(f, ext, u)) return fail(tag + " extension disagrees with F", *w);
    v.notes.push_back(tag + ": agrees with F");

    std::vector<PropertyKind> keep = pre;
    if (auto bad = first_failure(ext, keep, u)) return fail(tag + " extension loses " + bad->property, *bad->witness);
    v.notes.push_back(tag + ": keeps the property suite");

    const CoCompactKind ck = kind == ExtensionKind::plain ? CoCompactKind::strong : CoCompactKind::weak;
    const PropertyVerdict cc = check_cocompact(ext, ck, u);
    if (!cc.passed()) return fail(tag + " extension is not " + std::string(to_string(ck)) + "ly co-compact", *cc.witness);
    v.notes.push_back(tag + ": " + std::string(to_string(ck)) + " co-compactness holds");

    if (auto w = membership_mismatch(f, ext, kind, u)) return fail(tag + " membership characterization disagrees", *w);
    v.notes.push_back(tag + ": membership characterization agrees");
  }

  const PropertyVerdict rep = verify_representation(f, ReprKind::largest, u);
  if (!rep.passed()) return fail("F(A) = cn(A, ⋂ F(B)) fails", *rep.witness);
  v.notes.push_back("F(A) = cn(A ∪ ⋂_{B ⊆ A} F(B)) holds");
  v.instantiations = u.sets().size();
  return v;
}

PropertyVerdict verify_cumuni(const InferenceOp& f, const Universe& u) {
  const std::string name = "extension_cumulativity";
  static constexpr std::array<PropertyKind, 5> pre = {
      PropertyKind::supraclassicality, PropertyKind::left_absorption, PropertyKind::right_absorption,
      PropertyKind::deductivity, PropertyKind::cumulativity};
  if (auto bad = first_failure(f, pre, u)) return precondition_failure(name, f, u, *bad);
  const InferenceOp ext = extend(f, ExtensionKind::right_absorbing, u.limits().theory_atom_limit);
  PropertyVerdict cum = check_property(ext, PropertyKind::cumulativity, u);
  cum.property = name;
  cum.operation = f.name();
  cum.triviality_flags.push_back("bounded_evidence");
  return cum;
}

PropertyVerdict check_extension_agreement(const InferenceOp& f, ExtensionKind kind, const Universe& u) {
  u.require_theory_quantification();
  const InferenceOp ext = extend(f, kind, u.limits().theory_atom_limit);
  PropertyVerdict v = fresh_verdict("extension_agreement:" + std::string(to_string(kind)), f.name(), u);
  if (auto w = first_disagreement(f, ext, u)) {
    v.outcome = Outcome::counterexample;
    v.witness = std::move(w);
    return v;
  }
  Evaluator ef(f);
  Evaluator ee(ext);
  for (const ModelSet& m : all_model_sets(u.language(), u.limits().theory_atom_limit)) {
    ++v.instantiations;
    const FormulaSet& input = ef.axiom_set(m);
    const ModelSet a = ef(input, m);
    const ModelSet b = ee(input, m);
    if (a != b) {
      v.outcome = Outcome::counterexample;
      v.witness = Witness{input, std::nullopt, separate_unequal(a, b, u)};
      return v;
    }
  }
  v.instantiations += u.sets().size();
  return v;
}

}  // namespace nmlab
