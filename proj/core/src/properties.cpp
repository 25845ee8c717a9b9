// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>
#include <unordered_map>

#include "nmlab/error.hpp"
#include "nmlab/evaluator.hpp"
#include "nmlab/properties.hpp"

namespace nmlab {

std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::supraclassicality: return "supraclassicality";
    case PropertyKind::left_absorption: return "left_absorption";
    case PropertyKind::right_absorption: return "right_absorption";
    case PropertyKind::deductivity: return "deductivity";
    case PropertyKind::cumulativity: return "cumulativity";
    case PropertyKind::antitonicity: return "antitonicity";
    case PropertyKind::compactness: return "compactness";
    case PropertyKind::supracompactness: return "supracompactness";
  }
  return "unknown";
}

std::optional<PropertyKind> parse_property_kind(std::string_view name) {
  std::string normalized(name);
  for (char& c : normalized) {
    if (c == '-') c = '_';
  }
  for (PropertyKind k : kAllProperties) {
    if (to_string(k) == normalized) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::counterexample: return "counterexample";
    case Outcome::no_counterexample_in_universe: return "no_counterexample_in_universe";
    case Outcome::precondition_failed: return "precondition_failed";
  }
  return "unknown";
}

Formula separating_formula(const Theory& in, const Theory& out, const Universe& u) {
  for (std::size_t i = 0; i < u.pool().size(); ++i) {
    const ModelSet& pm = u.pool_models(i);
    if (in.models().subset_of(pm) && !out.models().subset_of(pm)) return u.pool()[i];
  }
  if (in.subset_of(out)) throw std::invalid_argument("no formula separates a theory from a superset");
  return canonical_axiom(in.models(), u.language());
}

namespace {

Formula separate_unequal(const ModelSet& a, const ModelSet& b, const Universe& u) {
  // a and b are models of two different theories
  if (!b.subset_of(a)) return separating_formula(Theory(a), Theory(b), u);
  return separating_formula(Theory(b), Theory(a), u);
}

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++count_ > cap_) {
      throw UniverseTooLarge("check exceeds the instantiation cap of " + std::to_string(cap_) +
                             "; shrink the pool or max set size");
    }
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
};

// Ascending submasks of `mask`, starting with 0 and ending with `mask`.
template <class Fn>
bool for_each_submask(std::uint64_t mask, Fn&& fn) {
  std::uint64_t s = 0;
  while (true) {
    if (fn(s)) return true;
    if (s == mask) return false;
    s = (s - mask) & mask;
  }
}

struct Candidate {
  const FormulaSet* set;
  ModelSet models;
};

// Y-space for hypotheses of the form "Y ⊆ cn(T)": every universe set that
// T entails, followed by the canonical axioms of all theories containing T.
std::vector<Candidate> entailed_candidates(const Universe& u, Evaluator& ev, const ModelSet& target) {
  std::vector<Candidate> out;
  for (const auto& s : u.sets()) {
    if (target.subset_of(s.models)) out.push_back({&s.formulas, s.models});
  }
  for (const ModelSet& m : target.supersets()) out.push_back({&ev.axiom_set(m), m});
  return out;
}

// Drops candidates whose models repeat; valid only for theory-keyed evaluation.
std::vector<Candidate> distinct_by_models(const std::vector<Candidate>& in) {
  std::vector<Candidate> out;
  std::unordered_map<std::uint32_t, bool> seen;
  for (const auto& c : in) {
    if (seen.emplace(c.models.bits(), true).second) out.push_back(c);
  }
  return out;
}

struct Checker {
  const InferenceOp& op;
  const Universe& u;
  Evaluator ev;
  Budget budget;

  Checker(const InferenceOp& o, const Universe& uu) : op(o), u(uu), ev(o), budget(uu.limits().instantiation_cap) {}

  const TestSet& set_at(std::uint64_t mask) const { return u.sets()[*u.index_of(mask)]; }

  std::optional<Witness> supraclassicality() {
    for (const auto& t : u.sets()) {
      budget.tick();
      const ModelSet c = ev(t.formulas, t.models);
      if (!c.subset_of(t.models)) {
        return Witness{t.formulas, std::nullopt, separating_formula(Theory(t.models), Theory(c), u)};
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> left_absorption() {
    for (const auto& t : u.sets()) {
      budget.tick();
      const ModelSet c = ev(t.formulas, t.models);
      const Formula ax = canonical_axiom(c, u.language());
      if (models(ax, u.language()) != c) return Witness{t.formulas, std::nullopt, ax};
    }
    return std::nullopt;
  }

  std::optional<Witness> right_absorption() {
    Evaluator raw(op, Evaluator::Memo::by_syntax);
    std::unordered_map<std::uint32_t, std::size_t> first_with_models;
    for (std::size_t i = 0; i < u.sets().size(); ++i) {
      const TestSet& t = u.sets()[i];
      budget.tick();
      const ModelSet c = raw(t.formulas, t.models);
      const FormulaSet& ax = raw.axiom_set(t.models);
      const ModelSet ca = raw(ax, t.models);
      if (c != ca) return Witness{t.formulas, ax, separate_unequal(c, ca, u)};
      auto [it, fresh] = first_with_models.emplace(t.models.bits(), i);
      if (!fresh) {
        budget.tick();
        const TestSet& r = u.sets()[it->second];
        const ModelSet cr = raw(r.formulas, r.models);
        if (cr != c) return Witness{r.formulas, t.formulas, separate_unequal(cr, c, u)};
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> deductivity() {
    for (const auto& t : u.sets()) {
      const ModelSet cx = ev(t.formulas, t.models);
      std::optional<Witness> w;
      for_each_submask(t.mask, [&](std::uint64_t sub) {
        budget.tick();
        const TestSet& y = set_at(sub);
        const ModelSet rhs = t.models & ev(y.formulas, y.models);
        if (rhs.subset_of(cx)) return false;
        w = Witness{t.formulas, y.formulas, separating_formula(Theory(cx), Theory(rhs), u)};
        return true;
      });
      if (w) return w;
    }
    return std::nullopt;
  }

  // For right-absorbing operations an instance depends only on the models of
  // X and Y, so only the first representative of each is visited. The first
  // violation in enumeration order is unchanged.
  std::optional<Witness> cumulativity() {
    u.require_theory_quantification();
    const bool semantic = op.right_absorbing();
    std::unordered_map<std::uint32_t, bool> seen_x;
    for (const auto& t : u.sets()) {
      if (semantic && !seen_x.emplace(t.models.bits(), true).second) continue;
      const ModelSet cx = ev(t.formulas, t.models);
      auto ys = entailed_candidates(u, ev, cx);
      if (semantic) ys = distinct_by_models(ys);
      for (const auto& y : ys) {
        budget.tick();
        const ModelSet cxy = ev.on_union(t.formulas, *y.set, t.models & y.models);
        if (cxy != cx) return Witness{t.formulas, *y.set, separate_unequal(cx, cxy, u)};
      }
    }
    return std::nullopt;
  }

  std::optional<Witness> antitonicity() {
    for (const auto& x : u.sets()) {
      const ModelSet cx = ev(x.formulas, x.models);
      for (const auto& y : u.sets()) {
        if ((y.mask & x.mask) != x.mask) continue;
        budget.tick();
        const ModelSet cy = ev(y.formulas, y.models);
        if (!cx.subset_of(cy)) {
          return Witness{x.formulas, y.formulas, separating_formula(Theory(cy), Theory(cx), u)};
        }
      }
    }
    return std::nullopt;
  }

  // For each A ⊆ X, the models of ⋂_{A ⊆ Y ⊆ X} C(Y) (a union of model sets).
  std::vector<std::pair<std::uint64_t, ModelSet>> compact_cores(const TestSet& t) {
    std::vector<std::pair<std::uint64_t, ModelSet>> cores;
    for_each_submask(t.mask, [&](std::uint64_t a) {
      ModelSet core = ModelSet::none(u.language().size());
      for_each_submask(t.mask & ~a, [&](std::uint64_t extra) {
        const TestSet& y = set_at(a | extra);
        core = core | ev(y.formulas, y.models);
        return false;
      });
      cores.emplace_back(a, core);
      return false;
    });
    return cores;
  }

  // For each A ⊆ X, the models of ⋂ C(A ∪ Z) over Z from the entailed
  // candidates of C(X); A not contained in C(X) leaves the family empty.
  std::vector<std::pair<std::uint64_t, ModelSet>> supracompact_cores(const TestSet& t, const ModelSet& cx) {
    auto zs = entailed_candidates(u, ev, cx);
    if (op.right_absorbing()) zs = distinct_by_models(zs);
    std::vector<std::pair<std::uint64_t, ModelSet>> cores;
    for_each_submask(t.mask, [&](std::uint64_t a) {
      const TestSet& as = set_at(a);
      ModelSet core = ModelSet::none(u.language().size());
      if (cx.subset_of(as.models)) {
        for (const auto& z : zs) core = core | ev.on_union(as.formulas, *z.set, as.models & z.models);
      }
      cores.emplace_back(a, core);
      return false;
    });
    return cores;
  }

  std::optional<Witness> compact_schema(bool supra) {
    if (supra) u.require_theory_quantification();
    for (const auto& t : u.sets()) {
      const ModelSet cx = ev(t.formulas, t.models);
      const auto cores = supra ? supracompact_cores(t, cx) : compact_cores(t);
      for (std::size_t i = 0; i < u.pool().size(); ++i) {
        const ModelSet& pm = u.pool_models(i);
        if (!cx.subset_of(pm)) continue;
        budget.tick();
        bool found = false;
        for (const auto& [a, core] : cores) {
          if (core.subset_of(pm)) {
            found = true;
            break;
          }
        }
        if (!found) return Witness{t.formulas, std::nullopt, u.pool()[i]};
      }
    }
    return std::nullopt;
  }
};

std::vector<std::string> flags_for(PropertyKind prop) {
  switch (prop) {
    case PropertyKind::left_absorption:
      return {"structural_theory_representation"};
    case PropertyKind::compactness:
      return {"finite_language", "finite_language_trivial"};
    case PropertyKind::supracompactness:
      return {"finite_language", "bounded_y_space"};
    case PropertyKind::cumulativity:
      return {"bounded_y_space"};
    default:
      return {};
  }
}

}  // namespace

PropertyVerdict check_property(const InferenceOp& op, PropertyKind prop, const Universe& u) {
  if (!(op.language() == u.language())) throw std::invalid_argument("operation and universe languages differ");
  Checker c(op, u);
  std::optional<Witness> w;
  switch (prop) {
    case PropertyKind::supraclassicality: w = c.supraclassicality(); break;
    case PropertyKind::left_absorption: w = c.left_absorption(); break;
    case PropertyKind::right_absorption: w = c.right_absorption(); break;
    case PropertyKind::deductivity: w = c.deductivity(); break;
    case PropertyKind::cumulativity: w = c.cumulativity(); break;
    case PropertyKind::antitonicity: w = c.antitonicity(); break;
    case PropertyKind::compactness: w = c.compact_schema(false); break;
    case PropertyKind::supracompactness: w = c.compact_schema(true); break;
  }
  PropertyVerdict v;
  v.property = std::string(to_string(prop));
  v.operation = op.name();
  v.universe = describe(u);
  v.triviality_flags = flags_for(prop);
  v.instantiations = c.budget.count();
  if (w) {
    if (!replay_violation(op, prop, *w, u)) {
      throw std::logic_error("emitted " + v.property + " witness does not replay");
    }
    v.outcome = Outcome::counterexample;
    v.witness = std::move(w);
  }
  return v;
}

std::vector<PropertyVerdict> check_all(const InferenceOp& op, const Universe& u) {
  std::vector<PropertyVerdict> out;
  for (PropertyKind k : kAllProperties) out.push_back(check_property(op, k, u));
  return out;
}

bool replay_violation(const InferenceOp& op, PropertyKind prop, const Witness& w, const Universe& u) {
  const Language& lang = u.language();
  auto C = [&](const FormulaSet& s) { return op.apply(s).models(); };
  const ModelSet mx = models(w.x, lang);
  switch (prop) {
    case PropertyKind::supraclassicality:
      return !C(w.x).subset_of(mx);
    case PropertyKind::left_absorption: {
      const ModelSet c = C(w.x);
      return models(canonical_axiom(c, lang), lang) != c;
    }
    case PropertyKind::right_absorption:
      return w.y && models(*w.y, lang) == mx && C(w.x) != C(*w.y);
    case PropertyKind::deductivity:
      return w.y && w.y->subset_of(w.x) && !(mx & C(*w.y)).subset_of(C(w.x));
    case PropertyKind::cumulativity: {
      if (!w.y) return false;
      const ModelSet cx = C(w.x);
      return cx.subset_of(models(*w.y, lang)) && C(w.x.united(*w.y)) != cx;
    }
    case PropertyKind::antitonicity:
      return w.y && w.x.subset_of(*w.y) && !C(w.x).subset_of(C(*w.y));
    case PropertyKind::compactness:
    case PropertyKind::supracompactness: {
      if (!w.formula) return false;
      const ModelSet cx = C(w.x);
      const ModelSet fx = models(*w.formula, lang);
      if (!cx.subset_of(fx)) return false;
      // Every A ⊆ X must admit a Y in range with x ∉ C(Y).
      std::vector<std::pair<FormulaSet, ModelSet>> zs;
      if (prop == PropertyKind::supracompactness) {
        for (const auto& s : u.sets()) {
          if (cx.subset_of(s.models)) zs.emplace_back(s.formulas, s.models);
        }
        for (const ModelSet& m : cx.supersets()) zs.emplace_back(FormulaSet{canonical_axiom(m, lang)}, m);
      }
      bool every_a_refuted = true;
      w.x.for_each_subset([&](const FormulaSet& a) {
        if (!every_a_refuted) return;
        bool refuted = false;
        if (prop == PropertyKind::compactness) {
          w.x.for_each_subset([&](const FormulaSet& y) {
            if (!refuted && a.subset_of(y) && !C(y).subset_of(fx)) refuted = true;
          });
        } else if (cx.subset_of(models(a, lang))) {
          for (const auto& [z, zm] : zs) {
            if (!C(a.united(z)).subset_of(fx)) {
              refuted = true;
              break;
            }
          }
        }
        if (!refuted) every_a_refuted = false;
      });
      return every_a_refuted;
    }
  }
  return false;
}

std::optional<PropertyVerdict> first_failure(const InferenceOp& op, std::span<const PropertyKind> props,
                                             const Universe& u) {
  for (PropertyKind k : props) {
    PropertyVerdict v = check_property(op, k, u);
    if (!v.passed()) return v;
  }
  return std::nullopt;
}

PropertyVerdict precondition_failure(std::string check, const InferenceOp& op, const Universe& u,
                                     const PropertyVerdict& cause) {
  PropertyVerdict v;
  v.property = std::move(check);
  v.operation = op.name();
  v.universe = describe(u);
  v.outcome = Outcome::precondition_failed;
  v.witness = cause.witness;
  v.notes.push_back("precondition " + cause.property + " fails");
  return v;
}

}  // namespace nmlab
