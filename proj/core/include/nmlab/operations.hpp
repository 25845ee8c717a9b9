// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/kernel.hpp"

namespace nmlab {

/// Declared capabilities of an inference operation.
struct OpCapabilities {
  /// apply(X) depends only on cn(X). Checkers use this to quantify over
  /// theories through canonical axioms.
  bool right_absorbing_by_construction = false;
  /// Defined on every finite input.
  bool total = true;
};

/// A finitary inference operation: finite formula set -> theory. Values are
/// immutable and cheap to copy; apply() must be pure and deterministic.
class InferenceOp {
 public:
  using ApplyFn = std::function<Theory(const FormulaSet&)>;

  InferenceOp(std::string name, Language lang, ApplyFn apply, OpCapabilities caps = {});

  const std::string& name() const noexcept { return name_; }
  const Language& language() const noexcept { return lang_; }
  const OpCapabilities& capabilities() const noexcept { return caps_; }
  bool right_absorbing() const noexcept { return caps_.right_absorbing_by_construction; }

  Theory apply(const FormulaSet& x) const { return apply_(x); }
  /// apply({canonical_axiom(m)}): the operation on a theory given by models.
  Theory apply_theory(const ModelSet& m) const;

 private:
  std::string name_;
  Language lang_;
  ApplyFn apply_;
  OpCapabilities caps_;
};

/// An assumption operator S: facts -> assumptions (as a theory).
class AssumptionFn {
 public:
  using Fn = std::function<Theory(const FormulaSet&)>;

  AssumptionFn(std::string name, Language lang, Fn fn, bool right_absorbing = false);

  const std::string& name() const noexcept { return name_; }
  const Language& language() const noexcept { return lang_; }
  /// Declared: S(X) depends only on cn(X).
  bool right_absorbing() const noexcept { return right_absorbing_; }

  Theory operator()(const FormulaSet& x) const { return fn_(x); }

 private:
  std::string name_;
  Language lang_;
  Fn fn_;
  bool right_absorbing_;
};

/// A Poole default system without constraints.
struct PooleSystem {
  FormulaSet defaults;
};

/// Map from input theory (models of cn(X)) to output theory models.
using TheoryTable = std::map<ModelSet, ModelSet>;

InferenceOp op_cn(const Language& lang);

/// Closed world assumption: adds ¬p for every atom p that cn(X) does not prove.
InferenceOp op_cwa(const Language& lang);

/// Generalized CWA: adds ¬p for every atom false in all ⊆-minimal models of X
/// (minimality by the set of true atoms). Inconsistent X stays inconsistent.
InferenceOp op_gcwa(const Language& lang);

/// Maximal subsets of the defaults consistent with X, in binary-counting
/// order of subset masks. Empty iff X is inconsistent.
std::vector<FormulaSet> poole_basis(const PooleSystem& sys, const FormulaSet& x, const Language& lang);

/// cn(X ∪ ⋂_{B ∈ basis(X)} cn(B)); an empty basis gives the inconsistent theory.
InferenceOp op_poole(const PooleSystem& sys, const Language& lang);

struct TableOptions {
  std::string name = "table";
  /// Reject entries whose result is not contained in their key.
  bool enforce_supraclassical = false;
};

/// apply(X) = table[models(cn(X))], or cn(X) when the key is absent.
/// Throws std::invalid_argument for entries over another language or, with
/// enforce_supraclassical, for non-supraclassical entries.
InferenceOp op_from_table(TheoryTable table, const Language& lang, TableOptions options = {});

/// apply(X) = cn(X ∪ S(X)); right-absorbing when S is declared so.
InferenceOp op_from_assumptions(const AssumptionFn& s);

// Assumption operators used throughout the lab.

AssumptionFn no_assumptions(const Language& lang);
/// {¬p : cn(X) does not prove p}.
AssumptionFn cwa_assumptions(const Language& lang);
/// ⋂_{B ∈ basis(X)} cn(B); the natural presentation of a Poole system.
AssumptionFn poole_natural_assumptions(const PooleSystem& sys, const Language& lang);
/// cn(anchor) when cn(X) = cn(∅), otherwise cn(∅).
AssumptionFn anchored_assumptions(const Formula& anchor, const Language& lang);
/// table[models(cn(X))], or cn(∅) when absent.
AssumptionFn table_assumptions(TheoryTable table, const Language& lang, std::string name = "assumption-table");

}  // namespace nmlab
