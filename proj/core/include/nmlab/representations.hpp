// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

#include "nmlab/operations.hpp"
#include "nmlab/properties.hpp"
#include "nmlab/universe.hpp"

namespace nmlab {

/// Which intersection of operation values serves as the assumption set S(X).
enum class ReprKind {
  largest,           // ⋂_{Y ⊆ X} C(Y), over syntactic subsets of X
  trace,             // ⋂_{X ⊨ Y} C(Y), over theories entailed by X
  cumulative_trace,  // ⋂_{Y ⊆ C(X)} C(Y), over theories entailed by C(X)
};

std::string_view to_string(ReprKind kind);
/// Accepts "largest", "trace", "cumulative_trace" and "cumulative-trace".
std::optional<ReprKind> parse_repr_kind(std::string_view name);

/// The assumption theory S(X) of the given kind. Theory-level kinds
/// quantify over every model set containing models(cn(X)) (resp. C(X)) via
/// canonical axioms, which is exact only for right-absorbing operations.
///
/// Throws std::invalid_argument for trace kinds on an operation not flagged
/// right-absorbing, and UniverseTooLarge past the theory atom limit.
Theory represent(const InferenceOp& op, const FormulaSet& x, ReprKind kind, const Universe& u);

/// Checks C(X) = cn(X ∪ represent(op, X, kind)) for every X in u.
PropertyVerdict verify_representation(const InferenceOp& op, ReprKind kind, const Universe& u);

/// X ⊆ Y ⇒ S(Y) ⊆ S(X) over all pairs of u.
PropertyVerdict check_assumption_antitonicity(const AssumptionFn& s, const Universe& u);

/// Checks S(X) ⊆ represent(op, X, kind) on u, after validating that S
/// represents op and is antitonic (and, for trace, right-absorbing). Failed
/// validation yields Outcome::precondition_failed. Only largest and trace
/// have a maximality result; cumulative_trace throws std::invalid_argument.
PropertyVerdict check_maximality(const AssumptionFn& s, const InferenceOp& op, ReprKind kind,
                                 const Universe& u);

/// For supraclassical, left-absorbing, deductive, cumulative operations:
/// ⋂ of C over theories entailed by X equals ⋂ of C over theories entailed
/// by C(X), for every X in u. Requires a right-absorbing op.
PropertyVerdict verify_cuminters(const InferenceOp& op, const Universe& u);

/// For supraclassical, left-absorbing, deductive, cumulative operations the
/// compactness and supracompactness verdicts must agree.
PropertyVerdict check_supracompact_equiv(const InferenceOp& op, const Universe& u);

}  // namespace nmlab
