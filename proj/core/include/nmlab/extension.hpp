// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

#include "nmlab/operations.hpp"
#include "nmlab/properties.hpp"
#include "nmlab/universe.hpp"

namespace nmlab {

enum class ExtensionKind {
  plain,            // C(X) = cn(X ∪ ⋂_{B ⊆ X} F(B))
  right_absorbing,  // C(X) = cn(X ∪ ⋂_{X ⊨ B} F(B)), B over canonical axioms
};

enum class CoCompactKind { strong, weak };

std::string_view to_string(ExtensionKind kind);
std::string_view to_string(CoCompactKind kind);
/// Accepts "plain", "right_absorbing", "right-absorbing" and "ra".
std::optional<ExtensionKind> parse_extension_kind(std::string_view name);
std::optional<CoCompactKind> parse_cocompact_kind(std::string_view name);

/// The canonical extension of a finitary operation. Over a finite language
/// every input is finite, so the extension is again an InferenceOp; the
/// right-absorbing kind quantifies over the finite family of canonical
/// axioms of theories entailed by X. Throws std::invalid_argument for the
/// right-absorbing kind on an operation not flagged right-absorbing, and
/// UniverseTooLarge above `theory_atom_limit` atoms.
InferenceOp extend(const InferenceOp& f, ExtensionKind kind,
                   unsigned theory_atom_limit = kTheoryQuantifierAtomLimit);

/// Membership in the extension through the existential characterization:
/// some A ⊆ X has x ∈ F(A ∪ B) for every B ⊆ X (plain) or every finite B
/// entailed by X (right-absorbing). Independent of extend().
bool extension_contains(const InferenceOp& f, ExtensionKind kind, const FormulaSet& x, const Formula& formula,
                        unsigned theory_atom_limit = kTheoryQuantifierAtomLimit);

/// C'(X) = C({canonical_axiom(cn(X))}); right-absorbing by construction.
InferenceOp compose_with_cn(const InferenceOp& op);

/// strong: x ∉ C(X) ⇒ some A ⊆ X has x ∉ C(A).
/// weak:   x ∉ C(X) ⇒ some finite A with X ⊨ A has x ∉ C(A); A ranges over
///         subsets of X and canonical axioms of theories entailed by X.
/// X from u, x from the pool.
PropertyVerdict check_cocompact(const InferenceOp& op, CoCompactKind kind, const Universe& u);

/// Bounded evidence for the unique-extension results: for F supraclassical,
/// left-absorbing and deductive (and right-absorbing when flagged), each
/// extension agrees with F on u, keeps F's property suite, is (strongly)
/// co-compact, matches the membership characterization, and F satisfies
/// F(A) = cn(A ∪ ⋂_{B ⊆ A} F(B)).
PropertyVerdict verify_unique_extension(const InferenceOp& f, const Universe& u);

/// For F supraclassical, left-absorbing, right-absorbing, deductive and
/// cumulative, the right-absorbing extension is cumulative on u.
PropertyVerdict verify_cumuni(const InferenceOp& f, const Universe& u);

/// extend(f, kind) agrees with f on every universe set and on every
/// Cn-closed input (the canonical axiom of each theory over the language).
PropertyVerdict check_extension_agreement(const InferenceOp& f, ExtensionKind kind, const Universe& u);

}  // namespace nmlab
