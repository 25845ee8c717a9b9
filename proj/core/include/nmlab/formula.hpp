// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmlab/language.hpp"

namespace nmlab {

enum class Connective { Atom, Top, Bottom, Not, And, Or, Implies };

/// Immutable propositional formula. Copies share structure; equality is
/// syntactic (structural), never semantic.
class Formula {
 public:
  static Formula atom(unsigned index);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Connective connective() const noexcept { return node_->op; }
  unsigned atom_index() const noexcept { return node_->atom; }
  const Formula& operand() const { return *node_->lhs; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  /// Highest atom index referenced plus one (0 for constant formulas).
  unsigned atom_bound() const noexcept { return node_->atom_bound; }

  /// Address of the shared node. Equal identities imply syntactic equality;
  /// the converse does not hold.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective op;
    unsigned atom = 0;
    unsigned atom_bound = 0;
    std::unique_ptr<Formula> lhs;
    std::unique_ptr<Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective op, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&(const Formula& a, const Formula& b);
Formula operator|(const Formula& a, const Formula& b);
/// Implication; `a >> b` reads "a -> b".
Formula operator>>(const Formula& a, const Formula& b);

/// Parses the ASCII grammar: atoms [a-z][a-z0-9_]*, constants `top` and
/// `bot`, `!` binding tightest, then `&`, `|`, and right-associative `->`.
/// Throws ParseError (with byte offset) on malformed text or unknown atoms.
Formula parse_formula(std::string_view text, const Language& lang);

/// Prints with the minimal parentheses that re-parse to the same tree.
std::string to_string(const Formula& f, const Language& lang);

/// Valuations (as a bitmask) satisfying `f`.
ModelSet models(const Formula& f, const Language& lang);

/// Finite duplicate-free list of formulas. Order is insertion order and only
/// matters for enumeration; equality compares membership.
class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> items);
  explicit FormulaSet(std::vector<Formula> items);

  /// Appends unless syntactically present; returns whether it was added.
  bool insert(const Formula& f);
  bool contains(const Formula& f) const;

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  std::span<const Formula> items() const noexcept { return items_; }

  /// This set followed by the members of `other` not already present.
  FormulaSet united(const FormulaSet& other) const;
  bool subset_of(const FormulaSet& other) const;

  /// Subset selected by the bits of `mask` (bit i keeps element i).
  FormulaSet select(std::uint64_t mask) const;

  /// Visits all 2^size() subsets in binary-counting order of `select` masks.
  void for_each_subset(const std::function<void(const FormulaSet&)>& visit) const;

  friend bool operator==(const FormulaSet& a, const FormulaSet& b);

 private:
  std::vector<Formula> items_;
};

/// Parses a comma separated list of formulas ("p, p -> q"); empty text or
/// "{}" yields the empty set.
FormulaSet parse_formula_set(std::string_view text, const Language& lang);

/// "{p, p | q}" with members in set order.
std::string to_string(const FormulaSet& set, const Language& lang);

/// Printed members, in set order.
std::vector<std::string> to_strings(const FormulaSet& set, const Language& lang);

}  // namespace nmlab
