// SPDX-License-Identifier: Apache-2.0
// Brute-force reference semantics for the tests. Deliberately naive: one
// valuation at a time, std::set everywhere, no sharing with the library's
// bit-parallel evaluation.
#pragma once

#include <set>
#include <vector>

#include "nmlab/formula.hpp"

namespace oracle {

using Vals = std::set<unsigned>;

inline bool truth(const nmlab::Formula& f, unsigned v) {
  using nmlab::Connective;
  switch (f.connective()) {
    case Connective::Atom: return (v >> f.atom_index()) & 1u;
    case Connective::Top: return true;
    case Connective::Bottom: return false;
    case Connective::Not: return !truth(f.operand(), v);
    case Connective::And: return truth(f.lhs(), v) && truth(f.rhs(), v);
    case Connective::Or: return truth(f.lhs(), v) || truth(f.rhs(), v);
    case Connective::Implies: return !truth(f.lhs(), v) || truth(f.rhs(), v);
  }
  return false;
}

inline Vals all(unsigned n) {
  Vals out;
  for (unsigned v = 0; v < (1u << n); ++v) out.insert(v);
  return out;
}

inline Vals models(const nmlab::FormulaSet& x, unsigned n) {
  Vals out;
  for (unsigned v = 0; v < (1u << n); ++v) {
    bool ok = true;
    for (const auto& f : x) ok = ok && truth(f, v);
    if (ok) out.insert(v);
  }
  return out;
}

inline Vals models(const nmlab::Formula& f, unsigned n) { return models(nmlab::FormulaSet{f}, n); }

inline Vals meet(const Vals& a, const Vals& b) {
  Vals out;
  for (unsigned v : a) {
    if (b.count(v)) out.insert(v);
  }
  return out;
}

inline bool subset(const Vals& a, const Vals& b) {
  for (unsigned v : a) {
    if (!b.count(v)) return false;
  }
  return true;
}

inline Vals with_atom_false(const Vals& m, unsigned atom) {
  Vals out;
  for (unsigned v : m) {
    if (!((v >> atom) & 1u)) out.insert(v);
  }
  return out;
}

inline Vals cwa(const nmlab::FormulaSet& x, unsigned n) {
  const Vals m = models(x, n);
  Vals out = m;
  for (unsigned a = 0; a < n; ++a) {
    bool proves = true;
    for (unsigned v : m) proves = proves && ((v >> a) & 1u);
    if (!proves) out = with_atom_false(out, a);
  }
  return out;
}

inline Vals gcwa(const nmlab::FormulaSet& x, unsigned n) {
  const Vals m = models(x, n);
  if (m.empty()) return m;
  std::vector<unsigned> minimal;
  for (unsigned v : m) {
    bool is_min = true;
    for (unsigned w : m) {
      if (w != v && (w & v) == w) is_min = false;  // w's true atoms strictly inside v's
    }
    if (is_min) minimal.push_back(v);
  }
  Vals out = m;
  for (unsigned a = 0; a < n; ++a) {
    bool false_everywhere = true;
    for (unsigned v : minimal) false_everywhere = false_everywhere && !((v >> a) & 1u);
    if (false_everywhere) out = with_atom_false(out, a);
  }
  return out;
}

inline std::vector<nmlab::FormulaSet> poole_basis(const nmlab::FormulaSet& d, const nmlab::FormulaSet& x,
                                                  unsigned n) {
  std::vector<nmlab::FormulaSet> consistent;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = 0; s < (1ull << d.size()); ++s) {
    nmlab::FormulaSet b = d.select(s);
    if (!meet(models(x, n), models(b, n)).empty()) {
      consistent.push_back(b);
      masks.push_back(s);
    }
  }
  std::vector<nmlab::FormulaSet> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (masks[j] != masks[i] && (masks[j] & masks[i]) == masks[i]) maximal = false;
    }
    if (maximal) out.push_back(consistent[i]);
  }
  return out;
}

inline Vals poole(const nmlab::FormulaSet& d, const nmlab::FormulaSet& x, unsigned n) {
  const auto basis = poole_basis(d, x, n);
  Vals core;  // models of ⋂ cn(B): union of the model sets
  for (const auto& b : basis) {
    for (unsigned v : models(b, n)) core.insert(v);
  }
  return meet(models(x, n), core);
}

inline std::uint32_t bits(const Vals& m) {
  std::uint32_t out = 0;
  for (unsigned v : m) out |= 1u << v;
  return out;
}

}  // namespace oracle
