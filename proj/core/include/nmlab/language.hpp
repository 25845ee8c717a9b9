// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nmlab {

inline constexpr unsigned kMaxAtoms = 5;

/// An ordered, duplicate-free list of propositional atoms (1 to 5 of them).
class Language {
 public:
  explicit Language(std::vector<std::string> atoms);

  /// Parses a comma separated list such as "p,q,r".
  static Language from_list(std::string_view list);

  unsigned size() const noexcept { return static_cast<unsigned>(atoms_.size()); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& atom(unsigned index) const { return atoms_.at(index); }
  std::optional<unsigned> index_of(std::string_view name) const;

  std::uint32_t valuation_count() const noexcept { return 1u << size(); }

  bool operator==(const Language&) const = default;

 private:
  std::vector<std::string> atoms_;
};

bool is_valid_atom_name(std::string_view name);

/// Truth assignment; bit i holds the value of atom i.
using Valuation = std::uint32_t;

/// A set of valuations over a language with `atom_count` atoms, stored as a
/// bitmask indexed by valuation (at most 32 valuations at five atoms).
class ModelSet {
 public:
  ModelSet() = default;
  ModelSet(std::uint32_t bits, unsigned atom_count);

  static ModelSet full(unsigned atom_count);
  static ModelSet none(unsigned atom_count);

  std::uint32_t bits() const noexcept { return bits_; }
  unsigned atom_count() const noexcept { return atom_count_; }
  std::uint32_t valuation_count() const noexcept { return 1u << atom_count_; }

  bool contains(Valuation v) const noexcept { return (bits_ >> v) & 1u; }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(atom_count_); }
  unsigned size() const noexcept;
  bool subset_of(const ModelSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  ModelSet operator&(const ModelSet& o) const { return {bits_ & o.bits_, atom_count_}; }
  ModelSet operator|(const ModelSet& o) const { return {bits_ | o.bits_, atom_count_}; }
  ModelSet complement() const { return {~bits_ & full_mask(atom_count_), atom_count_}; }

  /// Valuations in ascending order.
  std::vector<Valuation> valuations() const;

  /// Every superset of this set, ascending by bitmask. The number of
  /// supersets is 2^(number of missing valuations).
  std::vector<ModelSet> supersets() const;

  bool operator==(const ModelSet&) const = default;
  auto operator<=>(const ModelSet&) const = default;

  static constexpr std::uint32_t full_mask(unsigned atom_count) noexcept {
    return atom_count >= 5 ? 0xFFFFFFFFu : ((1u << (1u << atom_count)) - 1u);
  }

 private:
  std::uint32_t bits_ = 0;
  unsigned atom_count_ = 0;
};

/// Renders a valuation as one 0/1 character per atom, in atom order
/// (so "10" over {p,q} means p true, q false).
std::string valuation_string(Valuation v, unsigned atom_count);

/// Renders a model set as "{10, 01, 11}" in ascending valuation order.
std::string to_string(const ModelSet& models);

}  // namespace nmlab
