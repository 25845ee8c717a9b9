// SPDX-License-Identifier: Apache-2.0
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "nmlab/language.hpp"

namespace nmlab {

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "top" && name != "bot";
}

Language::Language(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty() || atoms_.size() > kMaxAtoms) {
    throw std::invalid_argument("a language needs between 1 and " + std::to_string(kMaxAtoms) +
                                " atoms, got " + std::to_string(atoms_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms_) {
    if (!is_valid_atom_name(a)) throw std::invalid_argument("invalid atom name '" + a + "'");
    if (!seen.insert(a).second) throw std::invalid_argument("duplicate atom '" + a + "'");
  }
}

Language Language::from_list(std::string_view list) {
  std::vector<std::string> atoms;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) atoms.push_back(cur);
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      cur.push_back(c);
    }
  }
  flush();
  return Language(std::move(atoms));
}

std::optional<unsigned> Language::index_of(std::string_view name) const {
  for (unsigned i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return i;
  }
  return std::nullopt;
}

ModelSet::ModelSet(std::uint32_t bits, unsigned atom_count) : bits_(bits), atom_count_(atom_count) {
  if (atom_count > kMaxAtoms) throw std::invalid_argument("model set over too many atoms");
  if ((bits & ~full_mask(atom_count)) != 0) {
    throw std::invalid_argument("model set mask exceeds valuation count");
  }
}

ModelSet ModelSet::full(unsigned atom_count) { return {full_mask(atom_count), atom_count}; }
ModelSet ModelSet::none(unsigned atom_count) { return {0u, atom_count}; }

unsigned ModelSet::size() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

std::vector<Valuation> ModelSet::valuations() const {
  std::vector<Valuation> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Valuation>(std::countr_zero(b)));
  }
  return out;
}

std::vector<ModelSet> ModelSet::supersets() const {
  // Enumerate submasks of the missing valuations in ascending order.
  const std::uint32_t missing = ~bits_ & full_mask(atom_count_);
  std::vector<ModelSet> out;
  out.reserve(std::size_t{1} << std::popcount(missing));
  std::uint32_t sub = 0;
  while (true) {
    out.emplace_back(bits_ | sub, atom_count_);
    if (sub == missing) break;
    sub = (sub - missing) & missing;
  }
  return out;
}

std::string valuation_string(Valuation v, unsigned atom_count) {
  std::string s;
  for (unsigned i = 0; i < atom_count; ++i) s.push_back(((v >> i) & 1u) ? '1' : '0');
  return s;
}

std::string to_string(const ModelSet& models) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Valuation v : models.valuations()) {
    if (!first) out << ", ";
    first = false;
    out << valuation_string(v, models.atom_count());
  }
  out << '}';
  return out.str();
}

}  // namespace nmlab
