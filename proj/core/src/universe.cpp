// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>

#include "nmlab/error.hpp"
#include "nmlab/universe.hpp"

namespace nmlab {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Universe::Universe(Language lang, FormulaSet pool, std::size_t max_set_size, CheckLimits limits)
    : lang_(std::move(lang)), pool_(std::move(pool)), max_set_size_(max_set_size), limits_(limits) {
  if (pool_.size() > 64) throw std::invalid_argument("formula pool larger than 64");
  for (const auto& f : pool_) {
    if (f.atom_bound() > lang_.size()) throw std::invalid_argument("pool formula outside the language");
    pool_models_.push_back(models(f, lang_));
  }
  const std::size_t n = pool_.size();
  const std::size_t k = std::min(max_set_size_, n);
  std::uint64_t total = 0;
  for (std::size_t s = 0; s <= k; ++s) total += binomial(n, s);
  if (total > limits_.instantiation_cap) {
    throw UniverseTooLarge("universe has " + std::to_string(total) + " test sets, above the cap of " +
                           std::to_string(limits_.instantiation_cap) + "; shrink the pool or max set size");
  }
  sets_.reserve(total);

  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= k; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      TestSet t{0, {}, ModelSet::full(lang_.size())};
      for (std::size_t i : idx) {
        t.mask |= std::uint64_t{1} << i;
        t.formulas.insert(pool_[i]);
        t.models = t.models & pool_models_[i];
      }
      by_mask_.emplace(t.mask, sets_.size());
      sets_.push_back(std::move(t));
      // next combination in lexicographic order
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

Universe Universe::with_default_pool(Language lang, std::size_t max_set_size, CheckLimits limits) {
  FormulaSet pool = default_pool(lang);
  return Universe(std::move(lang), std::move(pool), max_set_size, limits);
}

std::optional<std::size_t> Universe::index_of(std::uint64_t mask) const {
  auto it = by_mask_.find(mask);
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

void Universe::require_theory_quantification() const {
  if (lang_.size() > limits_.theory_atom_limit) {
    throw UniverseTooLarge("theory-level quantification over " + std::to_string(lang_.size()) +
                           " atoms exceeds the limit of " + std::to_string(limits_.theory_atom_limit));
  }
}

FormulaSet default_pool(const Language& lang) {
  FormulaSet pool;
  std::vector<Formula> literals;
  for (unsigned i = 0; i < lang.size(); ++i) literals.push_back(Formula::atom(i));
  for (unsigned i = 0; i < lang.size(); ++i) literals.push_back(!Formula::atom(i));
  for (const auto& l : literals) pool.insert(l);
  for (std::size_t i = 0; i < literals.size(); ++i) {
    for (std::size_t j = i + 1; j < literals.size(); ++j) {
      const Formula& a = literals[i];
      const Formula& b = literals[j];
      pool.insert(a | b);
      pool.insert(a & b);
      pool.insert(a >> b);
      pool.insert(b >> a);
    }
  }
  return pool;
}

UniverseDescriptor describe(const Universe& u) {
  return {u.language().atoms(), to_strings(u.pool(), u.language()), u.max_set_size()};
}

}  // namespace nmlab
