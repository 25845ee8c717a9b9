// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "nmlab/harness.hpp"
#include "nmlab/representations.hpp"

namespace nmlab {

std::string_view to_string(TableFamily family) {
  switch (family) {
    case TableFamily::arbitrary: return "arbitrary";
    case TableFamily::supraclassical: return "supraclassical";
    case TableFamily::antitonic: return "antitonic";
    case TableFamily::ranked: return "ranked";
  }
  return "?";
}

std::vector<PropertyKind> guaranteed_properties(TableFamily family) {
  std::vector<PropertyKind> out = {PropertyKind::left_absorption, PropertyKind::right_absorption};
  if (family == TableFamily::arbitrary) return out;
  out.push_back(PropertyKind::supraclassicality);
  if (family == TableFamily::supraclassical) return out;
  out.push_back(PropertyKind::deductivity);
  if (family == TableFamily::antitonic) return out;
  out.push_back(PropertyKind::cumulativity);
  return out;
}

TheoryTable random_table(TableFamily family, std::uint64_t seed, const Language& lang) {
  std::mt19937_64 rng(seed);
  const unsigned n = static_cast<unsigned>(lang.size());
  const auto theories = all_model_sets(lang, 2);
  const std::uint32_t full = ModelSet::full_mask(n);
  auto random_models = [&] { return ModelSet(static_cast<std::uint32_t>(rng()) & full, n); };

  auto antitonic_table = [&] {
    // Sparse generators r(M'); S(M) = ⋃_{M' ⊇ M} r(M') grows as M shrinks.
    std::map<ModelSet, ModelSet> r;
    for (const auto& m : theories) r.emplace(m, rng() % 4 == 0 ? random_models() : ModelSet::none(n));
    TheoryTable t;
    for (const auto& m : theories) {
      ModelSet s = ModelSet::none(n);
      for (const auto& sup : m.supersets()) s = s | r.at(sup);
      t.emplace(m, m & s);
    }
    return t;
  };
  auto ranked_table = [&] {
    std::vector<unsigned> rank(lang.valuation_count());
    for (auto& r : rank) r = static_cast<unsigned>(rng() % 4);
    TheoryTable t;
    for (const auto& m : theories) {
      unsigned best = ~0u;
      for (Valuation v : m.valuations()) best = std::min(best, rank[v]);
      std::uint32_t bits = 0;
      for (Valuation v : m.valuations()) {
        if (rank[v] == best) bits |= 1u << v;
      }
      t.emplace(m, ModelSet(bits, n));
    }
    return t;
  };
  // A structured table with one entry replaced: mostly near misses of the
  // properties, which exercise both sides of every biconditional.
  auto perturbed = [&](bool keep_supraclassical) {
    TheoryTable t = rng() % 2 == 0 ? antitonic_table() : ranked_table();
    const ModelSet& key = theories[rng() % theories.size()];
    const ModelSet value = random_models();
    t[key] = keep_supraclassical ? key & value : value;
    return t;
  };

  switch (family) {
    case TableFamily::arbitrary: return perturbed(false);
    case TableFamily::supraclassical: return perturbed(true);
    case TableFamily::antitonic: return antitonic_table();
    case TableFamily::ranked: return ranked_table();
  }
  return {};
}

Universe theory_universe(const Language& lang) {
  FormulaSet pool;
  for (const auto& m : all_model_sets(lang, 2)) pool.insert(canonical_axiom(m, lang));
  return Universe(lang, std::move(pool), 2);
}

RunReport run_fuzz(const FuzzOptions& options) {
  if (options.atoms < 1 || options.atoms > 2) throw std::invalid_argument("fuzzing supports 1 or 2 atoms");
  const auto start = std::chrono::steady_clock::now();
  std::vector<TableFamily> families;
  for (TableFamily f : {TableFamily::arbitrary, TableFamily::supraclassical, TableFamily::antitonic,
                        TableFamily::ranked}) {
    const auto g = guaranteed_properties(f);
    if (std::all_of(options.enforce.begin(), options.enforce.end(),
                    [&](PropertyKind p) { return std::find(g.begin(), g.end(), p) != g.end(); })) {
      families.push_back(f);
    }
  }
  if (families.empty()) throw std::invalid_argument("no table family guarantees the requested properties");

  const Language lang(options.atoms == 1 ? std::vector<std::string>{"p"} : std::vector<std::string>{"p", "q"});
  const Universe u = theory_universe(lang);
  std::mt19937_64 seeds(options.seed);

  RunReport report;
  report.tool_version = tool_version();
  report.scenario = "fuzz";
  for (std::size_t i = 0; i < options.count; ++i) {
    const TableFamily family = families[i % families.size()];
    const std::uint64_t table_seed = seeds();
    const InferenceOp op = op_from_table(random_table(family, table_seed, lang), lang,
                                         {.name = "fuzz-" + std::to_string(i) + "-" + std::string(to_string(family))});

    Json props = Json::object();
    auto holds = [&](PropertyKind p) {
      const bool ok = check_property(op, p, u).passed();
      props[std::string(to_string(p))] = ok;
      return ok;
    };
    const bool supra = holds(PropertyKind::supraclassicality);
    const bool la = holds(PropertyKind::left_absorption);
    const bool ra = holds(PropertyKind::right_absorption);
    const bool ded = holds(PropertyKind::deductivity);
    const bool cum = holds(PropertyKind::cumulativity);

    Json equations = Json::object();
    Json biconditionals = Json::object();
    bool ok = true;
    auto compare = [&](ReprKind kind, bool expected) {
      const bool eq = verify_representation(op, kind, u).passed();
      equations[std::string(to_string(kind))] = eq;
      biconditionals[std::string(to_string(kind))] = eq == expected;
      ok = ok && eq == expected;
    };
    compare(ReprKind::largest, supra && ded);
    compare(ReprKind::trace, supra && ra && ded);
    compare(ReprKind::cumulative_trace, supra && la && ded && cum);

    bool guarantees = true;
    for (PropertyKind p : guaranteed_properties(family)) guarantees = guarantees && props[std::string(to_string(p))];
    ok = ok && guarantees;

    CheckRecord rec;
    rec.check = op.name();
    rec.result = Json{{"operation", op.name()},  {"family", std::string(to_string(family))},
                      {"seed", table_seed},      {"properties", props},
                      {"equations", equations},  {"biconditionals", biconditionals},
                      {"guarantees_hold", guarantees}, {"ok", ok}};
    rec.expected = Json{{"ok", true}};
    rec.as_expected = ok;
    report.checks.push_back(std::move(rec));
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nmlab
