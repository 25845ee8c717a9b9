// SPDX-License-Identifier: Apache-2.0
#include "nmlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <set>

#include "nmlab/config.hpp"
#include "nmlab/error.hpp"
#include "nmlab/evaluator.hpp"
#include "nmlab/extension.hpp"
#include "nmlab/representations.hpp"

namespace nmlab {

namespace detail {
const std::vector<Json>& scenario_registry();  // scenarios.cpp
}

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const Json& doc : detail::scenario_registry()) {
    out.push_back({doc["id"].get<std::string>(), doc.value("summary", ""),
                   doc.value("tags", std::vector<std::string>{})});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

const Json& scenario_document(std::string_view id) {
  for (const Json& doc : detail::scenario_registry()) {
    if (doc["id"].get<std::string>() == id) return doc;
  }
  throw Error("unknown scenario '" + std::string(id) + "'");
}

namespace {

PropertyVerdict blank(std::string property, std::string operation, const Universe& u) {
  PropertyVerdict v;
  v.property = std::move(property);
  v.operation = std::move(operation);
  v.universe = describe(u);
  return v;
}

// C agrees with cn(X ∪ S(X)) on every universe set.
PropertyVerdict check_assumption_representation(const AssumptionFn& s, const InferenceOp& op, const Universe& u) {
  PropertyVerdict v = blank("assumption_representation:" + s.name(), op.name(), u);
  Evaluator ev(op);
  const Language& lang = u.language();
  for (const auto& t : u.sets()) {
    ++v.instantiations;
    const ModelSet c = ev(t.formulas, t.models);
    const ModelSet rep = t.models & s(t.formulas).models();
    if (c != rep) {
      v.outcome = Outcome::counterexample;
      const bool c_larger = !rep.subset_of(c);
      const Formula f = c_larger ? separating_formula(Theory(c), Theory(rep), u)
                                 : separating_formula(Theory(rep), Theory(c), u);
      v.witness = Witness{t.formulas, std::nullopt, f};
      v.notes.push_back(std::string(c_larger ? "C(X)" : "cn(X ∪ S(X))") + " proves " + to_string(f, lang) +
                        " and the other does not");
      return v;
    }
  }
  return v;
}

class ScenarioRun {
 public:
  explicit ScenarioRun(const Json& doc)
      : doc_(doc),
        u_(universe_from_config(member("universe"), "/universe")),
        lang_(u_.language()),
        op_(op_from_config(member("operation"), lang_, "/operation")) {
    if (doc_.contains("assumptions")) {
      s_.emplace(assumptions_from_config(doc_["assumptions"], lang_, "/assumptions"));
    }
  }

  RunReport run() {
    RunReport report;
    report.tool_version = tool_version();
    report.scenario = doc_.value("id", std::string("(unnamed)"));
    const Json& checks = member("checks");
    if (!checks.is_array()) throw ConfigError("/checks", "expected an array");
    std::set<std::string> flags;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const std::string path = "/checks/" + std::to_string(i);
      const Json& c = checks[i];
      if (!c.is_object()) throw ConfigError(path, "expected an object");
      CheckRecord rec;
      rec.result = execute(c, path, rec.check);
      rec.expected = c.value("expect", Json::object());
      rec.as_expected = matches_fragment(rec.result, rec.expected);
      if (rec.result.contains("triviality_flags")) {
        for (const auto& f : rec.result["triviality_flags"]) flags.insert(f.get<std::string>());
      }
      report.checks.push_back(std::move(rec));
    }
    report.triviality_flags.assign(flags.begin(), flags.end());
    return report;
  }

 private:
  const Json& member(const std::string& key) const {
    if (!doc_.is_object()) throw ConfigError("/", "expected an object");
    if (!doc_.contains(key)) throw ConfigError("/" + key, "missing required key");
    return doc_[key];
  }

  std::string param(const Json& c, const std::string& path, const std::string& key) const {
    if (!c.contains(key) || !c[key].is_string()) throw ConfigError(path + "/" + key, "expected a string");
    return c[key].get<std::string>();
  }

  FormulaSet formulas(const Json& c, const std::string& path, const std::string& key) const {
    try {
      return parse_formula_set(param(c, path, key), lang_);
    } catch (const ParseError& e) {
      throw ConfigError(path + "/" + key, e.what());
    }
  }

  Formula formula(const Json& c, const std::string& path, const std::string& key) const {
    try {
      return parse_formula(param(c, path, key), lang_);
    } catch (const ParseError& e) {
      throw ConfigError(path + "/" + key, e.what());
    }
  }

  ReprKind repr_kind(const Json& c, const std::string& path) const {
    auto k = parse_repr_kind(param(c, path, "kind"));
    if (!k) throw ConfigError(path + "/kind", "unknown representation kind");
    return *k;
  }

  ExtensionKind extension_kind(const Json& c, const std::string& path) const {
    auto k = parse_extension_kind(param(c, path, "kind"));
    if (!k) throw ConfigError(path + "/kind", "unknown extension kind");
    return *k;
  }

  CoCompactKind cocompact_kind(const Json& c, const std::string& path) const {
    auto k = parse_cocompact_kind(param(c, path, "kind"));
    if (!k) throw ConfigError(path + "/kind", "unknown co-compactness kind");
    return *k;
  }

  const AssumptionFn& assumptions(const std::string& path) const {
    if (!s_) throw ConfigError(path, "check needs a scenario-level \"assumptions\" document");
    return *s_;
  }

  Json verdict(const PropertyVerdict& v) const { return to_json(v, lang_); }

  Json query_doc(std::string query, const FormulaSet& input, const Formula& f, const ModelSet& theory) const {
    return Json{{"query", std::move(query)},
                {"operation", op_.name()},
                {"input", to_json(input, lang_)},
                {"formula", to_string(f, lang_)},
                {"theory", to_string(canonical_axiom(theory, lang_), lang_)},
                {"holds", theory.subset_of(models(f, lang_))}};
  }

  Json execute(const Json& c, const std::string& path, std::string& label) {
    const std::string run = param(c, path, "run");
    label = run;
    auto with = [&](const std::string& key) {
      label += " " + param(c, path, key);
      return param(c, path, key);
    };
    if (run == "property") {
      auto p = parse_property_kind(with("property"));
      if (!p) throw ConfigError(path + "/property", "unknown property");
      return verdict(check_property(op_, *p, u_));
    }
    if (run == "representation") {
      with("kind");
      return verdict(verify_representation(op_, repr_kind(c, path), u_));
    }
    if (run == "query") {
      const FormulaSet x = formulas(c, path, "input");
      const Formula f = formula(c, path, "formula");
      label += " " + to_string(x, lang_) + " |~ " + to_string(f, lang_);
      return query_doc("consequence", x, f, op_.apply(x).models());
    }
    if (run == "union_query") {
      const FormulaSet x = formulas(c, path, "input");
      const FormulaSet base = formulas(c, path, "base");
      const Formula f = formula(c, path, "formula");
      label += " cn(" + to_string(x, lang_) + " ∪ C(" + to_string(base, lang_) + ")) |- " + to_string(f, lang_);
      Json doc = query_doc("union_consequence", x, f, models(x, lang_) & op_.apply(base).models());
      doc["base"] = to_json(base, lang_);
      return doc;
    }
    if (run == "represent_query") {
      const FormulaSet x = formulas(c, path, "input");
      const Formula f = formula(c, path, "formula");
      const ReprKind kind = repr_kind(c, path);
      label += " " + std::string(to_string(kind)) + " " + to_string(x, lang_) + " ∋ " + to_string(f, lang_);
      Json doc = query_doc("representation", x, f, represent(op_, x, kind, u_).models());
      doc["kind"] = std::string(to_string(kind));
      return doc;
    }
    if (run == "extension_query") {
      const ExtensionKind kind = extension_kind(c, path);
      FormulaSet x;
      if (c.contains("theory")) {
        x = FormulaSet{formula(c, path, "theory")};
      } else {
        x = formulas(c, path, "input");
      }
      const Formula f = formula(c, path, "formula");
      label += " " + std::string(to_string(kind)) + " " + to_string(x, lang_) + " |~ " + to_string(f, lang_);
      const InferenceOp ext = extend(op_, kind, u_.limits().theory_atom_limit);
      Json doc = query_doc("extension", x, f, ext.apply(x).models());
      doc["operation"] = ext.name();
      doc["kind"] = std::string(to_string(kind));
      doc["membership_route"] = extension_contains(op_, kind, x, f, u_.limits().theory_atom_limit);
      return doc;
    }
    if (run == "assumption_representation") return verdict(check_assumption_representation(assumptions(path), op_, u_));
    if (run == "assumption_antitonicity") return verdict(check_assumption_antitonicity(assumptions(path), u_));
    if (run == "maximality") {
      with("kind");
      return verdict(check_maximality(assumptions(path), op_, repr_kind(c, path), u_));
    }
    if (run == "cuminters") return verdict(verify_cuminters(op_, u_));
    if (run == "supracompact_equiv") return verdict(check_supracompact_equiv(op_, u_));
    if (run == "unique_extension") return verdict(verify_unique_extension(op_, u_));
    if (run == "cumuni") return verdict(verify_cumuni(op_, u_));
    if (run == "extension_agreement") {
      with("kind");
      return verdict(check_extension_agreement(op_, extension_kind(c, path), u_));
    }
    if (run == "cocompact") {
      with("kind");
      return verdict(check_cocompact(op_, cocompact_kind(c, path), u_));
    }
    if (run == "admissibility") return verdict(sweep_admissibility(u_));
    if (run == "strong_admissibility") {
      if (!c.contains("max_family") || !c["max_family"].is_number_integer() || c["max_family"].get<std::int64_t>() < 0) {
        throw ConfigError(path + "/max_family", "expected a non-negative integer");
      }
      return verdict(sweep_strong_admissibility(u_, c["max_family"].get<std::size_t>()));
    }
    if (run == "arrow_set") return verdict(sweep_arrow_set(u_));
    throw ConfigError(path + "/run", "unknown check kind '" + run + "'");
  }

  const Json& doc_;
  Universe u_;
  Language lang_;
  InferenceOp op_;
  std::optional<AssumptionFn> s_;
};

}  // namespace

RunReport run_scenario_document(const Json& doc) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report = ScenarioRun(doc).run();
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunReport run_scenario(std::string_view id_or_path) {
  for (const Json& doc : detail::scenario_registry()) {
    if (doc["id"].get<std::string>() == id_or_path) return run_scenario_document(doc);
  }
  if (std::filesystem::exists(std::filesystem::path(id_or_path))) {
    return run_scenario_document(load_json_file(std::string(id_or_path)));
  }
  throw Error("unknown scenario '" + std::string(id_or_path) + "' (not a builtin id or a readable file)");
}

PropertyVerdict sweep_admissibility(const Universe& u) {
  PropertyVerdict v = blank("admissibility", "cn", u);
  const Language& lang = u.language();
  for (const auto& x : u.sets()) {
    for (const auto& y : u.sets()) {
      for (const auto& z : u.sets()) {
        ++v.instantiations;
        if (!verify_admissibility(x.formulas, y.formulas, z.formulas, lang)) {
          v.outcome = Outcome::counterexample;
          v.witness = Witness{x.formulas, y.formulas, std::nullopt};
          v.notes.push_back("Z = " + to_string(z.formulas, lang));
          return v;
        }
      }
    }
  }
  return v;
}

PropertyVerdict sweep_strong_admissibility(const Universe& u, std::size_t max_family) {
  PropertyVerdict v = blank("strong_admissibility", "cn", u);
  const Language& lang = u.language();
  std::vector<const FormulaSet*> members;
  for (const auto& t : u.sets()) {
    if (t.formulas.size() <= 1) members.push_back(&t.formulas);
  }
  std::vector<FormulaSet> family;
  // Families are strictly increasing index sequences into `members`.
  std::function<bool(const FormulaSet&, std::size_t)> grow = [&](const FormulaSet& a, std::size_t from) {
    for (std::size_t i = from; i < members.size(); ++i) {
      family.push_back(*members[i]);
      ++v.instantiations;
      if (!verify_strong_admissibility(a, family, lang)) return true;
      if (family.size() < max_family && grow(a, i + 1)) return true;
      family.pop_back();
    }
    return false;
  };
  for (const auto& a : u.sets()) {
    family.clear();
    if (grow(a.formulas, 0)) {
      v.outcome = Outcome::counterexample;
      v.witness = Witness{a.formulas, std::nullopt, std::nullopt};
      std::string desc = "family:";
      for (const auto& f : family) desc += " " + to_string(f, lang);
      v.notes.push_back(desc);
      return v;
    }
  }
  return v;
}

PropertyVerdict sweep_arrow_set(const Universe& u) {
  PropertyVerdict v = blank("arrow_set_equivalence", "cn", u);
  const Language& lang = u.language();
  for (const auto& a : u.sets()) {
    for (const auto& y : u.sets()) {
      const ModelSet arrows = models(arrow_set(a.formulas, y.formulas), lang);
      for (const auto& x : u.sets()) {
        ++v.instantiations;
        const bool lhs = x.models.subset_of(arrows);
        const bool rhs = (x.models & a.models).subset_of(y.models);
        if (lhs != rhs) {
          v.outcome = Outcome::counterexample;
          v.witness = Witness{x.formulas, y.formulas, std::nullopt};
          v.notes.push_back("A = " + to_string(a.formulas, lang));
          return v;
        }
      }
    }
  }
  return v;
}

}  // namespace nmlab
