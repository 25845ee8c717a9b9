// SPDX-License-Identifier: Apache-2.0
#include "nmlab/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

#include "nmlab/error.hpp"

namespace nmlab {

namespace {

void require_object(const Json& doc, const std::string& path) {
  if (!doc.is_object()) throw ConfigError(path.empty() ? "/" : path, "expected an object");
}

void allow_keys(const Json& doc, const std::string& path, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) throw ConfigError(path + "/" + key, "unknown key");
  }
}

const Json& member(const Json& doc, const std::string& path, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError(path + "/" + key, "missing required key");
  return doc[key];
}

std::string string_at(const Json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

std::uint64_t unsigned_at(const Json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

Formula formula_at(const Json& v, const std::string& path, const Language& lang) {
  const std::string text = string_at(v, path);
  try {
    return parse_formula(text, lang);
  } catch (const ParseError& e) {
    throw ConfigError(path, e.what());
  }
}

FormulaSet formulas_at(const Json& v, const std::string& path, const Language& lang) {
  if (!v.is_array()) throw ConfigError(path, "expected an array of formulas");
  FormulaSet out;
  for (std::size_t i = 0; i < v.size(); ++i) out.insert(formula_at(v[i], path + "/" + std::to_string(i), lang));
  return out;
}

std::string type_of(const Json& doc, const std::string& path) {
  return string_at(member(doc, path, "type"), path + "/type");
}

void check_atoms(const Json& doc, const std::string& path, const Language& lang) {
  if (!doc.contains("atoms")) return;
  if (language_from_config(doc["atoms"], path + "/atoms") != lang) {
    throw ConfigError(path + "/atoms", "does not match the language in use");
  }
}

TheoryTable table_at(const Json& entries, const std::string& path, const Language& lang,
                     const std::string& value_key) {
  if (!entries.is_array()) throw ConfigError(path, "expected an array of entries");
  TheoryTable table;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const Json& e = entries[i];
    require_object(e, at);
    allow_keys(e, at, {"theory", value_key});
    const ModelSet key = models(formula_at(member(e, at, "theory"), at + "/theory", lang), lang);
    const ModelSet value = models(formula_at(member(e, at, value_key), at + "/" + value_key, lang), lang);
    if (!table.emplace(key, value).second) throw ConfigError(at + "/theory", "duplicate theory");
  }
  return table;
}

}  // namespace

Language language_from_config(const Json& atoms, const std::string& path) {
  try {
    if (atoms.is_string()) return Language::from_list(atoms.get<std::string>());
    if (!atoms.is_array()) throw ConfigError(path, "expected an array of atom names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < atoms.size(); ++i) names.push_back(string_at(atoms[i], path + "/" + std::to_string(i)));
    return Language(std::move(names));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

AssumptionFn assumptions_from_config(const Json& doc, const Language& lang, const std::string& path) {
  require_object(doc, path);
  const std::string type = type_of(doc, path);
  if (type == "empty" || type == "cwa") {
    allow_keys(doc, path, {"type"});
    return type == "empty" ? no_assumptions(lang) : cwa_assumptions(lang);
  }
  if (type == "poole-natural") {
    allow_keys(doc, path, {"type", "defaults"});
    return poole_natural_assumptions({formulas_at(member(doc, path, "defaults"), path + "/defaults", lang)}, lang);
  }
  if (type == "anchored") {
    allow_keys(doc, path, {"type", "anchor"});
    return anchored_assumptions(formula_at(member(doc, path, "anchor"), path + "/anchor", lang), lang);
  }
  if (type == "table") {
    allow_keys(doc, path, {"type", "entries", "name"});
    const std::string name =
        doc.contains("name") ? string_at(doc["name"], path + "/name") : std::string("assumption-table");
    return table_assumptions(table_at(member(doc, path, "entries"), path + "/entries", lang, "assumptions"), lang,
                             name);
  }
  throw ConfigError(path + "/type", "unknown assumption type '" + type + "'");
}

InferenceOp op_from_config(const Json& doc, const Language& lang, const std::string& path) {
  require_object(doc, path);
  const std::string type = type_of(doc, path);
  check_atoms(doc, path, lang);
  if (type == "cn" || type == "cwa" || type == "gcwa") {
    allow_keys(doc, path, {"type", "atoms"});
    if (type == "cn") return op_cn(lang);
    return type == "cwa" ? op_cwa(lang) : op_gcwa(lang);
  }
  if (type == "poole") {
    allow_keys(doc, path, {"type", "atoms", "defaults"});
    return op_poole({formulas_at(member(doc, path, "defaults"), path + "/defaults", lang)}, lang);
  }
  if (type == "table") {
    allow_keys(doc, path, {"type", "atoms", "entries", "enforce_supraclassical", "name"});
    TableOptions options;
    if (doc.contains("name")) options.name = string_at(doc["name"], path + "/name");
    if (doc.contains("enforce_supraclassical")) {
      if (!doc["enforce_supraclassical"].is_boolean()) {
        throw ConfigError(path + "/enforce_supraclassical", "expected a boolean");
      }
      options.enforce_supraclassical = doc["enforce_supraclassical"].get<bool>();
    }
    TheoryTable table = table_at(member(doc, path, "entries"), path + "/entries", lang, "result");
    try {
      return op_from_table(std::move(table), lang, options);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path + "/entries", e.what());
    }
  }
  if (type == "assumptions") {
    allow_keys(doc, path, {"type", "atoms", "assumptions"});
    return op_from_assumptions(assumptions_from_config(member(doc, path, "assumptions"), lang, path + "/assumptions"));
  }
  throw ConfigError(path + "/type", "unknown operation type '" + type + "'");
}

Universe universe_from_config(const Json& doc, const std::string& path) {
  require_object(doc, path);
  allow_keys(doc, path, {"atoms", "max_set_size", "pool", "instantiation_cap", "theory_atom_limit"});
  const Language lang = language_from_config(member(doc, path, "atoms"), path + "/atoms");
  const std::size_t k = unsigned_at(member(doc, path, "max_set_size"), path + "/max_set_size");
  CheckLimits limits;
  if (doc.contains("instantiation_cap")) {
    limits.instantiation_cap = unsigned_at(doc["instantiation_cap"], path + "/instantiation_cap");
  }
  if (doc.contains("theory_atom_limit")) {
    limits.theory_atom_limit =
        static_cast<unsigned>(unsigned_at(doc["theory_atom_limit"], path + "/theory_atom_limit"));
  }
  FormulaSet pool = doc.contains("pool") ? formulas_at(doc["pool"], path + "/pool", lang) : default_pool(lang);
  try {
    return Universe(lang, std::move(pool), k, limits);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

std::vector<std::string> builtin_op_names() { return {"cn", "cwa", "gcwa", "poole-p-notp", "two-variable"}; }

Json resolve_op_spec(std::string_view name_or_path) {
  if (name_or_path == "cn" || name_or_path == "cwa" || name_or_path == "gcwa") {
    return Json{{"type", std::string(name_or_path)}};
  }
  if (name_or_path == "poole-p-notp") return Json{{"type", "poole"}, {"defaults", {"p", "!p"}}};
  if (name_or_path == "two-variable") {
    return Json{{"type", "assumptions"}, {"assumptions", {{"type", "anchored"}, {"anchor", "p"}}}};
  }
  return load_json_file(std::string(name_or_path));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open file (and not a builtin name)");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace nmlab
