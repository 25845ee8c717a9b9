// SPDX-License-Identifier: Apache-2.0
// nmlab: bounded checks of nonmonotonic inference operations.
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "nmlab/config.hpp"
#include "nmlab/error.hpp"
#include "nmlab/extension.hpp"
#include "nmlab/harness.hpp"
#include "nmlab/representations.hpp"

namespace {

using namespace nmlab;

constexpr int kOk = 0;
constexpr int kUnexpected = 1;
constexpr int kUsage = 2;

struct Common {
  std::string op = "cwa";
  std::string atoms = "p,q";
  std::size_t max_set_size = 3;
  std::string pool;
  std::uint64_t cap = CheckLimits{}.instantiation_cap;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c, bool universe) {
  cmd->add_option("--op", c.op, "builtin name (" + [] {
    std::string names;
    for (const auto& n : builtin_op_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }() + ") or path to an operation document")
      ->capture_default_str();
  cmd->add_option("--atoms", c.atoms, "comma-separated atom names")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  if (universe) {
    cmd->add_option("--max-set-size", c.max_set_size, "largest test set drawn from the pool")->capture_default_str();
    cmd->add_option("--pool", c.pool, "comma-separated formula pool (default: literals and their pairings)");
    cmd->add_option("--cap", c.cap, "instantiation cap per check")->capture_default_str();
  }
}

Universe make_universe(const Common& c, const Language& lang) {
  FormulaSet pool = c.pool.empty() ? default_pool(lang) : parse_formula_set(c.pool, lang);
  return Universe(lang, std::move(pool), c.max_set_size, {.instantiation_cap = c.cap});
}

InferenceOp make_op(const Common& c, const Language& lang) { return op_from_config(resolve_op_spec(c.op), lang); }

void emit(const RunReport& report, const std::string& format, const std::string& output) {
  const std::string text = format == "structured" ? serialize(report) : to_text(report);
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw ConfigError(output, "cannot write report");
  out << text;
}

std::vector<PropertyKind> parse_props(const std::string& list) {
  if (list == "all") return {kAllProperties.begin(), kAllProperties.end()};
  std::vector<PropertyKind> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string name = list.substr(start, end - start);
    if (!name.empty()) {
      auto p = parse_property_kind(name);
      if (!p) throw CLI::ValidationError("--props", "unknown property '" + name + "'");
      out.push_back(*p);
    }
    start = end + 1;
  }
  return out;
}

int run_check(const Common& c, const std::string& props, const std::string& expect_hold, const std::string& output) {
  const Language lang = Language::from_list(c.atoms);
  const Universe u = make_universe(c, lang);
  const InferenceOp op = make_op(c, lang);
  const auto expected = expect_hold.empty() ? std::vector<PropertyKind>{} : parse_props(expect_hold);
  RunReport report;
  report.tool_version = tool_version();
  report.scenario = "check";
  std::set<std::string> flags;
  for (PropertyKind p : parse_props(props)) {
    const PropertyVerdict v = check_property(op, p, u);
    CheckRecord rec;
    rec.check = "property " + std::string(to_string(p));
    rec.result = to_json(v, lang);
    if (std::find(expected.begin(), expected.end(), p) != expected.end()) {
      rec.expected = Json{{"outcome", "no_counterexample_in_universe"}};
    } else {
      rec.expected = Json::object();
    }
    rec.as_expected = matches_fragment(rec.result, rec.expected);
    flags.insert(v.triviality_flags.begin(), v.triviality_flags.end());
    report.checks.push_back(std::move(rec));
  }
  report.triviality_flags.assign(flags.begin(), flags.end());
  emit(report, c.format, output);
  return report.passed() ? kOk : kUnexpected;
}

int run_represent(const Common& c, const std::string& kind_name, const std::optional<std::string>& input) {
  const Language lang = Language::from_list(c.atoms);
  const Universe u = make_universe(c, lang);
  const InferenceOp op = make_op(c, lang);
  const auto kind = parse_repr_kind(kind_name);
  if (!kind) throw CLI::ValidationError("--kind", "unknown representation kind '" + kind_name + "'");
  auto axiom = [&](const ModelSet& m) { return to_string(canonical_axiom(m, lang), lang); };
  auto row = [&](const FormulaSet& x) {
    const ModelSet xm = models(x, lang);
    const ModelSet s = represent(op, x, *kind, u).models();
    const ModelSet cx = op.apply(x).models();
    return Json{{"input", to_json(x, lang)},
                {"theory", axiom(xm)},
                {"assumptions", axiom(s)},
                {"result", axiom(cx)},
                {"equation_holds", (xm & s) == cx}};
  };
  Json doc{{"operation", op.name()}, {"kind", std::string(to_string(*kind))}};
  if (input) {
    doc["row"] = row(parse_formula_set(*input, lang));
  } else {
    doc["universe"] = to_json(describe(u));
    doc["rows"] = Json::array();
    for (const auto& t : u.sets()) doc["rows"].push_back(row(t.formulas));
  }
  if (c.format == "structured") {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  auto print = [](const Json& r) {
    std::cout << r["input"].dump() << "  cn: " << r["theory"].get<std::string>()
              << "  S: " << r["assumptions"].get<std::string>() << "  C: " << r["result"].get<std::string>()
              << (r["equation_holds"].get<bool>() ? "" : "  (C != cn(X, S))") << "\n";
  };
  std::cout << to_string(*kind) << " representation of " << op.name() << "\n";
  if (input) {
    print(doc["row"]);
  } else {
    for (const auto& r : doc["rows"]) print(r);
  }
  return kOk;
}

int run_extend(const Common& c, const std::string& kind_name, const std::optional<std::string>& input,
               const std::optional<std::string>& theory, const std::optional<std::string>& query) {
  const Language lang = Language::from_list(c.atoms);
  const InferenceOp op = make_op(c, lang);
  const auto kind = parse_extension_kind(kind_name);
  if (!kind) throw CLI::ValidationError("--kind", "unknown extension kind '" + kind_name + "'");
  if (input.has_value() == theory.has_value()) {
    throw CLI::ValidationError("extend", "give exactly one of --input and --theory");
  }
  const FormulaSet x = input ? parse_formula_set(*input, lang) : FormulaSet{parse_formula(*theory, lang)};
  const InferenceOp ext = extend(op, *kind);
  const ModelSet result = ext.apply(x).models();
  Json doc{{"operation", ext.name()},
           {"input", to_json(x, lang)},
           {"result", to_string(canonical_axiom(result, lang), lang)},
           {"agrees_with_base", op.apply(x).models() == result}};
  if (query) {
    const Formula f = parse_formula(*query, lang);
    doc["query"] = {{"formula", to_string(f, lang)},
                    {"holds", result.subset_of(models(f, lang))},
                    {"membership_route", extension_contains(op, *kind, x, f)}};
  }
  if (c.format == "structured") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc["operation"].get<std::string>() << " on " << to_string(x, lang) << ": "
              << doc["result"].get<std::string>() << (doc["agrees_with_base"].get<bool>() ? "" : "  (differs from base)")
              << "\n";
    if (query) {
      std::cout << "  " << doc["query"]["formula"].get<std::string>() << ": "
                << (doc["query"]["holds"].get<bool>() ? "follows" : "does not follow") << " (membership route "
                << (doc["query"]["membership_route"].get<bool>() ? "agrees" : "says otherwise") << ")\n";
    }
  }
  if (query && doc["query"]["holds"] != doc["query"]["membership_route"]) return kUnexpected;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nmlab: bounded checks of nonmonotonic inference operations over finite languages"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  Common common;
  std::string output;

  auto* check = app.add_subcommand("check", "check properties of an operation over a bounded universe");
  add_common(check, common, true);
  std::string props = "all";
  std::string expect_hold;
  check->add_option("--props", props, "comma-separated properties or 'all'")->capture_default_str();
  check->add_option("--expect-hold", expect_hold, "properties expected to hold; a counterexample exits with 1");
  check->add_option("--output", output, "write the report to a file");

  auto* repr = app.add_subcommand("represent", "assumption sets of an antitonic representation");
  add_common(repr, common, true);
  std::string repr_kind = "largest";
  std::optional<std::string> repr_input;
  repr->add_option("--kind", repr_kind, "largest, trace or cumulative-trace")->capture_default_str();
  repr->add_option("--input", repr_input, "formula set X; omitted: one row per universe set");

  auto* ext = app.add_subcommand("extend", "canonical extension of an operation on one input");
  add_common(ext, common, false);
  std::string ext_kind = "plain";
  std::optional<std::string> ext_input, ext_theory, ext_query;
  ext->add_option("--kind", ext_kind, "plain or ra")->capture_default_str();
  ext->add_option("--input", ext_input, "formula set X");
  ext->add_option("--theory", ext_theory, "single formula denoting a theory (deductively closed input)");
  ext->add_option("--query", ext_query, "formula whose membership is decided by both routes");

  auto* scenario = app.add_subcommand("scenario", "builtin and file-based scenarios");
  scenario->require_subcommand(1);
  auto* scen_run = scenario->add_subcommand("run", "run a scenario by id or document path");
  std::string scen_id;
  std::string scen_format = "text";
  scen_run->add_option("id", scen_id, "scenario id or path")->required();
  scen_run->add_option("--format", scen_format, "output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  scen_run->add_option("--output", output, "write the report to a file");
  auto* scen_list = scenario->add_subcommand("list", "list builtin scenarios");

  auto* fuzz = app.add_subcommand("fuzz", "random table operations against the representation biconditionals");
  FuzzOptions fopts;
  std::string enforce;
  std::string fuzz_format = "text";
  fuzz->add_option("--seed", fopts.seed, "seed for the table generator")->capture_default_str();
  fuzz->add_option("--count", fopts.count, "number of operations to generate")->capture_default_str();
  fuzz->add_option("--atoms", fopts.atoms, "1 or 2")->capture_default_str();
  fuzz->add_option("--enforce", enforce, "properties every generated table must have");
  fuzz->add_option("--format", fuzz_format, "output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  fuzz->add_option("--output", output, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return run_check(common, props, expect_hold, output);
    if (repr->parsed()) return run_represent(common, repr_kind, repr_input);
    if (ext->parsed()) return run_extend(common, ext_kind, ext_input, ext_theory, ext_query);
    if (scen_list->parsed()) {
      for (const auto& s : list_scenarios()) std::cout << s.id << "  " << s.summary << "\n";
      return kOk;
    }
    if (scen_run->parsed()) {
      const RunReport report = run_scenario(scen_id);
      emit(report, scen_format, output);
      return report.passed() ? kOk : kUnexpected;
    }
    if (fuzz->parsed()) {
      if (!enforce.empty()) fopts.enforce = parse_props(enforce);
      const RunReport report = run_fuzz(fopts);
      emit(report, fuzz_format, output);
      return report.passed() ? kOk : kUnexpected;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
