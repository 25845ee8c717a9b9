// SPDX-License-Identifier: Apache-2.0
#include <vector>

#include "nmlab/report.hpp"

namespace nmlab::detail {

namespace {

constexpr const char* kTwoAtoms = R"({"atoms": ["p", "q"], "max_set_size": 3})";

Json pass() { return Json{{"outcome", "no_counterexample_in_universe"}}; }
Json fail() { return Json{{"outcome", "counterexample"}}; }
Json blocked() { return Json{{"outcome", "precondition_failed"}}; }
Json holds(bool b) { return Json{{"holds", b}}; }

Json fail_at(std::vector<std::string> x, std::optional<std::vector<std::string>> y, std::string formula) {
  return Json{{"outcome", "counterexample"},
              {"witness", {{"X", x}, {"Y", y ? Json(*y) : Json(nullptr)}, {"formula", formula}}}};
}

Json check(std::string run, Json params, Json expect) {
  Json c = std::move(params);
  c["run"] = std::move(run);
  c["expect"] = std::move(expect);
  return c;
}

Json property(const std::string& name, Json expect) { return check("property", {{"property", name}}, std::move(expect)); }

Json query(const std::string& input, const std::string& formula, bool expect) {
  return check("query", {{"input", input}, {"formula", formula}}, holds(expect));
}

Json scenario(std::string id, std::string summary, std::vector<std::string> tags, Json op, std::vector<Json> checks,
              Json assumptions = nullptr, const char* universe = kTwoAtoms) {
  Json doc{{"id", std::move(id)},
           {"summary", std::move(summary)},
           {"tags", std::move(tags)},
           {"universe", Json::parse(universe)},
           {"operation", std::move(op)},
           {"checks", std::move(checks)}};
  if (!assumptions.is_null()) doc["assumptions"] = std::move(assumptions);
  return doc;
}

const Json kCn = {{"type", "cn"}};
const Json kCwa = {{"type", "cwa"}};
const Json kGcwa = {{"type", "gcwa"}};
const Json kPoole = {{"type", "poole"}, {"defaults", {"p", "!p"}}};
const Json kPooleNatural = {{"type", "poole-natural"}, {"defaults", {"p", "!p"}}};
const Json kTwoVariable = {{"type", "assumptions"}, {"assumptions", {{"type", "anchored"}, {"anchor", "p"}}}};

std::vector<Json> build() {
  std::vector<Json> all;

  all.push_back(scenario(
      "paper-gcwa-deductivity", "GCWA concludes !q from {p, p | q} but not from {p | q}, so it is not deductive",
      {"gcwa", "deductivity"}, kGcwa,
      {property("deductivity", fail_at({"p", "p | q"}, std::vector<std::string>{"p | q"}, "!q")),
       query("p, p | q", "!q", true),
       check("union_query", {{"input", "p, p | q"}, {"base", "p | q"}, {"formula", "!q"}}, holds(false)),
       query("p | q", "!p | !q", false), query("p | q", "p -> !q", false), query("p", "!q", true),
       query("q", "!p", true), property("supraclassicality", pass())}));

  all.push_back(scenario(
      "gcwa-not-representable", "GCWA has no antitonic representation and fails every theorem precondition",
      {"gcwa", "largest-representation", "trace-representation"}, kGcwa,
      {check("representation", {{"kind", "largest"}}, fail_at({"p", "p | q"}, std::nullopt, "!q")),
       check("representation", {{"kind", "trace"}}, fail_at({"p"}, std::nullopt, "!q")),
       check("cuminters", Json::object(), blocked()), check("supracompact_equiv", Json::object(), blocked()),
       check("unique_extension", Json::object(), blocked()), check("cumuni", Json::object(), blocked())}));

  all.push_back(scenario("gcwa-profile", "All eight properties of GCWA over two atoms", {"gcwa", "properties"}, kGcwa,
                         {property("supraclassicality", pass()), property("left_absorption", pass()),
                          property("right_absorption", pass()), property("deductivity", fail()),
                          property("cumulativity", pass()), property("antitonicity", fail()),
                          property("compactness", pass()), property("supracompactness", pass())}));

  all.push_back(scenario(
      "paper-two-variable-separation",
      "cn plus cn(p) on tautological input: p is in the largest representation of {p} but not in its trace",
      {"largest-representation", "trace-representation", "maximality"}, kTwoVariable,
      {check("represent_query", {{"input", "p"}, {"kind", "largest"}, {"formula", "p"}}, holds(true)),
       check("represent_query", {{"input", "p"}, {"kind", "trace"}, {"formula", "p"}}, holds(false)),
       query("", "p", true), query("q -> p", "p", false),
       check("representation", {{"kind", "largest"}}, pass()),
       check("representation", {{"kind", "trace"}}, pass()),
       check("maximality", {{"kind", "largest"}}, pass()), check("maximality", {{"kind", "trace"}}, pass()),
       check("extension_query", {{"input", "p"}, {"kind", "plain"}, {"formula", "p"}},
             {{"holds", true}, {"membership_route", true}}),
       property("cumulativity", fail_at({}, std::vector<std::string>{"p | q"}, "p"))},
      {{"type", "anchored"}, {"anchor", "p"}}));

  all.push_back(scenario(
      "cwa-representable", "CWA is supraclassical and deductive, and its negative literals form the largest representation",
      {"cwa", "largest-representation", "maximality"}, kCwa,
      {property("supraclassicality", pass()), property("left_absorption", pass()), property("deductivity", pass()),
       check("representation", {{"kind", "largest"}}, pass()),
       check("assumption_representation", Json::object(), pass()),
       check("maximality", {{"kind", "largest"}}, pass())},
      {{"type", "cwa"}}));

  all.push_back(scenario("cwa-trace", "CWA's trace represents it and contains the negative literals",
                         {"cwa", "trace-representation", "maximality"}, kCwa,
                         {property("right_absorption", pass()), check("representation", {{"kind", "trace"}}, pass()),
                          check("maximality", {{"kind", "trace"}}, pass())},
                         {{"type", "cwa"}}));

  all.push_back(scenario(
      "cwa-explodes", "CWA is inconsistent on {p | q} and therefore neither cumulative nor supracompact",
      {"cwa", "cumulativity"}, kCwa,
      {query("p | q", "bot", true), query("p", "!q", true), query("", "!p & !q", true),
       property("cumulativity", fail_at({"p | q"}, std::vector<std::string>{"p"}, "q")),
       property("supracompactness", fail_at({"p | q"}, std::nullopt, "p")),
       check("cuminters", Json::object(), blocked())}));

  all.push_back(scenario(
      "cwa-extension", "Both canonical extensions of CWA agree with it and are co-compact",
      {"cwa", "unique-extension", "co-compact-extension"}, kCwa,
      {check("extension_agreement", {{"kind", "plain"}}, pass()),
       check("extension_agreement", {{"kind", "right_absorbing"}}, pass()),
       check("representation", {{"kind", "largest"}}, pass()), check("unique_extension", Json::object(), pass()),
       check("cocompact", {{"kind", "strong"}}, pass()), check("cocompact", {{"kind", "weak"}}, pass()),
       check("extension_query", {{"theory", "p & q | p & !q"}, {"kind", "ra"}, {"formula", "!q"}},
             {{"holds", true}, {"membership_route", true}})}));

  all.push_back(scenario(
      "poole-suite", "Poole system {p, !p}: properties, cumulative trace, natural presentation, extension cumulativity",
      {"poole", "cumulative-trace", "extension-cumulativity"}, kPoole,
      {property("supraclassicality", pass()), property("left_absorption", pass()), property("deductivity", pass()),
       property("cumulativity", pass()), check("representation", {{"kind", "cumulative_trace"}}, pass()),
       check("assumption_antitonicity", Json::object(), fail_at({}, std::vector<std::string>{"p"}, "p")),
       check("cumuni", Json::object(), pass())},
      kPooleNatural));

  all.push_back(scenario(
      "poole-natural-not-antitonic", "The intersection of the Poole basis represents the system but is not antitonic",
      {"poole", "antitonicity"}, kPoole,
      {check("assumption_antitonicity", Json::object(), fail_at({}, std::vector<std::string>{"p"}, "p")),
       check("assumption_representation", Json::object(), pass()), query("", "p", false), query("p", "p", true)},
      kPooleNatural));

  Json compact_flags = pass();
  compact_flags["triviality_flags"] = {"finite_language", "finite_language_trivial"};
  all.push_back(scenario(
      "poole-cuminters", "Poole system {p, !p}: theory intersections coincide; compact iff supracompact",
      {"poole", "theory-intersection", "supracompactness"}, kPoole,
      {check("cuminters", Json::object(), pass()), check("supracompact_equiv", Json::object(), pass()),
       property("compactness", compact_flags), property("supracompactness", pass())}));

  all.push_back(scenario("poole-extension", "Poole system {p, !p}: canonical extensions agree and stay cumulative",
                         {"poole", "unique-extension", "co-compact-extension", "extension-cumulativity"}, kPoole,
                         {check("unique_extension", Json::object(), pass()),
                          check("extension_agreement", {{"kind", "plain"}}, pass()),
                          check("extension_agreement", {{"kind", "right_absorbing"}}, pass()),
                          check("cumuni", Json::object(), pass())}));

  all.push_back(scenario("poole-single-default", "Poole system {p}: the default is adopted whenever consistent",
                         {"poole", "supracompactness"}, Json{{"type", "poole"}, {"defaults", {"p"}}},
                         {query("q", "p & q", true), query("!p", "p", false), query("", "p", true),
                          check("supracompact_equiv", Json::object(), pass()),
                          check("representation", {{"kind", "cumulative_trace"}}, pass())}));

  all.push_back(scenario(
      "cn-baseline", "Classical consequence: monotone, every representation is the tautologies",
      {"cn", "largest-representation", "theory-intersection"}, kCn,
      {property("supraclassicality", pass()), property("deductivity", pass()), property("cumulativity", pass()),
       property("antitonicity", fail_at({}, std::vector<std::string>{"p"}, "p")),
       check("represent_query", {{"input", "p"}, {"kind", "largest"}, {"formula", "p"}}, holds(false)),
       check("represent_query", {{"input", "p"}, {"kind", "largest"}, {"formula", "top"}}, holds(true)),
       check("maximality", {{"kind", "largest"}}, pass()), check("cuminters", Json::object(), pass()),
       check("extension_agreement", {{"kind", "plain"}}, pass()), check("cumuni", Json::object(), pass())},
      {{"type", "empty"}}));

  all.push_back(scenario(
      "kernel-identities", "Closure identities of cn over three atoms",
      {"cn", "kernel"}, kCn,
      {check("admissibility", Json::object(), pass()),
       check("strong_admissibility", {{"max_family", 4}}, pass()), check("arrow_set", Json::object(), pass())},
      nullptr,
      R"({"atoms": ["p", "q", "r"], "max_set_size": 2,
          "pool": ["p", "q", "r", "!p", "p | q", "q & r", "p -> r", "!q | r", "p & !r", "q -> p"]})"));

  return all;
}

}  // namespace

const std::vector<Json>& scenario_registry() {
  static const std::vector<Json> registry = build();
  return registry;
}

}  // namespace nmlab::detail
