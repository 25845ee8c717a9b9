// SPDX-License-Identifier: Apache-2.0
#include "nmlab/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifndef NMLAB_VERSION
#define NMLAB_VERSION "0.0.0"
#endif

namespace nmlab {

const char* tool_version() noexcept { return NMLAB_VERSION; }

Json to_json(const FormulaSet& set, const Language& lang) { return to_strings(set, lang); }

Json to_json(const UniverseDescriptor& u) {
  return Json{{"atoms", u.atoms}, {"pool", u.pool}, {"max_set_size", u.max_set_size}};
}

Json to_json(const PropertyVerdict& v, const Language& lang) {
  Json witness = nullptr;
  if (v.witness) {
    witness = Json{{"X", to_json(v.witness->x, lang)},
                   {"Y", v.witness->y ? to_json(*v.witness->y, lang) : Json(nullptr)},
                   {"formula", v.witness->formula ? Json(to_string(*v.witness->formula, lang)) : Json(nullptr)}};
  }
  return Json{{"property", v.property},
              {"operation", v.operation},
              {"universe", to_json(v.universe)},
              {"outcome", std::string(to_string(v.outcome))},
              {"witness", witness},
              {"triviality_flags", v.triviality_flags},
              {"notes", v.notes},
              {"instantiations", v.instantiations}};
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.as_expected; });
}

Json to_json(const RunReport& report, bool include_timing) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"check", c.check}, {"result", c.result}, {"expected", c.expected},
                          {"as_expected", c.as_expected}});
  }
  Json out{{"tool_version", report.tool_version},
           {"scenario", report.scenario},
           {"verdicts", checks},
           {"triviality_flags", report.triviality_flags},
           {"passed", report.passed()}};
  if (include_timing) out["wall_time_ms"] = report.wall_time_ms;
  return out;
}

std::string serialize(const RunReport& report, bool include_timing) {
  return to_json(report, include_timing).dump(2) + "\n";
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "scenario " << report.scenario << " (nmlab " << report.tool_version << ")\n";
  for (const auto& c : report.checks) {
    out << (c.as_expected ? "  ok    " : "  FAIL  ") << c.check;
    const Json& r = c.result;
    if (r.contains("outcome")) out << ": " << r["outcome"].get<std::string>();
    if (r.contains("holds")) out << ": " << (r["holds"].get<bool>() ? "holds" : "does not hold");
    if (r.contains("witness") && !r["witness"].is_null()) {
      const Json& w = r["witness"];
      out << "  X=" << w["X"].dump();
      if (!w["Y"].is_null()) out << " Y=" << w["Y"].dump();
      if (!w["formula"].is_null()) out << " formula=" << w["formula"].get<std::string>();
    }
    out << "\n";
  }
  if (!report.triviality_flags.empty()) {
    out << "  triviality flags:";
    for (const auto& f : report.triviality_flags) out << " " << f;
    out << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << " (" << report.wall_time_ms << " ms)\n";
  return out.str();
}

bool matches_fragment(const Json& doc, const Json& fragment) {
  if (!fragment.is_object()) return doc == fragment;
  if (!doc.is_object()) return false;
  for (const auto& [key, value] : fragment.items()) {
    if (!doc.contains(key)) return false;
    if (!matches_fragment(doc[key], value)) return false;
  }
  return true;
}

}  // namespace nmlab
