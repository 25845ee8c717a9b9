// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nmlab/properties.hpp"

namespace nmlab {

using Json = nlohmann::json;

/// Structured form of a verdict. Keys: property, operation, universe
/// {atoms, pool, max_set_size}, outcome, witness {X, Y, formula} or null,
/// triviality_flags, notes, instantiations.
Json to_json(const PropertyVerdict& v, const Language& lang);
Json to_json(const UniverseDescriptor& u);
Json to_json(const FormulaSet& set, const Language& lang);

/// One executed scenario check. `result` is a verdict document or a query
/// document; `expected` is the fragment it was compared against.
struct CheckRecord {
  std::string check;
  Json result;
  Json expected;
  bool as_expected = true;
};

struct RunReport {
  std::string tool_version;
  std::string scenario;
  std::vector<CheckRecord> checks;
  double wall_time_ms = 0;
  std::vector<std::string> triviality_flags;  // union over checks, sorted

  bool passed() const;
};

/// Keys sorted, two-space indentation, trailing newline. With
/// `include_timing` false the wall time is omitted, which makes reports
/// byte-stable across runs.
std::string serialize(const RunReport& report, bool include_timing = true);
Json to_json(const RunReport& report, bool include_timing = true);

/// Human-readable rendering, one line per check.
std::string to_text(const RunReport& report);

/// Every key of `fragment` is present in `doc` with an equal value
/// (recursively for objects).
bool matches_fragment(const Json& doc, const Json& fragment);

const char* tool_version() noexcept;

}  // namespace nmlab
