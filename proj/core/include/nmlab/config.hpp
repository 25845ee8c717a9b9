// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nmlab/operations.hpp"
#include "nmlab/report.hpp"
#include "nmlab/universe.hpp"

namespace nmlab {

// Configuration documents. All errors are ConfigError carrying a path such
// as "/operation/entries/2/theory". Theories are written as one formula
// whose models define the theory.
//
// operation:   {"type": "cn" | "cwa" | "gcwa"}
//              {"type": "poole", "defaults": [formula, ...]}
//              {"type": "table", "entries": [{"theory": f, "result": f}],
//               "enforce_supraclassical": bool, "name": string}
//              {"type": "assumptions", "assumptions": <assumptions>}
//              Any of these may carry "atoms"; it must agree with the
//              language it is loaded into.
// assumptions: {"type": "empty" | "cwa"}
//              {"type": "poole-natural", "defaults": [formula, ...]}
//              {"type": "anchored", "anchor": formula}
//              {"type": "table", "entries": [{"theory": f, "assumptions": f}],
//               "name": string}
// universe:    {"atoms": [name, ...] | "p,q", "max_set_size": k,
//               "pool": [formula, ...], "instantiation_cap": n,
//               "theory_atom_limit": n}   (pool and limits optional)

Language language_from_config(const Json& atoms, const std::string& path);
InferenceOp op_from_config(const Json& doc, const Language& lang, const std::string& path = "");
AssumptionFn assumptions_from_config(const Json& doc, const Language& lang, const std::string& path = "");
Universe universe_from_config(const Json& doc, const std::string& path = "");

/// Named operation documents: cn, cwa, gcwa, poole-p-notp (defaults p, !p)
/// and two-variable (cn plus cn(p) on tautological input).
std::vector<std::string> builtin_op_names();
/// The builtin document for `name`, else the JSON file at that path.
Json resolve_op_spec(std::string_view name_or_path);
/// Reads a JSON file; unreadable or malformed files raise ConfigError.
Json load_json_file(const std::string& path);

}  // namespace nmlab
