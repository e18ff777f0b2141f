#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hnp/finab.hpp"
#include "hnp/group_spec.hpp"
#include "hnp/reps.hpp"
#include "hnp/theorems.hpp"

namespace hnp {

using json = nlohmann::json;

// Schema: {"kind": "table", "n", "mul", "generators"?}
//         {"kind": "permutations", "degree", "generators": ["(1 2 3)", ...]}
//         {"kind": "semidirect", "p", "m", "matrices": [[[..],[..]], ...], "acting": {...}}
//         {"kind": "product", "factors": [{...}, ...]}
// each with an optional "label".
json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const json& j);  // SchemaError

// Inline JSON (starts with '{'), "catalog:<name>", or a file path.
// Throws ParseError (with byte offset) or SchemaError; the group is built to validate.
GroupSpec load_group_spec(const std::string& source);

// "trivial", "all", "derived", "sylow:<p>", or element indices "0,1,..." (closure).
Subgroup parse_subgroup_ref(const FiniteGroup& G, const std::string& ref);

json to_json(const FinAb& a);
FinAb finab_from_json(const json& j);
json to_json(const Subgroup& H);
json to_json(const Conditions418& c);
json to_json(const ShaReport& r, bool with_cocycles = false);
// Inverse of to_json(ShaReport); cocycles are restored when present.
ShaReport sha_report_from_json(const json& j);
json to_json(const ScanReport& r);
json to_json(const DMembership& m);

// FNV-1a 64-bit of the compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace hnp
