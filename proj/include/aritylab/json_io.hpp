#pragma once

#include "json.hpp"

#include "aritylab/structure.hpp"

namespace aritylab {

using json = nlohmann::ordered_json;

// The one structure interchange format shared by every subcommand:
//   {"signature":[{"name":str,"arity":int,"sorts":[str]?}],
//    "universe":int, "sort_of":[str]?, "relations":{name:[[int,...],...]}}
// Relation tuple lists are sorted lexicographically, so output is byte-stable.
json structure_to_json(const Structure& s, u64 row_cap = Structure::kDefaultRowCap);
Structure structure_from_json(const json& j);

std::string dump_json(const json& j);
json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace aritylab
