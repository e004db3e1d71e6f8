// JSON file formats and canonical renderings.
//
// Relation file:
//   {"universe": ["a","b","c"], "relation": {"a": ["a","b"], "b": ["b"]}}
// where absent keys mean an empty successor row.
//
// Family file:
//   {"universe": ["a","b","c"], "functions": [["0","0","0"], ["u","u","0"]]}
// with each function an array of trit literals "0" | "u" | "1" in universe
// order.
//
// Pair literal (output only): {"lower": ["a"], "upper": ["a","b"]}.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rs3/approx_pair.hpp"
#include "rs3/family.hpp"
#include "rs3/relation.hpp"
#include "rs3/subset.hpp"
#include "rs3/topology.hpp"

namespace rs3 {

using json = nlohmann::ordered_json;

Universe universe_from_json(const json& doc);

Relation relation_from_json(const json& doc);
json relation_to_json(const Relation& r);

FunctionFamily family_from_json(const json& doc);
json family_to_json(const FunctionFamily& family);

json subset_to_json(const Subset& s);
json pair_to_json(const ApproxPair& p);
json function_to_json(const TvFunction& f);
json topology_to_json(const Topology& t);

// Parses a comma-separated element list ("a,b"); the empty string is the
// empty set.
Subset subset_from_csv(const Universe& u, const std::string& csv);

json load_json_file(const std::string& path);
Relation load_relation_file(const std::string& path);
FunctionFamily load_family_file(const std::string& path);

}  // namespace rs3
