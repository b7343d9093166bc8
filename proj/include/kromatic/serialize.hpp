#pragma once

#include <string>

#include "json.hpp"

#include "kromatic/classical.hpp"
#include "kromatic/engines.hpp"
#include "kromatic/graph.hpp"
#include "kromatic/poset.hpp"
#include "kromatic/series.hpp"

namespace kromatic {

using json = nlohmann::json;

// Term lists are arrays of {"partition": [parts, descending], "coeff": "n" or
// "n/d"}, in canonical order (ascending size, then descending lexicographic).
json terms_to_json(const Coeffs& coeffs);
json terms_to_json(const Expansion& ex);
Coeffs terms_from_json(const json& j);

// {"degreeCap": D, "exact": bool, "terms": [...]}
json series_to_json(const Series& f);
Series series_from_json(const json& j);

// {"n": int, "edges": [[u,v],...]}, plus "weights" when any differs from 1
json graph_to_json(const WeightedGraph& wg);
WeightedGraph graph_from_json(const json& j);

// {"n": int, "less": [[a,b],...]}; pairs generate the strict order
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

// Accepts inline JSON ("{...}"), a file reference ("@path"), or a name such as
// "path:4", "table1:2", "chain:3", "2+1".
WeightedGraph parse_graph_spec(const std::string& spec);
Poset parse_poset_spec(const std::string& spec);

json load_json_file(const std::string& path);

}  // namespace kromatic
