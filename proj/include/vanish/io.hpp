#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vanish/design.hpp"
#include "vanish/geometric.hpp"
#include "vanish/hypergraph.hpp"
#include "vanish/ordering.hpp"
#include "vanish/vanishing.hpp"

namespace vanish {

using json = nlohmann::json;

// Canonical JSON: {"k","n","edges",["labels"]} with edges sorted lex.
json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const json& j);

// Plain text: first line "k n", then one edge per line of space-separated ids.
std::string hypergraph_to_text(const Hypergraph& H);
Hypergraph hypergraph_from_text(std::istream& in);

// Orderings are JSON arrays of vertex ids in rank order.
json ordering_to_json(const Ordering& sigma);
Ordering ordering_from_json(const json& j);

json conflict_to_json(const Conflict& c);

json design_to_json(const Design& D);
Design design_from_json(const json& j);  // validates

json geograph_to_json(const GeoGraph& g);
GeoGraph geograph_from_json(const json& j);

Hypergraph load_hypergraph_file(const std::string& path);  // .json or text
void save_json_file(const std::string& path, const json& j);
json load_json_file(const std::string& path);

}  // namespace vanish
