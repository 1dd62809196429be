#pragma once

#include "clique_cover.hpp"
#include "families.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "shallow_minor.hpp"

#include <json.hpp>

#include <string>

namespace nbcc {

using json = nlohmann::ordered_json;

// Graph JSON: {"n": int, "edges": [[u,v],...], "labels": [...]?}.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// DIMACS edge format: "p edge n m" then "e u v" with 1-based ids; "c" lines
// are comments.
std::string write_dimacs(const Graph& g);
Graph read_dimacs(const std::string& text);

// JSON when the first non-blank character is '{', DIMACS otherwise.
Graph parse_graph(const std::string& text);

// PosetInstance JSON: {"n": int, "relation": [[a,b],...]}.
json poset_to_json(const PosetInstance& p);
PosetInstance poset_from_json(const json& j);

// MinorModel JSON: {"t": int, "branch_sets": [[ids],...]}.
json model_to_json(const MinorModel& m);
MinorModel model_from_json(const json& j);

json cover_to_json(const CliqueCover& c);
CliqueCover cover_from_json(const json& j);

// Scene JSON: {"d": int, "objects": [{"kind": "ball"|"box"|"group", ...}], "meta": {...}}.
json scene_to_json(const FatScene& s);
FatScene scene_from_json(const json& j);

// Throws input_error with the parser message on malformed text.
json parse_json(const std::string& text);

} // namespace nbcc
