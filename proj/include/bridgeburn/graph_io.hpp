#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bridgeburn/graph.hpp"

namespace bridgeburn {

// Edge-list text: "n m" on the first line, then m lines "u v" with u < v.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Accepts either format; JSON is recognized by a leading '{'.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace bridgeburn
