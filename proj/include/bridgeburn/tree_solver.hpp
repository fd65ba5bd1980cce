#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bridgeburn/graph.hpp"

namespace bridgeburn {

// One iteration of the leaf-guarding algorithm.
struct GuardStep {
  Vertex leaf;       // unguarded leaf furthest from the root
  int depth;         // its distance from the root
  Vertex placement;  // root, or the leaf's grandparent
  bool operator==(const GuardStep&) const = default;
};

struct GuardReport {
  Vertex root = 0;
  std::vector<Vertex> placements;  // one per iteration, in order
  int N = 0;
  std::map<Vertex, Vertex> guarded_certificate;  // leaf -> first placement within distance 2
  std::vector<GuardStep> trace;
};

// Bridge-burning cop number of a tree with a guarding placement. A leaf is a
// vertex of degree at most 1. Ties between equally deep unguarded leaves go to
// the smallest index. Throws InputError when `t` is not a tree.
GuardReport tree_cop_number(const Graph& t, std::optional<Vertex> root = std::nullopt);

nlohmann::json to_json(const GuardReport& r);

}  // namespace bridgeburn
