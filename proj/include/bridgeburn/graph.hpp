#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bridgeburn/errors.hpp"

namespace bridgeburn {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u;  // u < v always
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

struct Neighbor {
  Vertex vertex;
  EdgeId edge;
};

// Fixed-capacity set of edge ids. Games are played on graphs with at most
// kCapacity edges, which keeps the burned-edge mask a flat value type.
class EdgeSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = 64 * kWords;

  constexpr EdgeSet() = default;

  // Ids past the capacity are never members.
  bool contains(EdgeId e) const { return e < kCapacity && ((words_[e >> 6] >> (e & 63)) & 1u); }
  void insert(EdgeId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeId e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const { return size() == 0; }

  // True iff every element of this set is also in `other`.
  bool subset_of(const EdgeSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  std::vector<EdgeId> elements() const;

  std::uint64_t word(int i) const { return words_[i]; }
  void set_word(int i, std::uint64_t w) { words_[i] = w; }

  auto operator<=>(const EdgeSet&) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// Immutable simple undirected graph. Edge ids follow insertion order and
// every stored pair is normalized so that u < v.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Neighbor> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  // Edge id joining u and v, if any.
  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  friend Graph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Validation failure raised by build_graph; `kind` tells the cases apart.
class GraphError : public InputError {
 public:
  enum class Kind { kNegativeVertexCount, kEndpointOutOfRange, kSelfLoop, kDuplicateEdge };
  GraphError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

Graph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
inline Graph build_graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

inline constexpr int kUnreachable = -1;

// Shortest-path edge counts from `source`; kUnreachable across components.
// Edges in `removed` are treated as absent.
std::vector<int> bfs_distances(const Graph& g, Vertex source, const EdgeSet& removed = {});

// Distance between u and v, or nullopt when they lie in different components.
std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v, const EdgeSet& removed = {});

// Component label per vertex (labels are 0.. in order of smallest vertex).
std::vector<int> component_labels(const Graph& g, const EdgeSet& removed = {});

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Edges whose removal increases the number of components.
std::vector<EdgeId> cut_edges(const Graph& g);

bool all_degrees_even(const Graph& g);

}  // namespace bridgeburn
