#include "bridgeburn/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace bridgeburn {

std::vector<EdgeId> EdgeSet::elements() const {
  std::vector<EdgeId> out;
  for (int i = 0; i < kWords; ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t EdgeSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
  for (const auto& nb : neighbors(u))
    if (nb.vertex == v) return nb.edge;
  return std::nullopt;
}

Graph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (vertex_count < 0)
    throw GraphError(GraphError::Kind::kNegativeVertexCount, "vertex count must be non-negative");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw GraphError(GraphError::Kind::kEndpointOutOfRange,
                       "edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside [0," +
                           std::to_string(vertex_count) + ")");
    if (a == b)
      throw GraphError(GraphError::Kind::kSelfLoop, "self-loop at vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.emplace(e.u, e.v).second)
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(e);
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
  }
  return g;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, const EdgeSet& removed) {
  if (!g.valid_vertex(source)) throw InputError("invalid vertex " + std::to_string(source));
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(x)) {
      if (removed.contains(nb.edge)) continue;
      auto& d = dist[static_cast<std::size_t>(nb.vertex)];
      if (d == kUnreachable) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  return dist;
}

std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v, const EdgeSet& removed) {
  if (!g.valid_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
  const int d = bfs_distances(g, u, removed)[static_cast<std::size_t>(v)];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::vector<int> component_labels(const Graph& g, const EdgeSet& removed) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(x)) {
        if (removed.contains(nb.edge)) continue;
        auto& l = label[static_cast<std::size_t>(nb.vertex)];
        if (l == -1) {
          l = next;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::vector<EdgeId> cut_edges(const Graph& g) {
  // Iterative low-link search; the parent edge id (not the parent vertex) is
  // skipped so that the walk is correct on any simple graph.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> bridges;
  int clock = 0;

  struct Frame {
    Vertex vertex;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (order[static_cast<std::size_t>(root)] != -1) continue;
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nbs = g.neighbors(top.vertex);
      if (top.next < nbs.size()) {
        const Neighbor nb = nbs[top.next++];
        if (nb.edge == top.via) continue;
        const auto w = static_cast<std::size_t>(nb.vertex);
        if (order[w] == -1) {
          order[w] = low[w] = clock++;
          stack.push_back({nb.vertex, nb.edge, 0});
        } else {
          auto& l = low[static_cast<std::size_t>(top.vertex)];
          l = std::min(l, order[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const auto parent = static_cast<std::size_t>(stack.back().vertex);
        const auto child = static_cast<std::size_t>(done.vertex);
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] > order[parent]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool all_degrees_even(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

}  // namespace bridgeburn
