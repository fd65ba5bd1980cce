#include "bridgeburn/tree_solver.hpp"

#include <string>

namespace bridgeburn {

GuardReport tree_cop_number(const Graph& t, std::optional<Vertex> root) {
  if (!is_tree(t)) throw InputError("tree_cop_number: input is not a tree");
  GuardReport report;
  report.root = root.value_or(0);
  if (!t.valid_vertex(report.root)) throw InputError("tree_cop_number: invalid root " + std::to_string(report.root));

  const int n = t.vertex_count();
  const auto depth = bfs_distances(t, report.root);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v)
    for (const auto& nb : t.neighbors(v))
      if (depth[static_cast<std::size_t>(nb.vertex)] + 1 == depth[static_cast<std::size_t>(v)])
        parent[static_cast<std::size_t>(v)] = nb.vertex;

  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) <= 1) leaves.push_back(v);

  while (true) {
    std::optional<Vertex> pick;
    for (Vertex leaf : leaves) {
      if (report.guarded_certificate.contains(leaf)) continue;
      if (!pick || depth[static_cast<std::size_t>(leaf)] > depth[static_cast<std::size_t>(*pick)]) pick = leaf;
    }
    if (!pick) break;
    const int d = depth[static_cast<std::size_t>(*pick)];
    const Vertex cop = d <= 1 ? report.root : parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(*pick)])];
    report.placements.push_back(cop);
    report.trace.push_back({*pick, d, cop});
    const auto from_cop = bfs_distances(t, cop);
    for (Vertex leaf : leaves)
      if (from_cop[static_cast<std::size_t>(leaf)] <= 2) report.guarded_certificate.try_emplace(leaf, cop);
  }
  report.N = static_cast<int>(report.placements.size());
  return report;
}

nlohmann::json to_json(const GuardReport& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& s : r.trace) trace.push_back({{"leaf", s.leaf}, {"depth", s.depth}, {"placement", s.placement}});
  nlohmann::json cert = nlohmann::json::array();
  for (const auto& [leaf, cop] : r.guarded_certificate) cert.push_back({leaf, cop});
  return {{"N", r.N}, {"root", r.root}, {"placements", r.placements}, {"certificate", cert}, {"trace", trace}};
}

}  // namespace bridgeburn
