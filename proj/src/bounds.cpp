#include "bridgeburn/bounds.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bridgeburn/errors.hpp"

namespace bridgeburn {
namespace {

using Mask = std::uint64_t;

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void spend() {
    if (++used_ > cap_) throw BudgetExceeded("bounds search budget exhausted", used_);
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

// Smallest index set whose masks cover `full`, lexicographically first among
// those of minimum size.
std::vector<int> min_cover(const std::vector<Mask>& masks, Mask full, Budget& budget) {
  const int count = static_cast<int>(masks.size());
  if (full == 0) return {};
  for (int size = 1; size <= count; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      budget.spend();
      Mask cover = 0;
      for (int i : idx) cover |= masks[static_cast<std::size_t>(i)];
      if (cover == full) return idx;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == count - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw DomainError("no cover exists");
}

std::vector<Mask> ball_masks(const Graph& g, int radius) {
  std::vector<Mask> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs_distances(g, v);
    Mask m = 0;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      const int d = dist[static_cast<std::size_t>(w)];
      if (d != kUnreachable && d <= radius) m |= Mask{1} << w;
    }
    out.push_back(m);
  }
  return out;
}

void check_size(const Graph& g) {
  if (g.vertex_count() > kBoundsMaxVertices)
    throw InputError("domination search supports at most " + std::to_string(kBoundsMaxVertices) + " vertices");
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int ceil_div(std::int64_t a, std::int64_t b) { return static_cast<int>((a + b - 1) / b); }

int path_value(int n) { return n <= 5 ? 1 : 2; }

}  // namespace

std::vector<std::vector<Vertex>> all_cliques(const Graph& g, std::uint64_t budget) {
  check_size(g);
  const int n = g.vertex_count();
  if (n > 30) throw InputError("clique enumeration supports at most 30 vertices");
  Budget b(budget);
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  std::vector<std::vector<Vertex>> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    b.spend();
    bool complete = true;
    for (Mask rest = s; rest && complete; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      complete = (s & ~(Mask{1} << v) & ~adj[static_cast<std::size_t>(v)]) == 0;
    }
    if (complete) out.push_back(members(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BoundsReport domination_numbers(const Graph& g, std::uint64_t budget) {
  check_size(g);
  const int n = g.vertex_count();
  Budget b(budget);
  const Mask full = full_mask(n);
  BoundsReport r;

  const auto n1 = ball_masks(g, 1);
  r.gamma_witness = min_cover(n1, full, b);
  r.gamma = static_cast<int>(r.gamma_witness.size());

  r.gamma2_witness = min_cover(ball_masks(g, 2), full, b);
  r.gamma2 = static_cast<int>(r.gamma2_witness.size());

  // Only inclusion-maximal cliques can matter: a sub-clique dominates less.
  auto cliques = all_cliques(g, budget);
  std::vector<Mask> as_mask;
  for (const auto& c : cliques) {
    Mask m = 0;
    for (Vertex v : c) m |= Mask{1} << v;
    as_mask.push_back(m);
  }
  std::vector<std::vector<Vertex>> maximal;
  std::vector<Mask> dom;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const bool contained = std::any_of(as_mask.begin(), as_mask.end(), [&](Mask o) {
      return o != as_mask[i] && (o & as_mask[i]) == as_mask[i];
    });
    if (contained) continue;
    Mask d = 0;
    for (Vertex v : cliques[i]) d |= n1[static_cast<std::size_t>(v)];
    maximal.push_back(cliques[i]);
    dom.push_back(d);
  }
  for (int i : min_cover(dom, full, b)) r.clique_witness.push_back(maximal[static_cast<std::size_t>(i)]);
  r.clique_cover_dom = static_cast<int>(r.clique_witness.size());
  return r;
}

int prism_formula(int n) {
  if (n < 10) throw InputError("prism formula holds for n >= 10");
  return ceil_div(n, 9);
}

FamilyFormulaResult family_formula(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  FamilyFormulaResult r;
  auto exact = [&](int v, std::string source) {
    r.exact = r.lower = r.upper = v;
    r.source = std::move(source);
  };
  switch (spec.family) {
    case Family::kPath:
      exact(path_value(p[0]), "paths: 1 up to five vertices, else 2");
      break;
    case Family::kCycle:
      exact(1, "cycles");
      break;
    case Family::kComplete:
      exact(1, "complete graphs");
      break;
    case Family::kCompleteBipartite:
      exact(1, "complete bipartite graphs: an edge dominates");
      break;
    case Family::kHypercube:
      exact(1, "hypercubes: mirror strategy");
      break;
    case Family::kStalemate:
      exact(2, "stalemate graph");
      break;
    case Family::kGrid: {
      const int m = p[0], n = p[1];
      if (m == 1 || n == 1) {
        exact(path_value(std::max(m, n)), "grid with one row or column is a path");
      } else if (m == 2 || n == 2) {
        exact(ceil_div((m == 2 ? n : m) + 2, 9), "2 x n grids: ceil((n+2)/9)");
      } else {
        r.lower = ceil_div(std::int64_t{m} * n, 121);
        r.upper = 2 * (m / 16) * (n / 14) + 3 * (m / 5 + n / 5) + 4;
        r.source = "m x n grids: ceil(mn/121) <= c_b <= 2[m/16][n/14] + 3([m/5]+[n/5]) + 4";
      }
      break;
    }
    case Family::kTorus: {
      const int m = p[0], n = p[1];
      r.lower = ceil_div(std::int64_t{m} * n, 121);
      r.upper = 2 * ceil_div(m, 16) * ceil_div(n, 14);
      if (*r.lower == *r.upper) r.exact = r.lower;
      r.source = "m x n tori: ceil(mn/121) <= c_b <= 2 ceil(m/16) ceil(n/14)";
      break;
    }
    case Family::kCaptureFamily: {
      const std::int64_t m = p[0], k = p[1];
      exact(1, "capture family: the clique dominates");
      r.capture_time_lower = m * m * k * (k - 1) / 2 + 1;
      break;
    }
    case Family::kSpider:
      throw InputError("no closed form for spider; use the tree command");
  }
  return r;
}

std::vector<Vertex> placement_generators(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  std::vector<Vertex> out;
  if (spec.family == Family::kGrid && (p[0] == 2 || p[1] == 2)) {
    const bool transposed = p[0] != 2;
    const int len = transposed ? p[0] : p[1];
    const int k = ceil_div(len + 2, 9);
    for (int i = 1; i <= k; ++i) {
      const int col = std::min(len - 1, 3 + 9 * (i - 1));
      out.push_back(transposed ? grid_index(2, 0, col) : grid_index(len, col, 0));
    }
  } else if (spec.family == Family::kTorus) {
    const int m = p[0], n = p[1];
    for (int k = 0; k < 2 * ceil_div(n, 14); ++k)
      for (int l = 0; l < 2 * ceil_div(m, 16); ++l)
        if ((k + l) % 2 == 1) out.push_back(grid_index(n, (7 * k) % n, (8 * l) % m));
  } else if (spec.family == Family::kGrid) {
    const int m = p[0], n = p[1];
    if (m < 8 || n < 8) throw InputError("grid placement needs both dimensions >= 8 (or one equal to 2)");
    auto at = [&](int col, int row) { out.push_back(grid_index(n, col, row)); };
    // Border patrol.
    for (int k = 0; k < m / 5; ++k) {
      at(1, 5 * k + 2);
      at(n - 2, 5 * k + 2);
    }
    at(1, m - 1);
    at(n - 2, m - 1);
    for (int l = 0; l < n / 5; ++l) {
      at(5 * l + 2, 1);
      at(5 * l + 2, m - 2);
    }
    at(n - 1, 1);
    at(n - 1, m - 2);
    // Central.
    for (int k = 0; k < 2 * (n / 14); ++k)
      for (int l = 0; l < 2 * (m / 16); ++l)
        if ((k + l) % 2 == 1) at(7 * k, 8 * l);
    // Peripheral.
    for (int t = 0; t < n / 5; ++t) at(5 * t, t % 2 == 0 ? m - 8 : m - 2);
    for (int t = 0; t < m / 5; ++t) at(t % 2 == 0 ? n - 2 : n - 8, 5 * t);
  } else {
    throw InputError("placement generators exist for grid and torus only");
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const BoundsReport& r) {
  return {{"gamma", r.gamma},
          {"gamma2", r.gamma2},
          {"cliqueCoverDom", r.clique_cover_dom},
          {"witnesses", {{"gamma", r.gamma_witness}, {"gamma2", r.gamma2_witness}, {"cliqueCoverDom", r.clique_witness}}}};
}

nlohmann::json to_json(const FamilyFormulaResult& r) {
  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j = {{"exact", opt(r.exact)}, {"lower", opt(r.lower)}, {"upper", opt(r.upper)}, {"source", r.source}};
  if (r.capture_time_lower) j["captureTimeLower"] = *r.capture_time_lower;
  return j;
}

}  // namespace bridgeburn
