#include <doctest.h>

#include <random>

#include "bridgeburn/bounds.hpp"
#include "bridgeburn/errors.hpp"
#include "bridgeburn/families.hpp"
#include "bridgeburn/solver.hpp"
#include "oracle.hpp"

using namespace bridgeburn;

namespace {

Graph fam(Family f, std::vector<int> p = {}) { return generate(FamilySpec{f, std::move(p)}); }

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<Vertex, Vertex>> e(edges.begin(), edges.end());
  return build_graph(n, e);
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  while (true) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::uniform_real_distribution<>(0, 1)(rng) < p) e.emplace_back(i, j);
    auto g = build_graph(n, e);
    if (is_connected(g)) return g;
  }
}

bool dominates_within(const Graph& g, const std::vector<Vertex>& set, int radius) {
  std::vector<int> best(static_cast<std::size_t>(g.vertex_count()), 1 << 20);
  for (Vertex s : set) {
    const auto d = bfs_distances(g, s);
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d[v] != kUnreachable) best[v] = std::min(best[v], d[v]);
  }
  return std::all_of(best.begin(), best.end(), [&](int d) { return d <= radius; });
}

bool is_clique(const Graph& g, const std::vector<Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.edge_between(c[i], c[j])) return false;
  return !c.empty();
}

void check_witnesses(const Graph& g, const BoundsReport& r) {
  CHECK(static_cast<int>(r.gamma_witness.size()) == r.gamma);
  CHECK(static_cast<int>(r.gamma2_witness.size()) == r.gamma2);
  CHECK(static_cast<int>(r.clique_witness.size()) == r.clique_cover_dom);
  CHECK(dominates_within(g, r.gamma_witness, 1));
  CHECK(dominates_within(g, r.gamma2_witness, 2));
  std::vector<Vertex> un;
  for (const auto& c : r.clique_witness) {
    CHECK(is_clique(g, c));
    un.insert(un.end(), c.begin(), c.end());
  }
  CHECK(dominates_within(g, un, 1));
}

}  // namespace

TEST_CASE("named graphs") {
  SUBCASE("stalemate") {
    const auto g = fam(Family::kStalemate);
    const auto r = domination_numbers(g);
    CHECK(r.gamma2 == 1);
    CHECK(r.clique_cover_dom == 2);
    CHECK(r.gamma == 2);
    check_witnesses(g, r);
  }
  SUBCASE("complete bipartite 2,3") {
    const auto r = domination_numbers(fam(Family::kCompleteBipartite, {2, 3}));
    CHECK(r.clique_cover_dom == 1);
    CHECK(r.gamma == 2);
  }
  SUBCASE("complete graph") {
    const auto r = domination_numbers(fam(Family::kComplete, {6}));
    CHECK(r.gamma == 1);
    CHECK(r.gamma2 == 1);
    CHECK(r.clique_cover_dom == 1);
    CHECK(r.gamma_witness == std::vector<Vertex>{0});
  }
  SUBCASE("path on seven vertices") {
    const auto r = domination_numbers(fam(Family::kPath, {7}));
    CHECK(r.gamma == 3);
    CHECK(r.gamma2 == 2);
  }
}

TEST_CASE("domination numbers match brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 8;
    const auto g = random_connected(rng, n, 0.15 + 0.05 * (trial % 10));
    const auto r = domination_numbers(g);
    CAPTURE(trial);
    CHECK(r.gamma == oracle::brute_domination(g, 1));
    CHECK(r.gamma2 == oracle::brute_domination(g, 2));
    CHECK(r.clique_cover_dom == oracle::brute_clique_cover_dom(g));
    CHECK(r.gamma2 <= r.gamma);
    CHECK(r.clique_cover_dom <= r.gamma);
    check_witnesses(g, r);
  }
}

TEST_CASE("all_cliques lists complete subsets") {
  const auto c = all_cliques(fam(Family::kComplete, {4}));
  CHECK(c.size() == 15);
  const auto p = all_cliques(fam(Family::kPath, {4}));
  CHECK(p.size() == 7);
}

TEST_CASE("budget applies") {
  CHECK_THROWS_AS(domination_numbers(fam(Family::kPath, {20}), 10), BudgetExceeded);
  CHECK_THROWS_AS(domination_numbers(fam(Family::kPath, {65})), InputError);
}

TEST_CASE("cop number respects both bounds on small connected graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& edges : oracle::connected_graphs(n)) {
      const auto g = from_pairs(n, edges);
      const auto r = domination_numbers(g);
      const int cb = bridge_burning_cop_number(g, 4).cop_number.value_or(99);
      CHECK(cb <= r.clique_cover_dom);
      CHECK(cb <= r.gamma2 + 1);
    }
  }
}

TEST_CASE("family formulas") {
  auto f = [](Family fam_, std::vector<int> p) { return family_formula(FamilySpec{fam_, std::move(p)}); };
  CHECK(f(Family::kGrid, {2, 8}).exact == 2);
  CHECK(f(Family::kGrid, {8, 2}).exact == 2);
  CHECK(f(Family::kGrid, {2, 7}).exact == 1);
  CHECK(f(Family::kGrid, {2, 16}).exact == 2);
  CHECK(f(Family::kGrid, {2, 17}).exact == 3);
  CHECK(f(Family::kGrid, {1, 6}).exact == 2);
  const auto torus = f(Family::kTorus, {16, 14});
  CHECK(torus.lower == 2);
  CHECK(torus.upper == 2);
  CHECK(torus.exact == 2);
  const auto big = f(Family::kTorus, {32, 28});
  CHECK(big.lower == 8);
  CHECK(big.upper == 8);
  const auto loose = f(Family::kTorus, {17, 15});
  CHECK(loose.lower == 3);
  CHECK(loose.upper == 8);
  CHECK_FALSE(loose.exact.has_value());
  const auto grid = f(Family::kGrid, {16, 14});
  CHECK(grid.lower == 2);
  CHECK(grid.upper == 21);
  CHECK_FALSE(grid.exact.has_value());
  CHECK(f(Family::kHypercube, {9}).exact == 1);
  CHECK(f(Family::kPath, {5}).exact == 1);
  CHECK(f(Family::kPath, {6}).exact == 2);
  CHECK(f(Family::kCycle, {8}).exact == 1);
  CHECK(f(Family::kStalemate, {}).exact == 2);
  const auto cap = f(Family::kCaptureFamily, {2, 2});
  CHECK(cap.exact == 1);
  CHECK(cap.capture_time_lower == 5);
  CHECK(f(Family::kCaptureFamily, {3, 3}).capture_time_lower == 9 * 3 * 2 / 2 + 1);
  CHECK_THROWS_AS(f(Family::kSpider, {2, 2, 2}), InputError);
  CHECK(prism_formula(10) == 2);
  CHECK(prism_formula(18) == 2);
  CHECK(prism_formula(19) == 3);
  CHECK_THROWS_AS(prism_formula(9), InputError);
}

TEST_CASE("2 x n formula matches the solver for short grids") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto g = fam(Family::kGrid, {2, n});
    const auto expected = family_formula(FamilySpec{Family::kGrid, {2, n}}).exact;
    CHECK(bridge_burning_cop_number(g, 2).cop_number == expected);
  }
}

TEST_CASE("placement generators") {
  auto count = [](Family f, std::vector<int> p) {
    return static_cast<int>(placement_generators(FamilySpec{f, std::move(p)}).size());
  };
  SUBCASE("counts follow the upper bounds") {
    for (auto [m, n] : {std::pair{16, 14}, {17, 15}, {32, 28}, {20, 9}, {8, 8}}) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(count(Family::kTorus, {m, n}) == *family_formula(FamilySpec{Family::kTorus, {m, n}}).upper);
      CHECK(count(Family::kGrid, {m, n}) == *family_formula(FamilySpec{Family::kGrid, {m, n}}).upper);
    }
    for (int n = 2; n <= 40; ++n) CHECK(count(Family::kGrid, {2, n}) == *family_formula(FamilySpec{Family::kGrid, {2, n}}).exact);
  }
  SUBCASE("2 x 12 grid uses columns 3 and 11") {
    CHECK(placement_generators(FamilySpec{Family::kGrid, {2, 12}}) == std::vector<Vertex>{3, 11});
    // Transposed layout: column index becomes the row.
    CHECK(placement_generators(FamilySpec{Family::kGrid, {12, 2}}) == std::vector<Vertex>{6, 22});
  }
  SUBCASE("vertices are in range") {
    for (auto [m, n] : {std::pair{16, 14}, {17, 15}, {32, 28}}) {
      for (Family f : {Family::kTorus, Family::kGrid}) {
        const auto g = generate(FamilySpec{f, {m, n}});
        for (Vertex v : placement_generators(FamilySpec{f, {m, n}})) CHECK(g.valid_vertex(v));
      }
    }
  }
  SUBCASE("unsupported") {
    CHECK_THROWS_AS(placement_generators(FamilySpec{Family::kGrid, {5, 9}}), InputError);
    CHECK_THROWS_AS(placement_generators(FamilySpec{Family::kCycle, {9}}), InputError);
  }
}
