// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "bridgeburn/bounds.hpp"
#include "bridgeburn/errors.hpp"
#include "bridgeburn/families.hpp"
#include "bridgeburn/solver.hpp"
#include "bridgeburn/strategies.hpp"
#include "bridgeburn/tree_solver.hpp"
#include "oracle.hpp"

using namespace bridgeburn;

namespace {

using Clock = std::chrono::steady_clock;

const Variant kBB = Variant::bridge_burning();
const Variant kClassic = Variant::classic();

Graph fam(Family f, std::vector<int> p = {}) { return generate(FamilySpec{f, std::move(p)}); }

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<Vertex, Vertex>> e(edges.begin(), edges.end());
  return build_graph(n, e);
}

// Every cop win the run sees, for the |E| * n capture-time check.
struct Solved {
  int n, m, rounds;
};
std::vector<Solved> g_solved;

SolveResult record(const Graph& g, SolveResult r) {
  if (r.winner == Winner::kCop && r.capture_time_rounds)
    g_solved.push_back({g.vertex_count(), g.edge_count(), *r.capture_time_rounds});
  return r;
}

// Least k <= k_max with a cop win, recording every decided instance.
std::optional<int> cb(const Graph& g, int k_max = 4, Variant v = kBB) {
  for (int k = 1; k <= k_max; ++k)
    if (record(g, cop_wins_with_k(g, k, v)).winner == Winner::kCop) return k;
  return std::nullopt;
}

struct Check {
  bool ok = true;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

int g_failures = 0;

void report(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!c.ok) ++g_failures;
  std::printf("%s %2d %s (%.1fs) %s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.note.str().c_str());
  std::fflush(stdout);
}

void elementary(Check& c) {
  const auto t0 = Clock::now();
  for (int n = 2; n <= 6; ++n) c.expect(cb(fam(Family::kComplete, {n})) == 1, "K" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) c.expect(cb(fam(Family::kCycle, {n})) == 1, "C" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) c.expect(cb(fam(Family::kPath, {n})) == 1, "P" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) c.expect(cb(fam(Family::kPath, {n})) == 2, "P" + std::to_string(n));
  c.expect(std::chrono::duration<double>(Clock::now() - t0).count() < 60, "time limit");
}

void bipartite(Check& c) {
  int count = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 7; ++b, ++count)
      c.expect(cb(fam(Family::kCompleteBipartite, {a, b})) == 1, "K" + std::to_string(a) + "," + std::to_string(b));
  c.note << count << " graphs";
}

void stalemate(Check& c) {
  const auto g = fam(Family::kStalemate);
  const auto b = domination_numbers(g);
  c.expect(cb(g) == 2, "cb");
  c.expect(b.gamma2 == 1, "gamma2");
  c.expect(b.clique_cover_dom == 2, "clique cover");
  c.note << "cb=2 gamma2=" << b.gamma2 << " cliqueCoverDom=" << b.clique_cover_dom;
}

void trees(Check& c) {
  int classes = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& edges : oracle::unlabeled_trees(n)) {
      ++classes;
      const auto t = from_pairs(n, edges);
      const int N = tree_cop_number(t, 0).N;
      for (Vertex r = 1; r < n; ++r) c.expect(tree_cop_number(t, r).N == N, "root invariance");
      c.expect(cb(t) == N, "tree value");
    }
  }
  c.note << classes << " unlabeled trees from all Pruefer sequences";
}

void bound_inequalities(Check& c) {
  int graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& edges : oracle::connected_graphs(n)) {
      ++graphs;
      const auto g = from_pairs(n, edges);
      const auto b = domination_numbers(g);
      const auto k = cb(g, std::min(b.clique_cover_dom, b.gamma2 + 1));
      c.expect(k.has_value(), "cb within both bounds");
    }
  }
  c.note << graphs << " connected graphs";
}

void two_by_n(Check& c) {
  for (int n = 1; n <= 6; ++n)
    c.expect(cb(fam(Family::kGrid, {2, n}), 2) == family_formula(FamilySpec{Family::kGrid, {2, n}}).exact,
             "formula n=" + std::to_string(n));
  const FamilySpec spec{Family::kGrid, {2, 8}};
  const PolicyContext ctx{generate(spec), spec, 1, kBB};
  const Graph& g = ctx.graph;
  c.expect(record(g, cop_wins_with_k(g, 1, kBB)).winner == Winner::kRobber, "one cop insufficient");

  const auto corner = exhaust_vs_policy(g, *make_robber_policy(ctx, "corner_isolate"));
  c.expect(corner.policy_wins, "corner_isolate beats every single cop");
  // Placements each gap column handles; together with the corner robber
  // every single-cop placement must be beaten.
  std::set<Vertex> gap_beaten;
  for (int a = 1; a <= 6; ++a) {
    const auto robber = make_robber_policy(ctx, "gap_isolate:" + std::to_string(a));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      ExhaustOptions o;
      o.cop_placements = std::vector<std::vector<Vertex>>{{v}};
      if (exhaust_vs_policy(g, *robber, o).policy_wins) gap_beaten.insert(v);
    }
  }
  c.note << "gap_isolate beats " << gap_beaten.size() << "/16 single-cop placements; ";

  ExhaustOptions two;
  two.cops = 2;
  const PolicyContext ctx2{g, spec, 2, kBB};
  c.expect(exhaust_vs_policy(g, *make_cop_policy(ctx2, "grid2xn_cop")).policy_wins, "grid2xn_cop");
  c.note << "grid2xn_cop wins with 2 cops; ";
  SolveOptions so;
  so.budget = 30'000'000;
  try {
    const auto r = record(g, cop_wins_with_k(g, 2, kBB, so));
    c.note << "solver 2-cop: " << (r.winner == Winner::kCop ? "cop wins" : "robber wins") << " (" << r.explored_states
           << " states)";
  } catch (const BudgetExceeded& e) {
    c.note << "solver 2-cop: budget exhausted after " << e.explored() << " states";
  }
}

void hypercubes(Check& c) {
  c.expect(cb(fam(Family::kHypercube, {2})) == 1, "Q2");
  c.expect(cb(fam(Family::kHypercube, {3})) == 1, "Q3");
  for (int d = 2; d <= 4; ++d) {
    const FamilySpec spec{Family::kHypercube, {d}};
    const PolicyContext ctx{generate(spec), spec, 1, kBB};
    c.expect(exhaust_vs_policy(ctx.graph, *make_cop_policy(ctx, "hypercube_mirror")).policy_wins,
             "mirror on Q" + std::to_string(d));
  }
}

constexpr int kCaptureFamilyTime = 6;

void capture_time(Check& c) {
  const auto g = fam(Family::kCaptureFamily, {2, 2});
  c.expect(cb(g) == 1, "cb");
  const auto r = record(g, capture_time_bb(g));
  const int capt = r.capture_time_rounds.value_or(-1);
  c.expect(capt >= 5, "lower bound");
  c.expect(capt == kCaptureFamilyTime, "regression constant");
  // Oracle: no placement wins every start within capt - 1, the reported one does within capt.
  oracle::Board b(g);
  for (int cop = 0; cop < g.vertex_count(); ++cop) {
    bool slow = false;
    for (int s = 0; s < g.vertex_count() && !slow; ++s)
      if (s != cop && !oracle::capture_within(b, {cop}, s, 0, capt - 1)) slow = true;
    c.expect(slow, "oracle: no faster placement");
  }
  for (int s = 0; s < g.vertex_count(); ++s)
    if (s != r.optimal_placement.front())
      c.expect(oracle::capture_within(b, {r.optimal_placement.front()}, s, 0, capt), "oracle: placement");
  for (const auto& s : g_solved) c.expect(s.rounds <= s.m * s.n, "capture time within |E| n");
  c.note << "capt=" << capt << ", " << g_solved.size() << " solved instances within |E|n";
}

// All trails from v of up to `moves` steps (staying allowed) on which the
// safety hypothesis holds for distance d; each is checked against every cop
// start beyond d, by the engine and by the oracle.
void distance_safety_on(Check& c, const Graph& g, int moves, long& plans, long& pairs) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    const int far = *std::max_element(dist.begin(), dist.end());
    for (int d = 1; d < far; ++d) {
      std::vector<Vertex> cops;
      for (Vertex u = 0; u < n; ++u)
        if (dist[static_cast<std::size_t>(u)] > d) cops.push_back(u);
      std::vector<Vertex> plan{v};
      std::set<EdgeId> used;
      std::function<void()> rec = [&] {
        if (plan.size() >= 2) {
          if (!robber_distance_safe(g, v, d, plan, {cops.front()})) return;
          ++plans;
          for (Vertex cop : cops) {
            ++pairs;
            c.expect(!oracle::plan_catchable(g, std::vector<int>(plan.begin(), plan.end()), {cop}), "oracle capture");
            std::set<GameState> frontier{GameState::initial({cop}, v)};
            for (std::size_t i = 0; i + 1 < plan.size() && c.ok; ++i) {
              std::set<GameState> next;
              for (const auto& s : frontier)
                for (const auto& cs : cop_successors(g, s)) {
                  c.expect(!is_capture(cs), "engine capture");
                  const auto rs = apply_robber_turn(g, cs, plan[i + 1]);
                  c.expect(!is_capture(rs) || i + 2 == plan.size(), "engine capture");
                  next.insert(rs);
                }
              frontier = std::move(next);
            }
          }
        } else if (!robber_distance_safe(g, v, d, plan, {cops.front()})) {
          return;
        }
        if (static_cast<int>(plan.size()) > moves) return;
        plan.push_back(plan.back());
        rec();
        plan.pop_back();
        for (const auto& nb : g.neighbors(plan.back())) {
          if (used.contains(nb.edge)) continue;
          used.insert(nb.edge);
          plan.push_back(nb.vertex);
          rec();
          plan.pop_back();
          used.erase(nb.edge);
        }
      };
      rec();
    }
  }
}

void torus_grid(Check& c) {
  for (auto [m, n] : {std::pair{16, 14}, {17, 15}, {32, 28}}) {
    for (Family f : {Family::kTorus, Family::kGrid}) {
      const FamilySpec spec{f, {m, n}};
      c.expect(static_cast<int>(placement_generators(spec).size()) == family_formula(spec).upper,
               "placement count " + std::to_string(m) + "x" + std::to_string(n));
    }
  }
  long plans = 0, pairs = 0;
  distance_safety_on(c, fam(Family::kGrid, {7, 7}), 6, plans, pairs);
  distance_safety_on(c, fam(Family::kTorus, {5, 5}), 6, plans, pairs);
  c.note << plans << " accepted plans, " << pairs << " plan/cop pairs; ";

  const FamilySpec spec{Family::kTorus, {11, 11}};
  const PolicyContext ctx{generate(spec), spec, 1, kBB};
  const Vertex v = grid_index(11, 5, 5);
  const auto dist = bfs_distances(ctx.graph, v);
  ExhaustOptions o;
  o.cop_placements.emplace();
  for (Vertex u = 0; u < ctx.graph.vertex_count(); ++u)
    if (dist[static_cast<std::size_t>(u)] >= 10) o.cop_placements->push_back({u});
  const auto verdict = exhaust_vs_policy(ctx.graph, *make_robber_policy(ctx, "degree4_isolate:5,5"), o);
  c.expect(verdict.policy_wins, "degree4_isolate");
  c.note << "degree4_isolate vs " << o.cop_placements->size() << " distant placements";
}

void classic(Check& c) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& edges : oracle::unlabeled_trees(n))
      c.expect(cb(from_pairs(n, edges), 2, kClassic) == 1, "tree");
  for (int n = 4; n <= 8; ++n) c.expect(cb(fam(Family::kCycle, {n}), 3, kClassic) == 2, "C" + std::to_string(n));
}

void oracle_equivalence(Check& c) {
  long positions = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& edges : oracle::connected_graphs(n)) {
      const auto g = from_pairs(n, edges);
      oracle::Minimax mm(g, true);
      for (Vertex cop = 0; cop < n; ++cop)
        for (Vertex r = 0; r < n; ++r)
          for (Phase ph : {Phase::kCopTurn, Phase::kRobberTurn}) {
            GameState s{EdgeSet{}, {cop}, r, ph};
            ++positions;
            const bool solver = solve_position(g, s, kBB).winner == Winner::kCop;
            c.expect(solver == mm.cop_wins({cop}, r, 0, ph == Phase::kCopTurn), "position");
          }
    }
  }
  c.note << positions << " positions";
}

}  // namespace

int main() {
  report(1, "elementary families", elementary);
  report(2, "complete bipartite graphs", bipartite);
  report(3, "stalemate graph", stalemate);
  report(4, "tree algorithm equals game value", trees);
  report(5, "clique-cover and distance-2 bounds", bound_inequalities);
  report(6, "2 x n grids", two_by_n);
  report(7, "hypercubes", hypercubes);
  report(8, "capture time", capture_time);
  report(9, "torus and grid substitutes", torus_grid);
  report(10, "classic variant", classic);
  report(11, "solver equals minimax", oracle_equivalence);
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
