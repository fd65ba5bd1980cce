#include <doctest.h>

#include <random>
#include <set>

#include "bridgeburn/bounds.hpp"
#include "bridgeburn/errors.hpp"
#include "bridgeburn/families.hpp"
#include "bridgeburn/strategies.hpp"
#include "oracle.hpp"

using namespace bridgeburn;

namespace {

PolicyContext ctx_of(Family f, std::vector<int> p, int cops = 1) {
  FamilySpec spec{f, std::move(p)};
  return {generate(spec), spec, cops, Variant::bridge_burning()};
}

// Moves uniformly at random; the memory word is the step counter mixed with
// the seed so choices stay a pure function of (state, memory).
class RandomRobber : public RobberPolicy {
 public:
  RandomRobber(Graph g, unsigned seed) : g_(std::move(g)), seed_(seed) {}
  std::string name() const override { return "random_robber"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override {
    std::mt19937 rng(seed_ + static_cast<unsigned>(cops.size()));
    return {std::uniform_int_distribution<Vertex>(0, g_.vertex_count() - 1)(rng), {0}};
  }
  RobberDecision choose(const GameState& s, const PolicyMemory& m) const override {
    std::mt19937 rng(seed_ * 7919u + static_cast<unsigned>(m[0]));
    const auto succ = robber_successors(g_, s);
    const auto pick = std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng);
    return {succ[pick].second.to, {m[0] + 1}};
  }

 private:
  Graph g_;
  unsigned seed_;
};

class RandomCop : public CopPolicy {
 public:
  RandomCop(Graph g, int k, unsigned seed) : g_(std::move(g)), k_(k), seed_(seed) {}
  std::string name() const override { return "random_cop"; }
  CopOpening place() const override {
    std::mt19937 rng(seed_);
    std::vector<Vertex> cops;
    for (int i = 0; i < k_; ++i) cops.push_back(std::uniform_int_distribution<Vertex>(0, g_.vertex_count() - 1)(rng));
    std::sort(cops.begin(), cops.end());
    return {cops, {0}};
  }
  CopDecision choose(const GameState& s, const PolicyMemory& m) const override {
    std::mt19937 rng(seed_ * 104729u + static_cast<unsigned>(m[0]));
    std::vector<Vertex> targets;
    for (Vertex c : s.cops) {
      std::vector<Vertex> options{c};
      for (const auto& nb : g_.neighbors(c))
        if (!s.burned.contains(nb.edge)) options.push_back(nb.vertex);
      targets.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    return {targets, {m[0] + 1}};
  }

 private:
  Graph g_;
  int k_;
  unsigned seed_;
};

// Engine-side check: every cop play against the scripted walk, breadth first.
// Capture counts only before the robber's final step lands.
bool engine_catchable(const Graph& g, const std::vector<Vertex>& plan, std::vector<Vertex> cops) {
  std::sort(cops.begin(), cops.end());
  std::set<GameState> frontier{GameState::initial(cops, plan[0])};
  for (std::size_t i = 0; i + 1 < plan.size(); ++i) {
    std::set<GameState> next;
    for (const auto& s : frontier) {
      for (const auto& c : cop_successors(g, s)) {
        if (is_capture(c)) return true;
        const auto r = apply_robber_turn(g, c, plan[i + 1]);
        if (is_capture(r) && i + 2 < plan.size()) return true;
        next.insert(r);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

std::vector<Vertex> random_trail(const Graph& g, std::mt19937& rng, Vertex start, int len) {
  std::vector<Vertex> plan{start};
  std::set<EdgeId> used;
  for (int i = 0; i < len; ++i) {
    std::vector<std::pair<Vertex, EdgeId>> options;
    for (const auto& nb : g.neighbors(plan.back()))
      if (!used.contains(nb.edge)) options.emplace_back(nb.vertex, nb.edge);
    if (options.empty() || rng() % 5 == 0) {
      plan.push_back(plan.back());
      continue;
    }
    const auto [w, e] = options[rng() % options.size()];
    used.insert(e);
    plan.push_back(w);
  }
  return plan;
}

std::vector<Vertex> robber_path(const Transcript& t) {
  std::vector<Vertex> out;
  for (const auto& s : t.states())
    if (out.empty() || out.back() != s.robber) out.push_back(s.robber);
  return out;
}

}  // namespace

TEST_CASE("catalog and factory") {
  for (const auto& n : policy_names(Side::kCop)) CHECK(policy_side(n) == Side::kCop);
  for (const auto& n : policy_names(Side::kRobber)) CHECK(policy_side(n) == Side::kRobber);
  CHECK_FALSE(policy_side("nope").has_value());
  const auto path = ctx_of(Family::kPath, {4});
  CHECK_THROWS_AS(make_cop_policy(path, "guard_start_vertex"), InputError);
  CHECK_THROWS_AS(make_cop_policy(path, "hypercube_mirror"), InputError);
  CHECK_THROWS_AS(make_cop_policy(path, "nope"), InputError);
  CHECK_THROWS_AS(make_robber_policy(path, "corner_isolate"), InputError);
  CHECK_THROWS_AS(make_robber_policy(ctx_of(Family::kCaptureFamily, {2, 2}), "eulerian_stall:1,2"), InputError);
  CHECK_THROWS_AS(make_robber_policy(ctx_of(Family::kCaptureFamily, {3, 2}), "eulerian_stall:3,2"), InputError);
  CHECK_NOTHROW(make_robber_policy(ctx_of(Family::kCaptureFamily, {2, 2}), "eulerian_stall:2,2"));
  CHECK_THROWS_AS(make_robber_policy(ctx_of(Family::kGrid, {3, 13}), "gap_isolate:6"), InputError);
  CHECK_THROWS_AS(make_robber_policy(ctx_of(Family::kGrid, {2, 13}), "gap_isolate:0"), InputError);
  CHECK_THROWS_AS(make_robber_policy(ctx_of(Family::kTorus, {11, 11}), "degree4_isolate:0,0,0"), InputError);
  CHECK_THROWS_AS(make_robber_policy(ctx_of(Family::kCycle, {5}), "stalemate_policy"), InputError);
}

TEST_CASE("matches") {
  SUBCASE("mirror cop catches a greedy robber on the 3-cube") {
    const auto c = ctx_of(Family::kHypercube, {3});
    const auto t = run_match(c.graph, *make_cop_policy(c, "hypercube_mirror"), *make_robber_policy(c, "greedy_evader"), 100);
    CHECK(t.outcome.kind == Outcome::Kind::kCopWin);
    CHECK_NOTHROW(t.replay());
  }
  SUBCASE("leaf robber escapes a stationary cop on P6") {
    const auto c = ctx_of(Family::kPath, {6});
    const auto t = run_match(c.graph, *make_cop_policy(c, "stationary"), *make_robber_policy(c, "leaf_isolate"), 100);
    CHECK(t.outcome.kind == Outcome::Kind::kRobberEscape);
    CHECK(t.outcome.reason == "isolated");
    CHECK(t.graph.degree(t.replay().robber) == 1);
  }
  SUBCASE("eulerian robber survives at least five rounds") {
    const auto c = ctx_of(Family::kCaptureFamily, {2, 2});
    const auto robber = make_robber_policy(c, "eulerian_stall:2,2");
    for (const char* cop : {"greedy_closer", "stationary"}) {
      const auto t = run_match(c.graph, *make_cop_policy(c, cop), *robber, 200);
      CHECK((t.outcome.kind != Outcome::Kind::kCopWin || t.outcome.round >= 5));
    }
    for (Vertex start = 0; start < c.graph.vertex_count(); ++start) {
      const auto t = run_match(c.graph, *make_cop_policy(c, "greedy_closer:" + std::to_string(start)), *robber, 200);
      CHECK((t.outcome.kind != Outcome::Kind::kCopWin || t.outcome.round >= 5));
    }
  }
  SUBCASE("degree-4 loop with no cop nearby") {
    const auto c = ctx_of(Family::kTorus, {11, 11});
    auto at = [](int i, int j) { return grid_index(11, i, j); };
    const auto t = run_match(c.graph, *make_cop_policy(c, "stationary:" + std::to_string(at(0, 0))),
                             *make_robber_policy(c, "degree4_isolate:5,5"), 50);
    // right, up, left, down, then left, down, right, up; rows grow downward
    const std::vector<Vertex> loop{at(5, 5), at(6, 5), at(6, 4), at(5, 4), at(5, 5),
                                   at(4, 5), at(4, 6), at(5, 6), at(5, 5)};
    CHECK(robber_path(t) == loop);
    CHECK(t.outcome.kind == Outcome::Kind::kRobberEscape);
    CHECK(t.outcome.reason == "isolated");
    CHECK(robber_distance_safe(c.graph, at(5, 5), 9, loop, {at(0, 0)}));
  }
  SUBCASE("boards past the burned-edge capacity are refused") {
    const auto c = ctx_of(Family::kTorus, {16, 14});
    CHECK_THROWS_AS(run_match(c.graph, *make_cop_policy(c, "torus_placement"), *make_robber_policy(c, "greedy_evader"), 5),
                    InputError);
  }
  SUBCASE("round limit") {
    const auto c = ctx_of(Family::kCycle, {8});
    const auto t = run_match(c.graph, *make_cop_policy(c, "stationary:0"), *make_robber_policy(c, "greedy_evader"), 3);
    CHECK(t.outcome.kind != Outcome::Kind::kCopWin);
  }
}

TEST_CASE("illegal policy moves are reported by name") {
  class Teleport : public CopPolicy {
   public:
    std::string name() const override { return "teleport"; }
    CopOpening place() const override { return {{0}, {}}; }
    CopDecision choose(const GameState& s, const PolicyMemory&) const override { return {{s.robber}, {}}; }
  };
  const auto c = ctx_of(Family::kPath, {7});
  try {
    run_match(c.graph, Teleport{}, *make_robber_policy(c, "greedy_evader"), 10);
    FAIL("expected PolicyError");
  } catch (const PolicyError& e) {
    CHECK(std::string(e.what()).find("teleport") != std::string::npos);
  }
}

TEST_CASE("exhaustive verdicts") {
  SUBCASE("mirror cop on small cubes") {
    for (int d = 2; d <= 4; ++d) {
      const auto c = ctx_of(Family::kHypercube, {d});
      const auto v = exhaust_vs_policy(c.graph, *make_cop_policy(c, "hypercube_mirror"));
      CHECK(v.policy_wins);
      CHECK_FALSE(v.counterexample.has_value());
      CHECK(v.capture_round.has_value());
      CHECK(v.nodes_searched > 0);
    }
  }
  SUBCASE("stalemate robber") {
    const auto c = ctx_of(Family::kStalemate, {});
    const auto v = exhaust_vs_policy(c.graph, *make_robber_policy(c, "stalemate_policy"));
    CHECK(v.policy_wins);
  }
  SUBCASE("beaten cop carries a replayable counterexample") {
    const auto c = ctx_of(Family::kPath, {6});
    const auto v = exhaust_vs_policy(c.graph, *make_cop_policy(c, "greedy_closer"));
    CHECK_FALSE(v.policy_wins);
    REQUIRE(v.counterexample.has_value());
    CHECK_NOTHROW(v.counterexample->replay());
    CHECK(v.counterexample->outcome.kind == Outcome::Kind::kRobberEscape);
  }
  SUBCASE("beaten robber carries a capture") {
    const auto c = ctx_of(Family::kPath, {5});
    const auto v = exhaust_vs_policy(c.graph, *make_robber_policy(c, "greedy_evader"));
    CHECK_FALSE(v.policy_wins);
    REQUIRE(v.counterexample.has_value());
    CHECK(is_capture(v.counterexample->replay()));
    CHECK(v.capture_round == v.counterexample->outcome.round);
  }
  SUBCASE("eulerian robber loses no earlier than round five") {
    const auto c = ctx_of(Family::kCaptureFamily, {2, 2});
    const auto v = exhaust_vs_policy(c.graph, *make_robber_policy(c, "eulerian_stall:2,2"));
    CHECK_FALSE(v.policy_wins);
    REQUIRE(v.capture_round.has_value());
    CHECK(*v.capture_round >= 5);
  }
  SUBCASE("2 x n cop team") {
    for (int n = 1; n <= 9; ++n) {
      CAPTURE(n);
      const auto c = ctx_of(Family::kGrid, {2, n});
      CHECK(exhaust_vs_policy(c.graph, *make_cop_policy(c, "grid2xn_cop")).policy_wins);
    }
  }
  SUBCASE("corner robber beats any single cop on the 2 x 8 grid") {
    const auto c = ctx_of(Family::kGrid, {2, 8});
    CHECK(exhaust_vs_policy(c.graph, *make_robber_policy(c, "corner_isolate")).policy_wins);
  }
  SUBCASE("gap robber beats a distant cop on the 2 x 13 grid") {
    const auto c = ctx_of(Family::kGrid, {2, 13});
    const int a = 6;
    ExhaustOptions o;
    o.cop_placements.emplace();
    for (int col = 0; col < 13; ++col)
      if (std::abs(col - (a - 1)) >= 5 || std::abs(col - (a + 1)) >= 5)
        if (std::abs(col - a) >= 3)
          for (int row = 0; row < 2; ++row) o.cop_placements->push_back({grid_index(13, col, row)});
    REQUIRE(!o.cop_placements->empty());
    CHECK(exhaust_vs_policy(c.graph, *make_robber_policy(c, "gap_isolate:" + std::to_string(a)), o).policy_wins);
  }
  SUBCASE("degree-4 robber beats a distant cop on the 11 x 11 torus") {
    const auto c = ctx_of(Family::kTorus, {11, 11});
    const Vertex v = grid_index(11, 5, 5);
    const auto d = bfs_distances(c.graph, v);
    ExhaustOptions o;
    o.cop_placements.emplace();
    for (Vertex u = 0; u < c.graph.vertex_count(); ++u)
      if (d[static_cast<std::size_t>(u)] >= 9) o.cop_placements->push_back({u});
    CHECK(exhaust_vs_policy(c.graph, *make_robber_policy(c, "degree4_isolate:5,5"), o).policy_wins);
  }
  SUBCASE("budget") {
    const auto c = ctx_of(Family::kHypercube, {4});
    ExhaustOptions o;
    o.budget = 5;
    CHECK_THROWS_AS(exhaust_vs_policy(c.graph, *make_cop_policy(c, "hypercube_mirror"), o), BudgetExceeded);
  }
}

TEST_CASE("distance safety") {
  const auto torus = ctx_of(Family::kTorus, {11, 11});
  auto at = [](int i, int j) { return grid_index(11, i, j); };
  const std::vector<Vertex> corner{at(5, 5), at(6, 5), at(6, 4), at(5, 4), at(5, 5)};
  CHECK(robber_distance_safe(torus.graph, at(5, 5), 5, corner, {at(0, 0)}));
  CHECK_FALSE(robber_distance_safe(torus.graph, at(5, 5), 5, corner, {at(8, 5)}));
  const std::vector<Vertex> straight{at(5, 5), at(6, 5), at(7, 5)};
  CHECK_FALSE(robber_distance_safe(torus.graph, at(5, 5), 2, straight, {at(0, 0)}));
  CHECK_THROWS_AS(robber_distance_safe(torus.graph, at(5, 5), 5, {at(5, 5), at(7, 5)}, {}), InputError);

  std::mt19937 rng(5);
  int accepted = 0;
  for (Family f : {Family::kGrid, Family::kTorus}) {
    const auto c = f == Family::kGrid ? ctx_of(f, {7, 7}) : ctx_of(f, {5, 5});
    const Graph& g = c.graph;
    const int n = g.vertex_count();
    for (int trial = 0; trial < 3000; ++trial) {
      const Vertex v = static_cast<Vertex>(rng() % n);
      const int len = 1 + static_cast<int>(rng() % 7);
      const int d = 1 + static_cast<int>(rng() % 9);
      auto plan = random_trail(g, rng, rng() % 3 == 0 ? v : g.neighbors(v)[0].vertex, len);
      std::vector<Vertex> cops{static_cast<Vertex>(rng() % n)};
      if (rng() % 2) cops.push_back(static_cast<Vertex>(rng() % n));
      if (!robber_distance_safe(g, v, d, plan, cops)) continue;
      ++accepted;
      std::vector<int> ocops(cops.begin(), cops.end());
      CHECK_FALSE(oracle::plan_catchable(g, std::vector<int>(plan.begin(), plan.end()), ocops));
      CHECK_FALSE(engine_catchable(g, plan, cops));
    }
  }
  CHECK(accepted > 100);
}

TEST_CASE("policies only make legal moves against random opponents") {
  struct Case {
    PolicyContext ctx;
    std::vector<std::string> cops;
    std::vector<std::string> robbers;
  };
  std::vector<Case> cases;
  cases.push_back({ctx_of(Family::kHypercube, {3}), {"hypercube_mirror", "greedy_closer", "stationary"}, {"greedy_evader"}});
  cases.push_back({ctx_of(Family::kCycle, {6}), {"guard_start_vertex:2", "greedy_closer"}, {"greedy_evader", "leaf_isolate"}});
  cases.push_back({ctx_of(Family::kGrid, {2, 11}, 2), {"grid2xn_cop", "greedy_closer"},
                   {"corner_isolate", "gap_isolate:5", "greedy_evader"}});
  cases.push_back({ctx_of(Family::kGrid, {6, 7}), {"greedy_closer"}, {"corner_isolate", "border_isolate:3,0"}});
  cases.push_back({ctx_of(Family::kTorus, {11, 11}), {"greedy_closer"}, {"degree4_isolate:5,5", "greedy_evader"}});
  cases.push_back({ctx_of(Family::kTorus, {8, 7}), {"torus_placement"}, {"greedy_evader"}});
  cases.push_back({ctx_of(Family::kGrid, {9, 8}), {"grid_placement"}, {"greedy_evader"}});
  cases.push_back({ctx_of(Family::kCaptureFamily, {2, 3}), {"greedy_closer"}, {"eulerian_stall:2,3"}});
  cases.push_back({ctx_of(Family::kStalemate, {}), {"stationary"}, {"stalemate_policy"}});
  cases.push_back({ctx_of(Family::kSpider, {3, 3, 2}), {"greedy_closer"}, {"leaf_isolate"}});
  for (const auto& cs : cases) {
    const Graph& g = cs.ctx.graph;
    const int rounds = g.edge_count() * g.vertex_count();
    for (unsigned seed = 1; seed <= 25; ++seed) {
      for (const auto& name : cs.cops) {
        CAPTURE(name);
        const auto t = run_match(g, *make_cop_policy(cs.ctx, name), RandomRobber(g, seed), rounds);
        CHECK_NOTHROW(t.replay());
      }
      for (const auto& name : cs.robbers) {
        CAPTURE(name);
        const auto t = run_match(g, RandomCop(g, cs.ctx.cops, seed), *make_robber_policy(cs.ctx, name), rounds);
        CHECK_NOTHROW(t.replay());
      }
    }
  }
}

TEST_CASE("policies are deterministic") {
  const auto c = ctx_of(Family::kGrid, {2, 12}, 2);
  const auto a = run_match(c.graph, *make_cop_policy(c, "grid2xn_cop"), *make_robber_policy(c, "greedy_evader"), 200);
  const auto b = run_match(c.graph, *make_cop_policy(c, "grid2xn_cop"), *make_robber_policy(c, "greedy_evader"), 200);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_json(exhaust_vs_policy(c.graph, *make_cop_policy(c, "grid2xn_cop"))) ==
        to_json(exhaust_vs_policy(c.graph, *make_cop_policy(c, "grid2xn_cop"))));
}

TEST_CASE("guard start vertex on even-degree graphs") {
  for (auto [f, p] : {std::pair{Family::kCycle, std::vector<int>{5}}, {Family::kCycle, {8}}, {Family::kTorus, {3, 3}},
                      {Family::kComplete, {5}}}) {
    const auto c = ctx_of(f, p);
    const auto cop = make_cop_policy(c, "guard_start_vertex");
    ExhaustOptions o;
    o.robber_starts = std::vector<Vertex>{0};
    const auto v = exhaust_vs_policy(c.graph, *cop, o);
    if (!v.policy_wins) {
      REQUIRE(v.counterexample.has_value());
      CHECK_NOTHROW(v.counterexample->replay());
    }
  }
}
