#include <doctest.h>

#include <random>
#include <set>

#include "bridgeburn/families.hpp"
#include "bridgeburn/game.hpp"

using namespace bridgeburn;

namespace {

std::set<std::vector<Vertex>> cop_sets(const std::vector<GameState>& states) {
  std::set<std::vector<Vertex>> out;
  for (const auto& s : states) out.insert(s.cops);
  return out;
}

GameState robber_turn(std::vector<Vertex> cops, Vertex r) {
  auto s = GameState::initial(std::move(cops), r);
  s.phase = Phase::kRobberTurn;
  return s;
}

// Random legal play; returns the transcript and checks invariants as it goes.
Transcript random_play(const Graph& g, int k, std::mt19937& rng, int rounds) {
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  std::vector<Vertex> cops;
  for (int i = 0; i < k; ++i) cops.push_back(pick(rng));
  std::sort(cops.begin(), cops.end());
  Transcript t{g, Variant::bridge_burning(), GameState::initial(cops, pick(rng)), {}, {}};
  GameState s = t.initial;
  for (int round = 1; round <= rounds && !is_capture(s); ++round) {
    std::vector<Vertex> targets;
    for (Vertex c : s.cops) {
      std::vector<Vertex> options{c};
      for (const auto& nb : g.neighbors(c))
        if (!s.burned.contains(nb.edge)) options.push_back(nb.vertex);
      targets.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    std::vector<MoveRecord> recs;
    const auto after = apply_cop_turn(g, s, targets, &recs);
    CHECK(after.burned == s.burned);
    s = after;
    t.turns.push_back(recs);
    if (is_capture(s)) break;
    const auto succ = robber_successors(g, s, t.variant);
    const auto& [next, rec] = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
    CHECK(s.burned.subset_of(next.burned));
    CHECK(next.burned.size() - s.burned.size() == (rec.from == rec.to ? 0 : 1));
    CHECK(rec.burned_edge.has_value() == (rec.from != rec.to));
    s = next;
    t.turns.push_back({rec});
  }
  return t;
}

}  // namespace

TEST_CASE("cop successors") {
  const auto p3 = generate(FamilySpec{Family::kPath, {3}});
  CHECK(cop_sets(cop_successors(p3, GameState::initial({0}, 2))) == std::set<std::vector<Vertex>>{{0}, {1}});

  auto burned = GameState::initial({0}, 2);
  burned.burned.insert(*p3.edge_between(0, 1));
  CHECK(cop_sets(cop_successors(p3, burned)) == std::set<std::vector<Vertex>>{{0}});

  // Two cops on C4 at {0,0}: pairs drawn from {0,1,3}, canonicalized.
  const auto c4 = generate(FamilySpec{Family::kCycle, {4}});
  std::set<std::vector<Vertex>> expected;
  for (Vertex a : {0, 1, 3})
    for (Vertex b : {0, 1, 3}) expected.insert({std::min(a, b), std::max(a, b)});
  const auto succ = cop_successors(c4, GameState::initial({0, 0}, 2));
  CHECK(cop_sets(succ) == expected);
  CHECK(succ.size() == expected.size());
  for (const auto& s : succ) {
    CHECK(s.phase == Phase::kRobberTurn);
    CHECK(s.burned.empty());
  }
  CHECK_THROWS_AS(cop_successors(c4, robber_turn({0}, 2)), InputError);
}

TEST_CASE("robber successors") {
  const auto p6 = generate(FamilySpec{Family::kPath, {6}});
  const auto succ = robber_successors(p6, robber_turn({4}, 1));
  REQUIRE(succ.size() == 3);
  CHECK(succ[0].first.robber == 1);
  CHECK(succ[0].first.burned.empty());
  const auto to_end = std::find_if(succ.begin(), succ.end(), [](const auto& p) { return p.first.robber == 0; });
  REQUIRE(to_end != succ.end());
  CHECK(to_end->first.burned.contains(*p6.edge_between(0, 1)));
  CHECK(to_end->second.burned_edge == p6.edge_between(0, 1));
  CHECK_FALSE(robber_component_check(p6, to_end->first));
  CHECK(to_end->first.phase == Phase::kCopTurn);

  auto stuck = robber_turn({3}, 0);
  stuck.burned.insert(*p6.edge_between(0, 1));
  CHECK(robber_successors(p6, stuck).size() == 1);

  const auto c3 = generate(FamilySpec{Family::kCycle, {3}});
  bool captured = false;
  for (const auto& [s, rec] : robber_successors(c3, robber_turn({1}, 0)))
    if (rec.to == 1) captured = is_capture(s);
  CHECK(captured);

  const auto classic = robber_successors(p6, robber_turn({4}, 1), Variant::classic());
  for (const auto& [s, rec] : classic) {
    CHECK(s.burned.empty());
    CHECK_FALSE(rec.burned_edge.has_value());
  }
}

TEST_CASE("capture and component checks") {
  CHECK(is_capture(GameState::initial({2, 5}, 5)));
  CHECK_FALSE(is_capture(GameState::initial({2}, 3)));
  CHECK(is_capture(GameState::initial({4, 4}, 4)));

  const auto p6 = generate(FamilySpec{Family::kPath, {6}});
  CHECK(robber_component_check(p6, GameState::initial({3}, 0)));

  const auto st = generate(FamilySpec{Family::kStalemate, {}});
  auto s = robber_turn({0}, 3);
  s = apply_robber_turn(st, s, 5);
  CHECK_FALSE(robber_component_check(st, s));
}

TEST_CASE("illegal moves and malformed states are rejected") {
  const auto p4 = generate(FamilySpec{Family::kPath, {4}});
  CHECK_THROWS_AS(apply_cop_turn(p4, GameState::initial({0}, 3), {2}), InputError);
  CHECK_THROWS_AS(apply_cop_turn(p4, GameState::initial({0}, 3), {0, 1}), InputError);
  CHECK_THROWS_AS(apply_robber_turn(p4, robber_turn({0}, 3), 1), InputError);
  CHECK_THROWS_AS(validate_state(p4, GameState::initial({7}, 1)), InputError);
  GameState unsorted = GameState::initial({0, 2}, 1);
  unsorted.cops = {2, 0};
  CHECK_THROWS_AS(validate_state(p4, unsorted), InputError);
}

TEST_CASE("random play keeps the burn and replay invariants") {
  std::mt19937 rng(5);
  const std::vector<FamilySpec> boards{{Family::kGrid, {3, 4}}, {Family::kStalemate, {}}, {Family::kHypercube, {3}},
                                       {Family::kCaptureFamily, {2, 2}}, {Family::kTorus, {3, 4}}};
  for (const auto& spec : boards) {
    const auto g = generate(spec);
    for (int t = 0; t < 30; ++t) {
      const auto tr = random_play(g, 1 + t % 3, rng, 40);
      const auto states = tr.states();
      REQUIRE(states.size() == tr.turns.size() + 1);
      int robber_moves = 0;
      for (std::size_t i = 1; i < states.size(); ++i) {
        CHECK(states[i - 1].burned.subset_of(states[i].burned));
        CHECK(states[i].burned.size() - states[i - 1].burned.size() <= 1);
        if (tr.turns[i - 1].front().actor == Actor::kRobber && tr.turns[i - 1].front().from != tr.turns[i - 1].front().to)
          ++robber_moves;
      }
      CHECK(robber_moves <= g.edge_count());
      CHECK(states.back().burned.size() == robber_moves);
      CHECK(tr.replay() == states.back());
      const auto back = transcript_from_json(to_json(tr));
      CHECK(back.replay() == tr.replay());
      CHECK(to_json(back).dump() == to_json(tr).dump());
    }
  }
}
