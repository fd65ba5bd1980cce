#include "bridgeburn/game.hpp"

#include <algorithm>
#include <string>

#include "bridgeburn/graph_io.hpp"

namespace bridgeburn {

GameState GameState::initial(std::vector<Vertex> cops, Vertex robber) {
  std::sort(cops.begin(), cops.end());
  return GameState{EdgeSet{}, std::move(cops), robber, Phase::kCopTurn};
}

std::size_t GameStateHash::operator()(const GameState& s) const {
  std::size_t h = s.burned.hash();
  for (Vertex c : s.cops) h = h * 1000003u ^ static_cast<std::size_t>(c);
  h = h * 1000003u ^ static_cast<std::size_t>(s.robber);
  return h * 31u + static_cast<std::size_t>(s.phase);
}

void check_capacity(const Graph& g) {
  if (g.edge_count() > EdgeSet::kCapacity)
    throw InputError("graph has " + std::to_string(g.edge_count()) + " edges; games support at most " +
                     std::to_string(EdgeSet::kCapacity));
}

void validate_state(const Graph& g, const GameState& s) {
  check_capacity(g);
  if (!g.valid_vertex(s.robber)) throw InputError("robber on invalid vertex " + std::to_string(s.robber));
  for (Vertex c : s.cops)
    if (!g.valid_vertex(c)) throw InputError("cop on invalid vertex " + std::to_string(c));
  if (!std::is_sorted(s.cops.begin(), s.cops.end())) throw InputError("cop positions must be sorted");
  for (EdgeId e : s.burned.elements())
    if (e >= g.edge_count()) throw InputError("burned edge id " + std::to_string(e) + " out of range");
}

bool is_capture(const GameState& s) {
  return std::find(s.cops.begin(), s.cops.end(), s.robber) != s.cops.end();
}

std::vector<GameState> cop_successors(const Graph& g, const GameState& s) {
  check_capacity(g);
  if (s.phase != Phase::kCopTurn) throw InputError("cop_successors: not the cops' turn");
  if (is_capture(s)) throw InputError("cop_successors: robber already captured");

  // Options per cop: stay, then each unburned neighbor.
  std::vector<std::vector<Vertex>> options;
  options.reserve(s.cops.size());
  for (Vertex c : s.cops) {
    std::vector<Vertex> opts{c};
    for (const auto& nb : g.neighbors(c))
      if (!s.burned.contains(nb.edge)) opts.push_back(nb.vertex);
    options.push_back(std::move(opts));
  }

  std::vector<GameState> out;
  std::vector<std::size_t> idx(s.cops.size(), 0);
  GameState next{s.burned, s.cops, s.robber, Phase::kRobberTurn};
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) next.cops[i] = options[i][idx[i]];
    GameState canon = next;
    std::sort(canon.cops.begin(), canon.cops.end());
    out.push_back(std::move(canon));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<GameState, MoveRecord>> robber_successors(const Graph& g, const GameState& s,
                                                                Variant variant) {
  check_capacity(g);
  if (s.phase != Phase::kRobberTurn) throw InputError("robber_successors: not the robber's turn");
  if (is_capture(s)) throw InputError("robber_successors: robber already captured");
  std::vector<std::pair<GameState, MoveRecord>> out;
  GameState stay{s.burned, s.cops, s.robber, Phase::kCopTurn};
  out.emplace_back(std::move(stay), MoveRecord{Actor::kRobber, -1, s.robber, s.robber, std::nullopt});
  for (const auto& nb : g.neighbors(s.robber)) {
    if (s.burned.contains(nb.edge)) continue;
    GameState next{s.burned, s.cops, nb.vertex, Phase::kCopTurn};
    MoveRecord rec{Actor::kRobber, -1, s.robber, nb.vertex, std::nullopt};
    if (variant.burning) {
      next.burned.insert(nb.edge);
      rec.burned_edge = nb.edge;
    }
    out.emplace_back(std::move(next), rec);
  }
  return out;
}

bool robber_component_check(const Graph& g, const GameState& s) {
  const auto dist = bfs_distances(g, s.robber, s.burned);
  return std::any_of(s.cops.begin(), s.cops.end(),
                     [&](Vertex c) { return dist[static_cast<std::size_t>(c)] != kUnreachable; });
}

GameState apply_cop_turn(const Graph& g, const GameState& s, const std::vector<Vertex>& targets,
                         std::vector<MoveRecord>* records) {
  check_capacity(g);
  if (s.phase != Phase::kCopTurn) throw InputError("not the cops' turn");
  if (targets.size() != s.cops.size())
    throw InputError("expected " + std::to_string(s.cops.size()) + " cop targets, got " +
                     std::to_string(targets.size()));
  GameState next{s.burned, targets, s.robber, Phase::kRobberTurn};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Vertex from = s.cops[i], to = targets[i];
    if (!g.valid_vertex(to)) throw InputError("cop target " + std::to_string(to) + " is not a vertex");
    if (from != to) {
      const auto e = g.edge_between(from, to);
      if (!e) throw InputError("cop cannot move " + std::to_string(from) + "->" + std::to_string(to) + ": not adjacent");
      if (s.burned.contains(*e))
        throw InputError("cop cannot move " + std::to_string(from) + "->" + std::to_string(to) + ": edge burned");
    }
    if (records) records->push_back({Actor::kCop, static_cast<int>(i), from, to, std::nullopt});
  }
  std::sort(next.cops.begin(), next.cops.end());
  return next;
}

GameState apply_robber_turn(const Graph& g, const GameState& s, Vertex target, Variant variant,
                            MoveRecord* record) {
  check_capacity(g);
  if (s.phase != Phase::kRobberTurn) throw InputError("not the robber's turn");
  GameState next{s.burned, s.cops, target, Phase::kCopTurn};
  MoveRecord rec{Actor::kRobber, -1, s.robber, target, std::nullopt};
  if (target != s.robber) {
    const auto e = g.edge_between(s.robber, target);
    if (!e)
      throw InputError("robber cannot move " + std::to_string(s.robber) + "->" + std::to_string(target) +
                       ": not adjacent");
    if (s.burned.contains(*e))
      throw InputError("robber cannot move " + std::to_string(s.robber) + "->" + std::to_string(target) +
                       ": edge burned");
    if (variant.burning) {
      next.burned.insert(*e);
      rec.burned_edge = *e;
    }
  }
  if (record) *record = rec;
  return next;
}

std::vector<GameState> Transcript::states() const {
  std::vector<GameState> out{initial};
  GameState cur = initial;
  for (const auto& turn : turns) {
    if (turn.empty()) throw InputError("transcript: empty turn");
    if (turn.front().actor == Actor::kCop) {
      std::vector<Vertex> targets(cur.cops.size());
      if (turn.size() != cur.cops.size()) throw InputError("transcript: cop turn has wrong number of moves");
      for (const auto& m : turn) {
        if (m.actor != Actor::kCop || m.cop_index < 0 || m.cop_index >= static_cast<int>(targets.size()) ||
            cur.cops[static_cast<std::size_t>(m.cop_index)] != m.from)
          throw InputError("transcript: cop move does not match the position");
        targets[static_cast<std::size_t>(m.cop_index)] = m.to;
      }
      cur = apply_cop_turn(graph, cur, targets);
    } else {
      if (turn.size() != 1 || turn.front().from != cur.robber)
        throw InputError("transcript: robber move does not match the position");
      MoveRecord rec;
      cur = apply_robber_turn(graph, cur, turn.front().to, variant, &rec);
      if (rec.burned_edge != turn.front().burned_edge) throw InputError("transcript: burned edge mismatch");
    }
    out.push_back(cur);
  }
  return out;
}

GameState Transcript::replay() const { return states().back(); }

nlohmann::json to_json(const GameState& s) {
  return {{"burned", s.burned.elements()},
          {"cops", s.cops},
          {"robber", s.robber},
          {"phase", s.phase == Phase::kCopTurn ? "cop" : "robber"}};
}

nlohmann::json to_json(const MoveRecord& m) {
  nlohmann::json j;
  if (m.actor == Actor::kCop) {
    j = {{"actor", "cop"}, {"cop", m.cop_index}, {"from", m.from}, {"to", m.to}};
  } else {
    j = {{"actor", "robber"}, {"from", m.from}, {"to", m.to}};
    j["burned"] = m.burned_edge ? nlohmann::json(*m.burned_edge) : nlohmann::json(nullptr);
  }
  return j;
}

nlohmann::json to_json(const Outcome& o) {
  switch (o.kind) {
    case Outcome::Kind::kCopWin:
      return {{"type", "cop_win"}, {"round", o.round}};
    case Outcome::Kind::kRobberEscape:
      return {{"type", "robber_escape"}, {"round", o.round}, {"reason", o.reason}};
    case Outcome::Kind::kRoundLimit:
      break;
  }
  return {{"type", "round_limit"}, {"round", o.round}};
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json turns = nlohmann::json::array();
  for (const auto& turn : t.turns)
    for (const auto& m : turn) turns.push_back(to_json(m));
  return {{"graph", to_json(t.graph)},
          {"variant", t.variant.burning ? "bb" : "classic"},
          {"cops0", t.initial.cops},
          {"robber0", t.initial.robber},
          {"turns", turns},
          {"outcome", to_json(t.outcome)}};
}

Transcript transcript_from_json(const nlohmann::json& j) {
  try {
    Transcript t;
    t.graph = graph_from_json(j.at("graph"));
    t.variant.burning = j.value("variant", std::string("bb")) != "classic";
    t.initial = GameState::initial(j.at("cops0").get<std::vector<Vertex>>(), j.at("robber0").get<Vertex>());
    const std::size_t k = t.initial.cops.size();
    std::vector<MoveRecord> pending;
    for (const auto& m : j.at("turns")) {
      MoveRecord rec;
      rec.from = m.at("from").get<Vertex>();
      rec.to = m.at("to").get<Vertex>();
      if (m.at("actor").get<std::string>() == "cop") {
        rec.actor = Actor::kCop;
        rec.cop_index = m.at("cop").get<int>();
        pending.push_back(rec);
        if (pending.size() == k) {
          t.turns.push_back(std::move(pending));
          pending.clear();
        }
      } else {
        if (!pending.empty()) throw InputError("transcript json: incomplete cop turn");
        rec.actor = Actor::kRobber;
        if (m.contains("burned") && !m.at("burned").is_null()) rec.burned_edge = m.at("burned").get<EdgeId>();
        t.turns.push_back({rec});
      }
    }
    if (!pending.empty()) throw InputError("transcript json: incomplete cop turn");
    const auto& o = j.at("outcome");
    const auto type = o.at("type").get<std::string>();
    t.outcome.round = o.value("round", 0);
    if (type == "cop_win") {
      t.outcome.kind = Outcome::Kind::kCopWin;
    } else if (type == "robber_escape") {
      t.outcome.kind = Outcome::Kind::kRobberEscape;
      t.outcome.reason = o.value("reason", std::string());
    } else if (type == "round_limit") {
      t.outcome.kind = Outcome::Kind::kRoundLimit;
    } else {
      throw InputError("transcript json: unknown outcome '" + type + "'");
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("transcript json: ") + ex.what());
  }
}

}  // namespace bridgeburn
