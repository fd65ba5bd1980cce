#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bridgeburn/graph.hpp"

namespace bridgeburn {

enum class Phase : std::uint8_t { kCopTurn, kRobberTurn };

// Full-information position. Cops are kept sorted; several cops may share a vertex.
struct GameState {
  EdgeSet burned;
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Phase phase = Phase::kCopTurn;

  auto operator<=>(const GameState&) const = default;
  bool operator==(const GameState&) const = default;

  // Initial position: nothing burned, cops to move.
  static GameState initial(std::vector<Vertex> cops, Vertex robber);
};

struct GameStateHash {
  std::size_t operator()(const GameState& s) const;
};

// Variant switch: with burning off the robber's moves leave the graph intact
// and the game is ordinary Cops and Robbers.
struct Variant {
  bool burning = true;
  static Variant bridge_burning() { return {true}; }
  static Variant classic() { return {false}; }
};

enum class Actor : std::uint8_t { kCop, kRobber };

struct MoveRecord {
  Actor actor = Actor::kRobber;
  int cop_index = -1;  // index into the sorted cop list before the move
  Vertex from = 0;
  Vertex to = 0;
  std::optional<EdgeId> burned_edge;  // robber moves in the burning variant only

  bool operator==(const MoveRecord&) const = default;
};

// InputError when the graph has more edges than a burned-edge set can hold.
void check_capacity(const Graph& g);

// Checks vertex and edge ranges, sorted cops and the edge-capacity limit.
void validate_state(const Graph& g, const GameState& s);

// Every cop independently stays or crosses one unburned edge; results are
// canonicalized and deduplicated, in ascending order.
std::vector<GameState> cop_successors(const Graph& g, const GameState& s);

// Stay first, then one successor per unburned incident edge in adjacency order.
// Moving onto a cop is legal and yields a captured state.
std::vector<std::pair<GameState, MoveRecord>> robber_successors(const Graph& g, const GameState& s,
                                                                Variant variant = {});

bool is_capture(const GameState& s);

// True iff some cop shares the robber's component once burned edges are removed.
bool robber_component_check(const Graph& g, const GameState& s);

// Applies one cop turn given a target per cop (in sorted-cop order).
// Throws InputError on an illegal move.
GameState apply_cop_turn(const Graph& g, const GameState& s, const std::vector<Vertex>& targets,
                         std::vector<MoveRecord>* records = nullptr);

// Applies one robber turn. Throws InputError on an illegal move.
GameState apply_robber_turn(const Graph& g, const GameState& s, Vertex target, Variant variant = {},
                            MoveRecord* record = nullptr);

struct Outcome {
  enum class Kind { kCopWin, kRobberEscape, kRoundLimit };
  Kind kind = Kind::kRoundLimit;
  int round = 0;       // capture round for kCopWin, rounds played otherwise
  std::string reason;  // kRobberEscape: "isolated" or "cycle"

  bool operator==(const Outcome&) const = default;
};

struct Transcript {
  Graph graph;
  Variant variant;
  GameState initial;
  // Alternating turns, cops first. A cop turn holds one record per cop,
  // a robber turn holds exactly one.
  std::vector<std::vector<MoveRecord>> turns;
  Outcome outcome;

  // Replays every turn from `initial`, checking legality; returns the final state.
  GameState replay() const;
  // Every intermediate state, initial first.
  std::vector<GameState> states() const;
};

nlohmann::json to_json(const GameState& s);
nlohmann::json to_json(const MoveRecord& m);
nlohmann::json to_json(const Outcome& o);
nlohmann::json to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);

}  // namespace bridgeburn
