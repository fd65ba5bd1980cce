#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bridgeburn/game.hpp"
#include "bridgeburn/graph.hpp"

namespace bridgeburn {

// Hard limits of the packed state encoding used by the exact solver.
inline constexpr int kSolverMaxVertices = 64;
inline constexpr int kSolverMaxEdges = 64;
inline constexpr int kSolverMaxCops = 9;

struct SolveOptions {
  std::uint64_t budget = 10'000'000;  // cap on explored states, summed over all tasks
  int threads = 0;                    // 0: BRIDGEBURN_THREADS, else hardware concurrency
  bool keep_strategy = false;         // record the cop strategy of the optimal placement
  // Optional vertex relabelings (each a permutation of 0..n-1). Placements that
  // are not lexicographically least in their orbit are skipped. Off when empty.
  std::vector<std::vector<Vertex>> symmetries;
};

enum class Winner { kCop, kRobber };

struct PositionValue {
  Winner winner = Winner::kRobber;
  // Rounds until capture under optimal play. For a cop-turn position the
  // current round counts; for a robber-turn position it does not.
  std::optional<int> rounds;
  std::uint64_t explored_states = 0;
};

// Cop-turn position -> cop targets (sorted), covering every position reachable
// from the optimal placement while the cops follow the strategy.
using CopStrategy = std::map<GameState, std::vector<Vertex>>;

struct SolveResult {
  Winner winner = Winner::kRobber;
  int k = 0;
  std::vector<Vertex> optimal_placement;   // empty when the robber wins
  std::optional<int> capture_time_rounds;  // worst case over robber starts
  std::uint64_t explored_states = 0;
  std::optional<CopStrategy> strategy;
};

// Exact value of one position: least fixed point of the cop attractor over
// the reachable game graph; everything outside it is a robber win.
PositionValue solve_position(const Graph& g, const GameState& s, Variant variant, const SolveOptions& options = {});

// Decides whether k cops can force capture from some initial placement.
// Requires a connected graph and k >= 1.
SolveResult cop_wins_with_k(const Graph& g, int k, Variant variant, const SolveOptions& options = {});

struct CopNumberResult {
  std::optional<int> cop_number;  // nullopt: more than k_max cops are needed
  int k_max = 0;
  std::uint64_t explored_states = 0;
};

CopNumberResult cop_number(const Graph& g, int k_max, Variant variant, const SolveOptions& options = {});
inline CopNumberResult bridge_burning_cop_number(const Graph& g, int k_max, const SolveOptions& options = {}) {
  return cop_number(g, k_max, Variant::bridge_burning(), options);
}

// Worst-case rounds for one cop under optimal play. DomainError unless one cop wins.
SolveResult capture_time_bb(const Graph& g, const SolveOptions& options = {});

// Reusable table for querying values and optimal moves of many positions on
// one graph with a fixed number of cops.
class PositionSolver {
 public:
  PositionSolver(const Graph& g, int k, Variant variant, std::uint64_t budget = 10'000'000);
  ~PositionSolver();
  PositionSolver(PositionSolver&&) noexcept;
  PositionSolver& operator=(PositionSolver&&) noexcept;

  PositionValue evaluate(const GameState& s);
  // Cop targets (sorted) realizing the optimal value from a cop-turn position.
  std::vector<Vertex> best_cop_targets(const GameState& s);
  // Robber target realizing the optimal (longest or escaping) value.
  Vertex best_robber_target(const GameState& s);
  std::uint64_t explored_states() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

int resolve_thread_count(int requested);

nlohmann::json to_json(const SolveResult& r);

}  // namespace bridgeburn
