#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bridgeburn/families.hpp"
#include "bridgeburn/game.hpp"
#include "bridgeburn/graph.hpp"

namespace bridgeburn {

enum class Side { kCop, kRobber };

// Everything a policy remembers between its own turns. Policies are immutable;
// the arena threads this value through, so a policy's choice is a pure
// function of (state, memory) and the search can key on it.
using PolicyMemory = std::vector<std::int32_t>;

struct CopOpening {
  std::vector<Vertex> cops;  // sorted
  PolicyMemory memory;
};

struct CopDecision {
  std::vector<Vertex> targets;  // one per cop, aligned with the sorted cops of the state
  PolicyMemory memory;
};

struct RobberOpening {
  Vertex robber = 0;
  PolicyMemory memory;
};

struct RobberDecision {
  Vertex target = 0;  // current vertex to stay
  PolicyMemory memory;
};

class CopPolicy {
 public:
  virtual ~CopPolicy() = default;
  virtual std::string name() const = 0;
  virtual CopOpening place() const = 0;
  virtual CopDecision choose(const GameState& s, const PolicyMemory& memory) const = 0;
};

class RobberPolicy {
 public:
  virtual ~RobberPolicy() = default;
  virtual std::string name() const = 0;
  virtual RobberOpening place(const std::vector<Vertex>& cops) const = 0;
  virtual RobberDecision choose(const GameState& s, const PolicyMemory& memory) const = 0;
};

// What a policy may know about the board. Coordinate-based policies need the
// family (grid or torus) and check that it generates `graph`.
struct PolicyContext {
  Graph graph;
  std::optional<FamilySpec> family;
  int cops = 1;  // team size for policies whose placement is not fixed by the family
  Variant variant;
};

// Policies by "name" or "name:p1,p2,...". Throws InputError for unknown names,
// bad parameters, or when the policy does not apply to the graph.
std::unique_ptr<CopPolicy> make_cop_policy(const PolicyContext& ctx, std::string_view spec);
std::unique_ptr<RobberPolicy> make_robber_policy(const PolicyContext& ctx, std::string_view spec);
std::optional<Side> policy_side(std::string_view spec);
std::vector<std::string> policy_names(Side side);

// Plays one game. Placement: cops first, then the robber, who sees them.
// Ends on capture, on the robber being cut off from every cop ("isolated"),
// on a repeated (position, memories) triple ("cycle"), or after max_rounds.
// Throws PolicyError naming the policy on an illegal move.
Transcript run_match(const Graph& g, const CopPolicy& cop, const RobberPolicy& robber, int max_rounds,
                     Variant variant = {});

struct ExhaustOptions {
  int cops = 1;  // free cop team size when the robber is fixed
  // Restrict the free side's placements; all placements when absent.
  std::optional<std::vector<std::vector<Vertex>>> cop_placements;
  std::optional<std::vector<Vertex>> robber_starts;
  std::uint64_t budget = 10'000'000;
  Variant variant;
};

struct Verdict {
  bool policy_wins = false;
  std::optional<Transcript> counterexample;  // present iff the policy was beaten
  std::uint64_t nodes_searched = 0;
  // Fixed cop that wins: the worst capture round over all robber play.
  // Fixed robber that is beaten: the earliest round any cop play captures him.
  std::optional<int> capture_round;
};

// Searches every move and placement of the free side against the fixed
// policy. A fixed cop is beaten by any isolation or any repetition of
// (position, memory); a fixed robber is beaten by any capture.
Verdict exhaust_vs_policy(const Graph& g, const CopPolicy& fixed, const ExhaustOptions& options = {});
Verdict exhaust_vs_policy(const Graph& g, const RobberPolicy& fixed, const ExhaustOptions& options = {});

// The distance-safety hypothesis: `plan` lists the robber's positions, start
// first; with d_i the original-graph distance from v after move i, require
// i + d_i < d for every position but the last, and every cop farther than d
// from v. Throws InputError when plan is not a walk (repeats allowed).
bool robber_distance_safe(const Graph& g, Vertex v, int d, const std::vector<Vertex>& plan,
                          const std::vector<Vertex>& cops);

nlohmann::json to_json(const Verdict& v);

}  // namespace bridgeburn
