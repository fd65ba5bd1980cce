#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridgeburn/families.hpp"
#include "bridgeburn/graph.hpp"

namespace bridgeburn {

// Exhaustive search caps vertex count at 64 (bitmask neighborhoods).
inline constexpr int kBoundsMaxVertices = 64;

struct BoundsReport {
  int gamma = 0;
  int gamma2 = 0;
  int clique_cover_dom = 0;
  std::vector<Vertex> gamma_witness;
  std::vector<Vertex> gamma2_witness;
  std::vector<std::vector<Vertex>> clique_witness;
};

// Each minimum is found by increasing-size search; the witness is the
// lexicographically first optimal set. `budget` caps the number of candidate
// sets examined over all three searches (BudgetExceeded when hit).
BoundsReport domination_numbers(const Graph& g, std::uint64_t budget = 10'000'000);

// Every complete vertex subset (including singletons), by exhaustive subset check.
std::vector<std::vector<Vertex>> all_cliques(const Graph& g, std::uint64_t budget = 10'000'000);

struct FamilyFormulaResult {
  std::optional<int> exact;
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<std::int64_t> capture_time_lower;
  std::string source;
};

// Closed-form cop-number values and bounds for named families.
// Throws InputError for families without one (spider).
FamilyFormulaResult family_formula(const FamilySpec& spec);

// Cop number of the prism P2 x C_n, n >= 10.
int prism_formula(int n);

// Initial cop placement (sorted) built by the upper-bound constructions for
// grid(2,n) / grid(n,2), torus(m,n) and grid(m,n) with m,n >= 8.
std::vector<Vertex> placement_generators(const FamilySpec& spec);

nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const FamilyFormulaResult& r);

}  // namespace bridgeburn
