#include "bridgeburn/solver.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <thread>

namespace bridgeburn {
namespace {

// Packed position: burned edges as a 64-bit mask, and a second word holding
// phase (bit 0), robber (bits 1-6) and the sorted cops (6 bits each from bit 7).
struct Key {
  std::uint64_t burned = 0;
  std::uint64_t pos = 0;

  bool operator==(const Key&) const = default;
  template <typename H>
  friend H AbslHashValue(H h, const Key& k) {
    return H::combine(std::move(h), k.burned, k.pos);
  }
};

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
constexpr int kCopShift = 7;
constexpr std::uint64_t kSixBits = 63;

enum class Kind : std::uint8_t { kInner, kTerminal };

struct Node {
  std::uint32_t plies = kInf;
  std::uint16_t successors = 0;
  std::uint16_t pending = 0;
  Kind kind = Kind::kInner;
};

using CopArray = std::array<int, kSolverMaxCops>;

bool robber_turn(const Key& key) { return key.pos & 1u; }
int robber_of(const Key& key) { return static_cast<int>((key.pos >> 1) & kSixBits); }
std::uint64_t cop_field(const Key& key) { return key.pos >> kCopShift; }

void decode_cops(std::uint64_t field, int k, CopArray& cops) {
  for (int i = 0; i < k; ++i) cops[static_cast<std::size_t>(i)] = static_cast<int>((field >> (6 * i)) & kSixBits);
}

std::uint64_t encode_cops(const int* cops, int k) {
  std::uint64_t field = 0;
  for (int i = 0; i < k; ++i) field |= static_cast<std::uint64_t>(cops[i]) << (6 * i);
  return field;
}

Key make_key(std::uint64_t burned, int robber, std::uint64_t copfield, bool robbers_turn) {
  return Key{burned, (copfield << kCopShift) | (static_cast<std::uint64_t>(robber) << 1) | (robbers_turn ? 1u : 0u)};
}

int plies_to_rounds(std::uint32_t plies, bool robbers_turn) {
  return robbers_turn ? static_cast<int>(plies / 2) : static_cast<int>((plies + 1) / 2);
}

void check_limits(const Graph& g, int k) {
  if (g.vertex_count() > kSolverMaxVertices)
    throw InputError("exact solver supports at most " + std::to_string(kSolverMaxVertices) + " vertices");
  if (g.edge_count() > kSolverMaxEdges)
    throw InputError("exact solver supports at most " + std::to_string(kSolverMaxEdges) + " edges");
  if (k < 1 || k > kSolverMaxCops)
    throw InputError("cop count must be in [1, " + std::to_string(kSolverMaxCops) + "]");
}

// One reachable game graph with its attractor values. Owned by a single task.
class Table {
 public:
  Table(const Graph& g, int k, Variant variant, std::atomic<std::uint64_t>* explored, std::uint64_t budget)
      : n_(g.vertex_count()), k_(k), burning_(variant.burning), explored_(explored), budget_(budget) {
    adjacency_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v)
      for (const auto& nb : g.neighbors(v))
        adjacency_[static_cast<std::size_t>(v)].push_back({nb.vertex, std::uint64_t{1} << nb.edge});
  }

  Key key_of(const GameState& s) const {
    return make_key(s.burned.word(0), s.robber, encode_cops(s.cops.data(), k_), s.phase == Phase::kRobberTurn);
  }

  GameState state_of(const Key& key) const {
    GameState s;
    s.burned.set_word(0, key.burned);
    CopArray cops{};
    decode_cops(cop_field(key), k_, cops);
    s.cops.assign(cops.begin(), cops.begin() + k_);
    s.robber = robber_of(key);
    s.phase = robber_turn(key) ? Phase::kRobberTurn : Phase::kCopTurn;
    return s;
  }

  // Adds a root and everything reachable from it. Values are stale until solve().
  void explore(const Key& root) {
    discover(root);
    while (!stack_.empty()) {
      const Key key = stack_.back();
      stack_.pop_back();
      expand(key);
    }
  }

  void solve() {
    std::vector<Key> queue;
    for (auto& [key, node] : nodes_) {
      if (node.kind == Kind::kInner) {
        node.plies = kInf;
        node.pending = node.successors;
      } else if (node.plies == 1) {
        queue.push_back(key);
      }
    }
    // FIFO over unit-weight edges: values leave the queue in nondecreasing order.
    std::vector<std::uint64_t> configs;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Key key = queue[head];
      const std::uint32_t value = nodes_.find(key)->second.plies;
      const int r = robber_of(key);
      const std::uint64_t field = cop_field(key);
      if (!robber_turn(key)) {
        auto relax = [&](const Key& pred) {
          auto it = nodes_.find(pred);
          if (it == nodes_.end() || it->second.kind != Kind::kInner || it->second.plies != kInf) return;
          if (--it->second.pending == 0) {
            it->second.plies = value + 1;
            queue.push_back(pred);
          }
        };
        relax(make_key(key.burned, r, field, true));
        CopArray cops{};
        decode_cops(field, k_, cops);
        for (const auto& [r0, bit] : adjacency_[static_cast<std::size_t>(r)]) {
          if (occupied(cops, r0)) continue;
          if (burning_) {
            if (key.burned & bit) relax(make_key(key.burned & ~bit, r0, field, true));
          } else if (!(key.burned & bit)) {
            relax(make_key(key.burned, r0, field, true));
          }
        }
      } else {
        cop_moves(key.burned, field, configs);
        for (std::uint64_t c : configs) {
          auto it = nodes_.find(make_key(key.burned, r, c, false));
          if (it == nodes_.end() || it->second.kind != Kind::kInner || it->second.plies != kInf) continue;
          it->second.plies = value + 1;
          queue.push_back(it->first);
        }
      }
    }
  }

  const Node* find(const Key& key) const {
    auto it = nodes_.find(key);
    return it == nodes_.end() ? nullptr : &it->second;
  }

  std::uint64_t size() const { return nodes_.size(); }

  void cop_moves(std::uint64_t burned, std::uint64_t field, std::vector<std::uint64_t>& out) const {
    out.clear();
    CopArray cops{};
    decode_cops(field, k_, cops);
    std::array<std::array<int, kSolverMaxVertices + 1>, kSolverMaxCops> options{};
    std::array<int, kSolverMaxCops> counts{};
    for (int i = 0; i < k_; ++i) {
      const int c = cops[static_cast<std::size_t>(i)];
      auto& opts = options[static_cast<std::size_t>(i)];
      int cnt = 0;
      opts[static_cast<std::size_t>(cnt++)] = c;
      for (const auto& [w, bit] : adjacency_[static_cast<std::size_t>(c)])
        if (!(burned & bit)) opts[static_cast<std::size_t>(cnt++)] = w;
      counts[static_cast<std::size_t>(i)] = cnt;
    }
    std::array<int, kSolverMaxCops> idx{};
    std::array<int, kSolverMaxCops> conf{};
    while (true) {
      for (int i = 0; i < k_; ++i)
        conf[static_cast<std::size_t>(i)] = options[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      std::sort(conf.begin(), conf.begin() + k_);
      out.push_back(encode_cops(conf.data(), k_));
      int i = 0;
      while (i < k_ && ++idx[static_cast<std::size_t>(i)] == counts[static_cast<std::size_t>(i)]) idx[static_cast<std::size_t>(i++)] = 0;
      if (i == k_) break;
    }
    if (k_ > 1) {
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }

  bool occupied(const CopArray& cops, int v) const {
    for (int i = 0; i < k_; ++i)
      if (cops[static_cast<std::size_t>(i)] == v) return true;
    return false;
  }

  // Some cop is on the robber, or one unburned step away from him.
  bool capture_available(std::uint64_t burned, int r, const CopArray& cops) const {
    if (occupied(cops, r)) return true;
    for (const auto& [w, bit] : adjacency_[static_cast<std::size_t>(r)])
      if (!(burned & bit) && occupied(cops, w)) return true;
    return false;
  }

  // No cop in the robber's component of the graph minus burned edges.
  bool escaped(std::uint64_t burned, int r, const CopArray& cops) const {
    std::uint64_t seen = std::uint64_t{1} << r;
    std::array<int, kSolverMaxVertices> frontier{};
    int top = 0;
    frontier[static_cast<std::size_t>(top++)] = r;
    while (top > 0) {
      const int v = frontier[static_cast<std::size_t>(--top)];
      if (occupied(cops, v)) return false;
      for (const auto& [w, bit] : adjacency_[static_cast<std::size_t>(v)]) {
        if ((burned & bit) || (seen >> w & 1u)) continue;
        seen |= std::uint64_t{1} << w;
        frontier[static_cast<std::size_t>(top++)] = w;
      }
    }
    return true;
  }

 private:
  Node* insert(const Key& key, bool& fresh) {
    auto [it, inserted] = nodes_.try_emplace(key);
    fresh = inserted;
    if (inserted) {
      const std::uint64_t total = explored_->fetch_add(1, std::memory_order_relaxed) + 1;
      if (total > budget_) throw BudgetExceeded("explored-state budget exhausted", total);
    }
    return &it->second;
  }

  void discover(const Key& key) {
    bool fresh = false;
    Node* node = insert(key, fresh);
    if (!fresh) return;
    const int r = robber_of(key);
    CopArray cops{};
    decode_cops(cop_field(key), k_, cops);
    if (occupied(cops, r)) {
      node->kind = Kind::kTerminal;
      node->plies = 0;
      return;
    }
    if (!robber_turn(key)) {
      if (capture_available(key.burned, r, cops)) {
        node->kind = Kind::kTerminal;
        node->plies = 1;
        return;
      }
      if (escaped(key.burned, r, cops)) {
        node->kind = Kind::kTerminal;
        node->plies = kInf;
        return;
      }
    }
    stack_.push_back(key);
  }

  void expand(const Key& key) {
    const int r = robber_of(key);
    const std::uint64_t field = cop_field(key);
    if (robber_turn(key)) {
      CopArray cops{};
      decode_cops(field, k_, cops);
      std::array<Key, kSolverMaxVertices + 1> children{};
      int count = 0;
      children[static_cast<std::size_t>(count++)] = make_key(key.burned, r, field, false);
      for (const auto& [w, bit] : adjacency_[static_cast<std::size_t>(r)]) {
        if ((key.burned & bit) || occupied(cops, w)) continue;
        const std::uint64_t next = burning_ ? (key.burned | bit) : key.burned;
        const Key child = make_key(next, w, field, false);
        const Node* known = find(child);
        const bool loses = known ? (known->kind == Kind::kTerminal && known->plies == kInf)
                                 : escaped(next, w, cops);
        if (loses) {
          // The robber has an escaping move; the rest of this node is irrelevant.
          Node& self = nodes_.find(key)->second;
          self.kind = Kind::kTerminal;
          self.plies = kInf;
          return;
        }
        children[static_cast<std::size_t>(count++)] = child;
      }
      nodes_.find(key)->second.successors = static_cast<std::uint16_t>(count);
      for (int i = 0; i < count; ++i) discover(children[static_cast<std::size_t>(i)]);
    } else {
      std::vector<std::uint64_t> configs;
      cop_moves(key.burned, field, configs);
      for (std::uint64_t c : configs) discover(make_key(key.burned, r, c, true));
    }
  }

  int n_;
  int k_;
  bool burning_;
  std::atomic<std::uint64_t>* explored_;
  std::uint64_t budget_;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> adjacency_;
  absl::flat_hash_map<Key, Node> nodes_;
  std::vector<Key> stack_;
};

PositionValue value_of(const Table& table, const Key& key) {
  const Node* node = table.find(key);
  PositionValue out;
  if (node && node->plies != kInf) {
    out.winner = Winner::kCop;
    out.rounds = plies_to_rounds(node->plies, robber_turn(key));
  }
  out.explored_states = table.size();
  return out;
}

std::vector<std::vector<Vertex>> all_placements(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    const Vertex next = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k; ++j) cur[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

// Closes the supplied permutations under composition.
std::vector<std::vector<Vertex>> permutation_group(const std::vector<std::vector<Vertex>>& gens, int n) {
  std::vector<Vertex> identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
  for (const auto& p : gens) {
    std::vector<Vertex> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity) throw InputError("symmetry is not a permutation of the vertices");
  }
  std::vector<std::vector<Vertex>> group{identity};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& gen : gens) {
      std::vector<Vertex> comp(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v)
        comp[static_cast<std::size_t>(v)] = gen[static_cast<std::size_t>(group[i][static_cast<std::size_t>(v)])];
      if (std::find(group.begin(), group.end(), comp) == group.end()) group.push_back(std::move(comp));
      if (group.size() > 100000) throw InputError("symmetry group too large");
    }
  }
  return group;
}

bool orbit_least(const std::vector<Vertex>& placement, const std::vector<std::vector<Vertex>>& group) {
  std::vector<Vertex> image(placement.size());
  for (const auto& perm : group) {
    for (std::size_t i = 0; i < placement.size(); ++i)
      image[i] = perm[static_cast<std::size_t>(placement[i])];
    std::sort(image.begin(), image.end());
    if (image < placement) return false;
  }
  return true;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers; rethrows the
// exception of the lowest failing index.
template <typename Fn>
void parallel_for(int count, int threads, Fn fn) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, count); ++t) {
      pool.emplace_back([&] {
        for (int i = next++; i < count && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
            failed = true;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Robber starts are processed in fixed-size batches; placements refuted by an
// earlier batch are dropped from later ones. The batch size is a constant so
// the explored-state count does not depend on the thread count.
constexpr int kStartBatch = 4;

CopStrategy extract_strategy(const Graph& g, int k, Variant variant, const std::vector<Vertex>& placement,
                             std::uint64_t budget) {
  std::atomic<std::uint64_t> explored{0};
  Table table(g, k, variant, &explored, budget);
  std::vector<Key> roots;
  CopArray cops{};
  for (int i = 0; i < k; ++i) cops[static_cast<std::size_t>(i)] = placement[static_cast<std::size_t>(i)];
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (table.occupied(cops, r)) continue;
    roots.push_back(table.key_of(GameState::initial(placement, r)));
    table.explore(roots.back());
  }
  table.solve();

  CopStrategy strategy;
  std::vector<Key> stack = roots;
  absl::flat_hash_map<Key, bool> visited;
  std::vector<std::uint64_t> configs;
  while (!stack.empty()) {
    const Key key = stack.back();
    stack.pop_back();
    if (!visited.try_emplace(key, true).second) continue;
    const Node* node = table.find(key);
    if (!node || node->plies == kInf || node->plies == 0) continue;
    const int r = robber_of(key);
    // Best cop reply: the capturing move if any, else the successor of least value.
    table.cop_moves(key.burned, cop_field(key), configs);
    std::uint64_t best = 0;
    std::uint32_t best_value = kInf;
    for (std::uint64_t c : configs) {
      CopArray next{};
      decode_cops(c, k, next);
      if (table.occupied(next, r)) {
        best = c;
        best_value = 0;
        break;
      }
      const Node* child = table.find(make_key(key.burned, r, c, true));
      if (child && child->plies < best_value) {
        best_value = child->plies;
        best = c;
      }
    }
    const Key chosen = make_key(key.burned, r, best, true);
    const GameState state = table.state_of(key);
    strategy.emplace(state, table.state_of(chosen).cops);
    if (best_value == 0) continue;
    CopArray next{};
    decode_cops(best, k, next);
    for (const auto& nb : g.neighbors(r)) {
      if (variant.burning && (key.burned >> nb.edge & 1u)) continue;
      if (!variant.burning && (key.burned >> nb.edge & 1u)) continue;
      if (table.occupied(next, nb.vertex)) continue;
      const std::uint64_t burned = variant.burning ? (key.burned | (std::uint64_t{1} << nb.edge)) : key.burned;
      stack.push_back(make_key(burned, nb.vertex, best, false));
    }
    stack.push_back(make_key(key.burned, r, best, false));
  }
  return strategy;
}

}  // namespace

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BRIDGEBURN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

PositionValue solve_position(const Graph& g, const GameState& s, Variant variant, const SolveOptions& options) {
  check_limits(g, static_cast<int>(s.cops.size()));
  validate_state(g, s);
  std::atomic<std::uint64_t> explored{0};
  Table table(g, static_cast<int>(s.cops.size()), variant, &explored, options.budget);
  const Key root = table.key_of(s);
  table.explore(root);
  table.solve();
  return value_of(table, root);
}

SolveResult cop_wins_with_k(const Graph& g, int k, Variant variant, const SolveOptions& options) {
  if (k < 1) throw InputError("cop count must be positive");
  check_limits(g, k);
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph must be connected");

  const int n = g.vertex_count();
  auto placements = all_placements(n, k);
  if (!options.symmetries.empty()) {
    const auto group = permutation_group(options.symmetries, n);
    std::erase_if(placements, [&](const auto& p) { return !orbit_least(p, group); });
  }
  const auto np = placements.size();
  std::vector<char> alive(np, 1);
  std::vector<int> worst(np, 0);

  std::vector<Vertex> starts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) starts[static_cast<std::size_t>(v)] = v;
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

  std::atomic<std::uint64_t> explored{0};
  const int threads = resolve_thread_count(options.threads);

  for (std::size_t b = 0; b < starts.size(); b += kStartBatch) {
    if (std::find(alive.begin(), alive.end(), 1) == alive.end()) break;
    const int batch = static_cast<int>(std::min<std::size_t>(kStartBatch, starts.size() - b));
    // Per start: rounds per placement (-1 = robber escapes, -2 = not a start).
    std::vector<std::vector<int>> rounds(static_cast<std::size_t>(batch), std::vector<int>(np, -2));
    parallel_for(batch, threads, [&](int t) {
      const Vertex r = starts[b + static_cast<std::size_t>(t)];
      Table table(g, k, variant, &explored, options.budget);
      std::vector<std::pair<std::size_t, Key>> roots;
      for (std::size_t p = 0; p < np; ++p) {
        if (!alive[p]) continue;
        const auto& pl = placements[p];
        if (std::find(pl.begin(), pl.end(), r) != pl.end()) continue;
        roots.emplace_back(p, table.key_of(GameState::initial(pl, r)));
        table.explore(roots.back().second);
      }
      table.solve();
      auto& out = rounds[static_cast<std::size_t>(t)];
      for (const auto& [p, key] : roots) {
        const auto v = value_of(table, key);
        out[p] = v.rounds ? *v.rounds : -1;
      }
    });
    for (const auto& per_start : rounds)
      for (std::size_t p = 0; p < np; ++p) {
        if (!alive[p] || per_start[p] == -2) continue;
        if (per_start[p] == -1)
          alive[p] = 0;
        else
          worst[p] = std::max(worst[p], per_start[p]);
      }
  }

  SolveResult result;
  result.k = k;
  result.explored_states = explored.load();
  std::optional<std::size_t> best;
  for (std::size_t p = 0; p < np; ++p)
    if (alive[p] && (!best || worst[p] < worst[*best])) best = p;
  if (!best) return result;
  result.winner = Winner::kCop;
  result.optimal_placement = placements[*best];
  result.capture_time_rounds = worst[*best];
  if (options.keep_strategy)
    result.strategy = extract_strategy(g, k, variant, result.optimal_placement, options.budget);
  return result;
}

CopNumberResult cop_number(const Graph& g, int k_max, Variant variant, const SolveOptions& options) {
  if (k_max < 1) throw InputError("k_max must be positive");
  CopNumberResult out;
  out.k_max = k_max;
  SolveOptions opts = options;
  opts.keep_strategy = false;
  for (int k = 1; k <= k_max; ++k) {
    if (opts.budget <= out.explored_states) throw BudgetExceeded("explored-state budget exhausted", out.explored_states);
    opts.budget = options.budget - out.explored_states;
    const auto r = cop_wins_with_k(g, k, variant, opts);
    out.explored_states += r.explored_states;
    if (r.winner == Winner::kCop) {
      out.cop_number = k;
      break;
    }
  }
  return out;
}

SolveResult capture_time_bb(const Graph& g, const SolveOptions& options) {
  auto r = cop_wins_with_k(g, 1, Variant::bridge_burning(), options);
  if (r.winner != Winner::kCop)
    throw DomainError("capture time is defined only when one cop wins (bridge-burning cop number is not 1)");
  return r;
}

struct PositionSolver::Impl {
  Graph graph;
  int k;
  Variant variant;
  std::atomic<std::uint64_t> explored{0};
  std::uint64_t budget;
  Table table;
  Impl(const Graph& g, int k_, Variant v, std::uint64_t b)
      : graph(g), k(k_), variant(v), budget(b), table(graph, k_, v, &explored, b) {}

  Key ensure(const GameState& s) {
    validate_state(graph, s);
    if (static_cast<int>(s.cops.size()) != k) throw InputError("position has the wrong number of cops");
    const Key key = table.key_of(s);
    const auto before = table.size();
    table.explore(key);
    if (table.size() != before) table.solve();
    return key;
  }
};

PositionSolver::PositionSolver(const Graph& g, int k, Variant variant, std::uint64_t budget) {
  check_limits(g, k);
  impl_ = std::make_unique<Impl>(g, k, variant, budget);
}
PositionSolver::~PositionSolver() = default;
PositionSolver::PositionSolver(PositionSolver&&) noexcept = default;
PositionSolver& PositionSolver::operator=(PositionSolver&&) noexcept = default;

PositionValue PositionSolver::evaluate(const GameState& s) { return value_of(impl_->table, impl_->ensure(s)); }

std::vector<Vertex> PositionSolver::best_cop_targets(const GameState& s) {
  if (s.phase != Phase::kCopTurn) throw InputError("best_cop_targets: not the cops' turn");
  if (is_capture(s)) throw InputError("best_cop_targets: robber already captured");
  // Evaluate every successor first so the table covers them all.
  const auto succ = cop_successors(impl_->graph, s);
  for (const auto& next : succ) impl_->ensure(next);
  std::optional<GameState> best;
  std::uint32_t best_value = kInf;
  for (const auto& next : succ) {
    const std::uint32_t v = is_capture(next) ? 0 : impl_->table.find(impl_->table.key_of(next))->plies;
    if (!best || v < best_value) {
      best = next;
      best_value = v;
    }
  }
  return best->cops;
}

Vertex PositionSolver::best_robber_target(const GameState& s) {
  if (s.phase != Phase::kRobberTurn) throw InputError("best_robber_target: not the robber's turn");
  const auto succ = robber_successors(impl_->graph, s, impl_->variant);
  std::optional<Vertex> best;
  std::uint32_t best_value = 0;
  for (const auto& [next, rec] : succ) {
    if (is_capture(next)) continue;
    impl_->ensure(next);
    const std::uint32_t v = impl_->table.find(impl_->table.key_of(next))->plies;
    if (!best || v > best_value) {
      best = rec.to;
      best_value = v;
    }
  }
  return best ? *best : s.robber;
}

std::uint64_t PositionSolver::explored_states() const { return impl_->table.size(); }

nlohmann::json to_json(const SolveResult& r) {
  nlohmann::json j;
  j["winner"] = r.winner == Winner::kCop ? "cop" : "robber";
  j["k"] = r.k;
  j["placement"] = r.optimal_placement;
  j["captureTimeRounds"] = r.capture_time_rounds ? nlohmann::json(*r.capture_time_rounds) : nlohmann::json(nullptr);
  j["exploredStates"] = r.explored_states;
  return j;
}

}  // namespace bridgeburn
