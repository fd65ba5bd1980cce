#include "bridgeburn/strategies.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bridgeburn/bounds.hpp"
#include "bridgeburn/errors.hpp"

namespace bridgeburn {
namespace {

constexpr int kFar = std::numeric_limits<int>::max();

bool occupied(const std::vector<Vertex>& cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

bool edge_open(const Graph& g, const EdgeSet& burned, Vertex a, Vertex b) {
  const auto e = g.edge_between(a, b);
  return e && !burned.contains(*e);
}

std::vector<Vertex> sorted_neighbors(const Graph& g, const EdgeSet& burned, Vertex v) {
  std::vector<Vertex> out;
  for (const auto& nb : g.neighbors(v))
    if (!burned.contains(nb.edge)) out.push_back(nb.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

// One step along a shortest intact path; smallest index among ties, stay when unreachable.
Vertex step_toward(const Graph& g, const EdgeSet& burned, Vertex from, Vertex to) {
  if (from == to) return from;
  const auto d = bfs_distances(g, to, burned);
  const int here = d[static_cast<std::size_t>(from)];
  if (here == kUnreachable) return from;
  for (Vertex w : sorted_neighbors(g, burned, from))
    if (d[static_cast<std::size_t>(w)] == here - 1) return w;
  return from;
}

int nearest_cop(const Graph& g, const EdgeSet& burned, Vertex v, const std::vector<Vertex>& cops) {
  const auto d = bfs_distances(g, v, burned);
  int best = kFar;
  for (Vertex c : cops)
    if (d[static_cast<std::size_t>(c)] != kUnreachable) best = std::min(best, d[static_cast<std::size_t>(c)]);
  return best;
}

// Robber fallback: the move (stay first, then by index) that leaves the
// nearest cop farthest away in the graph after the move.
Vertex evasive_move(const Graph& g, const GameState& s, Variant variant) {
  Vertex best = s.robber;
  int best_score = nearest_cop(g, s.burned, s.robber, s.cops);
  for (Vertex w : sorted_neighbors(g, s.burned, s.robber)) {
    if (occupied(s.cops, w)) continue;
    EdgeSet burned = s.burned;
    if (variant.burning) burned.insert(*g.edge_between(s.robber, w));
    const int score = nearest_cop(g, burned, w, s.cops);
    if (score > best_score) {
      best = w;
      best_score = score;
    }
  }
  return best;
}

// The vertex minimizing the distance to the nearest cop is avoided: returns the
// free vertex whose nearest cop is farthest (smallest index among ties).
Vertex farthest_free_vertex(const Graph& g, const std::vector<Vertex>& cops) {
  Vertex best = 0;
  int best_score = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (occupied(cops, v)) continue;
    const int score = nearest_cop(g, {}, v, cops);
    if (score > best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

Vertex capture_or_chase(const Graph& g, const GameState& s, Vertex cop) {
  if (cop == s.robber || edge_open(g, s.burned, cop, s.robber)) return s.robber;
  return step_toward(g, s.burned, cop, s.robber);
}

// Column/row addressing for grid and torus families.
struct Lattice {
  int rows = 0;
  int cols = 0;
  bool wrap = false;

  int col(Vertex v) const { return v % cols; }
  int row(Vertex v) const { return v / cols; }
  std::optional<Vertex> at(int c, int r) const {
    if (wrap) {
      c = ((c % cols) + cols) % cols;
      r = ((r % rows) + rows) % rows;
    } else if (c < 0 || c >= cols || r < 0 || r >= rows) {
      return std::nullopt;
    }
    return grid_index(cols, c, r);
  }
  Vertex must(int c, int r) const {
    const auto v = at(c, r);
    if (!v) throw InputError("policy walk leaves the grid at (" + std::to_string(c) + "," + std::to_string(r) + ")");
    return *v;
  }
  // Signed offset from a to b along one axis, shortest way round on a torus.
  int offset(int a, int b, int size) const {
    int d = b - a;
    if (wrap) {
      d = ((d % size) + size) % size;
      if (d > size / 2) d -= size;
    }
    return d;
  }
};

void require_family_graph(const PolicyContext& ctx, const std::string& policy) {
  if (!ctx.family) throw InputError(policy + " needs the graph family (use --family)");
  if (generate(*ctx.family) != ctx.graph) throw InputError(policy + ": graph does not match its family");
}

Lattice lattice_of(const PolicyContext& ctx, const std::string& policy) {
  require_family_graph(ctx, policy);
  const auto& f = *ctx.family;
  if (f.family != Family::kGrid && f.family != Family::kTorus) throw InputError(policy + " needs a grid or torus");
  return Lattice{f.params[0], f.params[1], f.family == Family::kTorus};
}

Vertex nearest_to(const Graph& g, Vertex v, const std::vector<Vertex>& cops) {
  const auto d = bfs_distances(g, v);
  Vertex best = cops.front();
  for (Vertex c : cops)
    if (d[static_cast<std::size_t>(c)] < d[static_cast<std::size_t>(best)] ||
        (d[static_cast<std::size_t>(c)] == d[static_cast<std::size_t>(best)] && c < best))
      best = c;
  return best;
}

// ---------------------------------------------------------------- cops

class GreedyCloser : public CopPolicy {
 public:
  GreedyCloser(Graph g, std::vector<Vertex> placement, std::string name)
      : g_(std::move(g)), placement_(std::move(placement)), name_(std::move(name)) {
    std::sort(placement_.begin(), placement_.end());
  }
  std::string name() const override { return name_; }
  CopOpening place() const override { return {placement_, {}}; }
  CopDecision choose(const GameState& s, const PolicyMemory& memory) const override {
    CopDecision d{{}, memory};
    for (Vertex c : s.cops) d.targets.push_back(capture_or_chase(g_, s, c));
    return d;
  }

 private:
  Graph g_;
  std::vector<Vertex> placement_;
  std::string name_;
};

class Stationary : public CopPolicy {
 public:
  explicit Stationary(std::vector<Vertex> placement) : placement_(std::move(placement)) {
    std::sort(placement_.begin(), placement_.end());
  }
  std::string name() const override { return "stationary"; }
  CopOpening place() const override { return {placement_, {}}; }
  CopDecision choose(const GameState& s, const PolicyMemory& memory) const override { return {s.cops, memory}; }

 private:
  std::vector<Vertex> placement_;
};

// Memory: previous robber vertex, mask of dimensions the robber has visited,
// mirrored dimension (-1 until the cop is adjacent across an unvisited one).
class HypercubeMirror : public CopPolicy {
 public:
  HypercubeMirror(Graph g, int d) : g_(std::move(g)), d_(d) {}
  std::string name() const override { return "hypercube_mirror"; }
  CopOpening place() const override { return {{(1 << d_) - 1}, {-1, 0, -1}}; }

  CopDecision choose(const GameState& s, const PolicyMemory& mem) const override {
    const Vertex cop = s.cops.front();
    const Vertex r = s.robber;
    const Vertex prev = mem[0];
    const int visited = mem[1] | r;
    int mirror = mem[2];

    Vertex target = cop;
    if (edge_open(g_, s.burned, cop, r)) {
      target = r;
    } else if (mirror >= 0 && prev >= 0 && prev != r && std::has_single_bit(static_cast<unsigned>(prev ^ r))) {
      target = mirror_move(s, cop, prev ^ r);
    } else if (prev >= 0 && prev != r && std::has_single_bit(static_cast<unsigned>(prev ^ r)) &&
               ((r ^ cop) & (prev ^ r))) {
      // The robber moved away in this coordinate: copy it.
      target = flip(s, cop, prev ^ r);
    } else {
      target = closer(s, cop, r);
    }
    const int diff = target ^ r;
    if (target != r && std::has_single_bit(static_cast<unsigned>(diff)) && !(visited & diff))
      mirror = std::countr_zero(static_cast<unsigned>(diff));
    return {{target}, {r, visited, mirror}};
  }

 private:
  Vertex flip(const GameState& s, Vertex cop, int bit) const {
    const Vertex next = cop ^ bit;
    return edge_open(g_, s.burned, cop, next) ? next : closer(s, cop, s.robber);
  }
  Vertex mirror_move(const GameState& s, Vertex cop, int bit) const { return flip(s, cop, bit); }
  // Smallest differing coordinate whose edge is intact.
  Vertex closer(const GameState& s, Vertex cop, Vertex r) const {
    for (int b = 0; b < d_; ++b) {
      if (!((cop ^ r) >> b & 1)) continue;
      const Vertex next = cop ^ (1 << b);
      if (edge_open(g_, s.burned, cop, next)) return next;
    }
    return cop;
  }

  Graph g_;
  int d_;
};

// Memory: robber start, whether the cop has reached it, robber's distance to
// the start at the previous cop turn.
class GuardStartVertex : public CopPolicy {
 public:
  GuardStartVertex(Graph g, Vertex start) : g_(std::move(g)), start_(start) {
    if (!all_degrees_even(g_)) throw InputError("guard_start_vertex needs every vertex to have even degree");
    if (!g_.valid_vertex(start_)) throw InputError("guard_start_vertex: invalid start vertex");
  }
  std::string name() const override { return "guard_start_vertex"; }
  CopOpening place() const override { return {{start_}, {}}; }

  CopDecision choose(const GameState& s, const PolicyMemory& mem) const override {
    const Vertex cop = s.cops.front();
    const Vertex v = mem.empty() ? s.robber : mem[0];
    bool reached = !mem.empty() && mem[1] != 0;
    const auto to_v = bfs_distances(g_, v, s.burned);
    const int robber_dist = to_v[static_cast<std::size_t>(s.robber)];
    Vertex target;
    if (cop == s.robber || edge_open(g_, s.burned, cop, s.robber)) {
      target = s.robber;
    } else if (!reached) {
      target = step_toward(g_, s.burned, cop, v);
    } else if (!mem.empty() && robber_dist != kUnreachable && robber_dist < mem[2]) {
      target = step_toward(g_, s.burned, cop, v);
    } else {
      target = step_toward(g_, s.burned, cop, s.robber);
    }
    if (target == v) reached = true;
    return {{target}, {v, reached ? 1 : 0, robber_dist == kUnreachable ? kFar : robber_dist}};
  }

 private:
  Graph g_;
  Vertex start_;
};

// Cop team on a 2 x n grid. Each cop captures when adjacent, otherwise takes
// a shortest-path step, preferring the horizontal one toward the robber; if
// that step enters a vertex whose vertical edge is burned she switches rows
// instead when that is also a shortest step. On her second turn a cop drops
// to the other row when the robber began in her row and ran away from her
// horizontally, and every cop drops when the robber began in row 1 and
// moved up. Memory: cop turns taken, robber start, robber vertex after his
// first turn (-1 until known).
class Grid2xnCop : public CopPolicy {
 public:
  Grid2xnCop(Graph g, Lattice lat) : g_(std::move(g)), lat_(lat) {
    if (lat_.rows != 2 || lat_.wrap) throw InputError("grid2xn_cop needs a grid with 2 rows");
    placement_ = placement_generators(FamilySpec{Family::kGrid, {2, lat_.cols}});
  }
  std::string name() const override { return "grid2xn_cop"; }
  CopOpening place() const override { return {placement_, {0, -1, -1}}; }

  CopDecision choose(const GameState& s, const PolicyMemory& mem) const override {
    PolicyMemory next = mem;
    if (next[0] == 0) next[1] = s.robber;
    if (next[0] == 1) next[2] = s.robber;
    CopDecision d{{}, next};
    for (Vertex c : s.cops) d.targets.push_back(move_one(s, c, next));
    ++d.memory[0];
    return d;
  }

 private:
  Vertex vertical(Vertex v) const { return lat_.must(lat_.col(v), 1 - lat_.row(v)); }
  bool has_vertical(const EdgeSet& burned, Vertex v) const { return edge_open(g_, burned, v, vertical(v)); }

  bool drops(const GameState& s, Vertex c, const PolicyMemory& mem) const {
    if (mem[0] != 1 || lat_.row(c) != lat_.row(mem[1]) || !has_vertical(s.burned, c)) return false;
    const Vertex start = mem[1], first = mem[2];
    if (lat_.row(start) == 1) return lat_.row(first) == 0 && lat_.col(first) == lat_.col(start);
    if (lat_.row(first) != 0 || first == start) return false;
    const int run = lat_.col(first) - lat_.col(start);
    return (run > 0 && lat_.col(c) < lat_.col(start)) || (run < 0 && lat_.col(c) > lat_.col(start));
  }

  Vertex move_one(const GameState& s, Vertex c, const PolicyMemory& mem) const {
    const Vertex r = s.robber;
    if (c == r || edge_open(g_, s.burned, c, r)) return r;
    const auto d = bfs_distances(g_, r, s.burned);
    const int here = d[static_cast<std::size_t>(c)];
    if (here == kUnreachable) return c;
    if (drops(s, c, mem)) return vertical(c);
    auto shortest = [&](Vertex w) { return edge_open(g_, s.burned, c, w) && d[static_cast<std::size_t>(w)] == here - 1; };
    const Vertex v = vertical(c);
    const int cc = lat_.col(c), rc = lat_.col(r);
    if (cc != rc) {
      const Vertex h = lat_.must(cc + (rc > cc ? 1 : -1), lat_.row(c));
      if (shortest(h)) return !has_vertical(s.burned, h) && shortest(v) ? v : h;
    }
    if (shortest(v)) return v;
    return step_toward(g_, s.burned, c, r);
  }

  Graph g_;
  Lattice lat_;
  std::vector<Vertex> placement_;
};

// ---------------------------------------------------------------- robbers

class GreedyEvader : public RobberPolicy {
 public:
  GreedyEvader(Graph g, Variant variant) : g_(std::move(g)), variant_(variant) {}
  std::string name() const override { return "greedy_evader"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override { return {farthest_free_vertex(g_, cops), {}}; }
  RobberDecision choose(const GameState& s, const PolicyMemory& memory) const override {
    return {evasive_move(g_, s, variant_), memory};
  }

 private:
  Graph g_;
  Variant variant_;
};

// A robber following a precomputed walk. Memory: [next index, aborted,
// three policy-specific slots, walk targets...]. A blocked step aborts the
// walk; afterwards (and once it is complete) the robber plays evasively.
class WalkRobber : public RobberPolicy {
 public:
  WalkRobber(Graph g, Variant variant) : g_(std::move(g)), variant_(variant) {}

  RobberDecision choose(const GameState& s, const PolicyMemory& memory) const override {
    PolicyMemory mem = memory;
    extend(s, mem);
    const std::size_t idx = static_cast<std::size_t>(mem[0]);
    if (!mem[1] && kHeader + idx < mem.size()) {
      const Vertex t = mem[kHeader + idx];
      if ((t == s.robber || edge_open(g_, s.burned, s.robber, t)) && !occupied(s.cops, t)) {
        ++mem[0];
        return {t, mem};
      }
      mem[1] = 1;
    }
    return {evasive_move(g_, s, variant_), mem};
  }

 protected:
  static constexpr std::size_t kHeader = 5;

  static PolicyMemory walk_memory(const std::vector<Vertex>& walk, std::array<std::int32_t, 3> extra = {0, 0, 0}) {
    PolicyMemory mem{0, 0, extra[0], extra[1], extra[2]};
    mem.insert(mem.end(), walk.begin(), walk.end());
    return mem;
  }
  // Hook for walks decided during play.
  virtual void extend(const GameState&, PolicyMemory&) const {}

  Graph g_;
  Variant variant_;
};

class LeafIsolate : public WalkRobber {
 public:
  using WalkRobber::WalkRobber;
  std::string name() const override { return "leaf_isolate"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override {
    std::optional<Vertex> best;
    int best_guard = -1;
    for (Vertex leaf = 0; leaf < g_.vertex_count(); ++leaf) {
      if (g_.degree(leaf) != 1) continue;
      const Vertex p = g_.neighbors(leaf).front().vertex;
      if (occupied(cops, p) || occupied(cops, leaf)) continue;
      const int guard = nearest_cop(g_, {}, leaf, cops);
      if (guard > best_guard) {
        best = leaf;
        best_guard = guard;
      }
    }
    if (!best) return {farthest_free_vertex(g_, cops), walk_memory({})};
    return {g_.neighbors(*best).front().vertex, walk_memory({*best})};
  }
};

// The 4-move loop that cuts a corner off. On two-row grids the loop starts
// along the row, in the row of the nearest cop; otherwise it starts across.
class CornerIsolate : public WalkRobber {
 public:
  CornerIsolate(Graph g, Variant variant, Lattice lat) : WalkRobber(std::move(g), variant), lat_(lat) {
    if (lat_.wrap || lat_.rows < 2 || lat_.cols < 2) throw InputError("corner_isolate needs a grid with at least 2 rows and columns");
  }
  std::string name() const override { return "corner_isolate"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override {
    int cx = 0, cy = 0;
    if (lat_.rows == 2) {
      int left = kFar, right = kFar;
      for (Vertex c : cops) {
        left = std::min(left, lat_.col(c));
        right = std::min(right, lat_.cols - 1 - lat_.col(c));
      }
      cx = right > left ? lat_.cols - 1 : 0;
      cy = lat_.row(nearest_to(g_, lat_.must(cx, 0), cops));
    } else {
      int best = -1;
      for (int y : {0, lat_.rows - 1})
        for (int x : {0, lat_.cols - 1}) {
          const Vertex corner = lat_.must(x, y);
          const int score = occupied(cops, corner) ? -1 : nearest_cop(g_, {}, corner, cops);
          if (score > best || (score == best && corner < lat_.must(cx, cy))) {
            best = score;
            cx = x;
            cy = y;
          }
        }
    }
    const int hx = cx == 0 ? 1 : -1, hy = cy == 0 ? 1 : -1;
    std::vector<Vertex> walk;
    if (lat_.rows == 2)
      walk = {lat_.must(cx + hx, cy), lat_.must(cx + hx, cy + hy), lat_.must(cx, cy + hy), lat_.must(cx, cy)};
    else
      walk = {lat_.must(cx, cy + hy), lat_.must(cx + hx, cy + hy), lat_.must(cx + hx, cy), lat_.must(cx, cy)};
    return {lat_.must(cx, cy), walk_memory(walk)};
  }

 private:
  Lattice lat_;
};

// Five moves isolating w: start one step before w along the side, step onto w,
// step inward, along, back out, and back onto w. The loop runs away from the
// nearest cop.
std::pair<Vertex, std::vector<Vertex>> five_loop(const Lattice& lat, Vertex w, int tx, int ty, int ix, int iy) {
  const int c = lat.col(w), r = lat.row(w);
  return {lat.must(c - tx, r - ty),
          {w, lat.must(c + ix, r + iy), lat.must(c + tx + ix, r + ty + iy), lat.must(c + tx, r + ty), w}};
}

class BorderIsolate : public WalkRobber {
 public:
  BorderIsolate(Graph g, Variant variant, Lattice lat, Vertex w) : WalkRobber(std::move(g), variant), lat_(lat), w_(w) {
    if (lat_.wrap || lat_.rows < 3 || lat_.cols < 3) throw InputError("border_isolate needs a grid with at least 3 rows and columns");
    if (!g_.valid_vertex(w_) || g_.degree(w_) != 3) throw InputError("border_isolate needs a border vertex of degree 3");
  }
  std::string name() const override { return "border_isolate"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override {
    const int c = lat_.col(w_), r = lat_.row(w_);
    int ix = 0, iy = 0;
    if (r == 0) iy = 1;
    else if (r == lat_.rows - 1) iy = -1;
    else if (c == 0) ix = 1;
    else ix = -1;
    // Tangent axis is the other one; point it away from the nearest cop.
    const Vertex near = nearest_to(g_, w_, cops);
    int tx = iy != 0 ? 1 : 0, ty = ix != 0 ? 1 : 0;
    const int along = tx ? lat_.col(near) - c : lat_.row(near) - r;
    if (along > 0) {
      tx = -tx;
      ty = -ty;
    }
    if (!lat_.at(c + tx, r + ty) || !lat_.at(c - tx, r - ty)) {
      tx = -tx;
      ty = -ty;
    }
    const auto [start, walk] = five_loop(lat_, w_, tx, ty, ix, iy);
    return {start, walk_memory(walk)};
  }

 private:
  Lattice lat_;
  Vertex w_;
};

class GapIsolate : public WalkRobber {
 public:
  GapIsolate(Graph g, Variant variant, Lattice lat, int column)
      : WalkRobber(std::move(g), variant), lat_(lat), column_(column) {
    if (lat_.wrap || lat_.rows != 2) throw InputError("gap_isolate needs a grid with 2 rows");
    if (column_ < 1 || column_ > lat_.cols - 2) throw InputError("gap_isolate column must be in [1, n-2]");
  }
  std::string name() const override { return "gap_isolate"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override {
    const Vertex near = nearest_to(g_, lat_.must(column_, 0), cops);
    const int row = lat_.row(near);
    const int tx = lat_.col(near) > column_ ? -1 : 1;
    const auto [start, walk] = five_loop(lat_, lat_.must(column_, row), tx, 0, 0, row == 0 ? 1 : -1);
    return {start, walk_memory(walk)};
  }

 private:
  Lattice lat_;
  int column_;
};

// The double loop around a degree-4 vertex v. With no cop within distance 9:
// right, up, left, down, left, down, right, up. With one near cop: the first
// loop goes toward the cop's quadrant; at v again the robber closes the second
// loop on the side the cop cannot reach within 3 steps.
// Extra memory slots: adaptive flag, hx, hy (reflection of the base frame, in
// which the cop is up and to the left).
class Degree4Isolate : public WalkRobber {
 public:
  Degree4Isolate(Graph g, Variant variant, Lattice lat, Vertex v)
      : WalkRobber(std::move(g), variant), lat_(lat), v_(v) {
    if (!g_.valid_vertex(v_) || g_.degree(v_) != 4) throw InputError("degree4_isolate needs a vertex of degree 4");
  }
  std::string name() const override { return "degree4_isolate"; }
  RobberOpening place(const std::vector<Vertex>& cops) const override {
    const int i = lat_.col(v_), j = lat_.row(v_);
    const auto d = bfs_distances(g_, v_);
    std::optional<Vertex> near;
    for (Vertex c : cops)
      if (d[static_cast<std::size_t>(c)] <= 9 &&
          (!near || d[static_cast<std::size_t>(c)] < d[static_cast<std::size_t>(*near)] ||
           (d[static_cast<std::size_t>(c)] == d[static_cast<std::size_t>(*near)] && c < *near)))
        near = c;
    if (!near) {
      return {v_, walk_memory({at(i + 1, j), at(i + 1, j - 1), at(i, j - 1), at(i, j), at(i - 1, j), at(i - 1, j + 1),
                               at(i, j + 1), at(i, j)})};
    }
    const int hx = lat_.offset(i, lat_.col(*near), lat_.cols) <= 0 ? 1 : -1;
    const int hy = lat_.offset(j, lat_.row(*near), lat_.rows) <= 0 ? 1 : -1;
    return {v_, walk_memory({at(i, j - hy), at(i - hx, j - hy), at(i - hx, j), at(i, j)}, {1, hx, hy})};
  }

 protected:
  void extend(const GameState& s, PolicyMemory& mem) const override {
    if (mem[2] != 1 || mem[1] || static_cast<std::size_t>(mem[0]) != mem.size() - kHeader) return;
    mem[2] = 0;
    if (s.robber != v_) return;
    const int i = lat_.col(v_), j = lat_.row(v_), hx = mem[3], hy = mem[4];
    const Vertex below = at(i, j + hy);
    const auto d = bfs_distances(g_, below, s.burned);
    bool reachable = false;
    for (Vertex c : s.cops)
      if (d[static_cast<std::size_t>(c)] != kUnreachable && d[static_cast<std::size_t>(c)] <= 3) reachable = true;
    const std::vector<Vertex> tail = reachable
                                         ? std::vector<Vertex>{below, at(i + hx, j + hy), at(i + hx, j), v_}
                                         : std::vector<Vertex>{at(i + hx, j), at(i + hx, j + hy), below, v_};
    mem.insert(mem.end(), tail.begin(), tail.end());
  }

 private:
  Vertex at(int c, int r) const { return lat_.must(c, r); }
  Lattice lat_;
  Vertex v_;
};

// Robber on capture_family(m, k). Memory: [mode, circuit start, position in
// circuit]; mode 0 walks the Eulerian circuit of the S-part, 1 runs for the
// pendant, 2 has given up on the script.
class EulerianStall : public RobberPolicy {
 public:
  EulerianStall(Graph g, Variant variant, int m, int k) : g_(std::move(g)), variant_(variant), layout_{m, k} {
    if (m < 1 || k < 2) throw InputError("eulerian_stall needs m >= 1 and k >= 2");
    if ((m * (k - 1)) % 2 != 0) throw InputError("eulerian_stall needs m(k-1) even");
    if (generate(FamilySpec{Family::kCaptureFamily, {m, k}}) != g_)
      throw InputError("eulerian_stall: graph is not capture_family(" + std::to_string(m) + "," + std::to_string(k) + ")");
  }
  std::string name() const override { return "eulerian_stall"; }

  RobberOpening place(const std::vector<Vertex>& cops) const override {
    std::optional<int> cop_clique;
    for (int i = 0; i < layout_.k; ++i)
      if (occupied(cops, layout_.clique(i))) cop_clique = i;
    if (!cop_clique) {
      for (int j = 0; j < layout_.k; ++j) {
        const Vertex vj = layout_.clique(j);
        if (occupied(cops, vj)) continue;
        const bool adjacent = std::any_of(cops.begin(), cops.end(), [&](Vertex c) { return g_.edge_between(c, vj).has_value(); });
        if (!adjacent) return {vj, {1, 0, 0}};
      }
    }
    for (int j = 0; j < layout_.k; ++j) {
      if (cop_clique && j == *cop_clique) continue;
      const Vertex s = layout_.part_vertex(j, 0);
      if (!occupied(cops, s)) return {s, {0, s, 0}};
    }
    return {farthest_free_vertex(g_, cops), {2, 0, 0}};
  }

  RobberDecision choose(const GameState& s, const PolicyMemory& memory) const override {
    PolicyMemory mem = memory;
    const Vertex r = s.robber;
    auto safe = [&](Vertex t) { return (t == r || edge_open(g_, s.burned, r, t)) && !occupied(s.cops, t); };
    if (mem[0] == 1) {
      if (layout_.is_clique(r)) {
        const Vertex u = layout_.pendant(r);
        if (safe(u)) return {u, mem};
      }
      mem[0] = 2;
    }
    if (mem[0] == 0 && layout_.is_part(r)) {
      const int j = layout_.part_of(r);
      const Vertex vj = layout_.clique(j);
      const Vertex uj = layout_.pendant(j);
      const bool guarded = std::any_of(s.cops.begin(), s.cops.end(),
                                       [&](Vertex c) { return c == vj || edge_open(g_, s.burned, c, vj); });
      if (!guarded && safe(vj) && edge_open(g_, s.burned, vj, uj) && !occupied(s.cops, uj)) {
        mem[0] = 1;
        return {vj, mem};
      }
      const bool threatened = std::any_of(s.cops.begin(), s.cops.end(), [&](Vertex c) { return edge_open(g_, s.burned, c, r); });
      if (!threatened) return {r, mem};
      const auto& circuit = circuit_from(mem[1]);
      const auto idx = static_cast<std::size_t>(mem[2]);
      if (idx + 1 < circuit.size() && circuit[idx] == r && safe(circuit[idx + 1])) {
        ++mem[2];
        return {circuit[idx + 1], mem};
      }
      if (idx + 1 >= circuit.size()) return {r, mem};
    }
    mem[0] = 2;
    return {evasive_move(g_, s, variant_), mem};
  }

 private:
  // Hierholzer's method on the S-part, neighbors taken in ascending order.
  const std::vector<Vertex>& circuit_from(Vertex start) const {
    auto it = circuits_.find(start);
    if (it != circuits_.end()) return it->second;
    std::vector<std::vector<Neighbor>> adj(static_cast<std::size_t>(g_.vertex_count()));
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!layout_.is_part(v)) continue;
      for (const auto& nb : g_.neighbors(v))
        if (layout_.is_part(nb.vertex)) adj[static_cast<std::size_t>(v)].push_back(nb);
      std::sort(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end(),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
    std::vector<char> used(static_cast<std::size_t>(g_.edge_count()), 0);
    std::vector<std::size_t> cursor(adj.size(), 0);
    std::vector<Vertex> stack{start}, circuit;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto& cur = cursor[static_cast<std::size_t>(v)];
      const auto& list = adj[static_cast<std::size_t>(v)];
      while (cur < list.size() && used[static_cast<std::size_t>(list[cur].edge)]) ++cur;
      if (cur == list.size()) {
        circuit.push_back(v);
        stack.pop_back();
      } else {
        used[static_cast<std::size_t>(list[cur].edge)] = 1;
        stack.push_back(list[cur].vertex);
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuits_.emplace(start, std::move(circuit)).first->second;
  }

  Graph g_;
  Variant variant_;
  CaptureFamilyLayout layout_;
  mutable std::map<Vertex, std::vector<Vertex>> circuits_;
};

// Robber on the stalemate graph u, v, w, x, y, z = 0..5 (4-cycle u v w x,
// pendants y at v and z at x) against one cop.
class StalematePolicy : public RobberPolicy {
 public:
  StalematePolicy(Graph g, Variant variant) : g_(std::move(g)), variant_(variant) {
    if (generate(FamilySpec{Family::kStalemate, {}}) != g_) throw InputError("stalemate_policy needs the stalemate graph");
  }
  std::string name() const override { return "stalemate_policy"; }

  RobberOpening place(const std::vector<Vertex>& cops) const override {
    if (cops.size() != 1) return {farthest_free_vertex(g_, cops), {}};
    switch (cops.front()) {
      case 1:
      case 4:
        return {3, {}};
      case 3:
      case 5:
        return {1, {}};
      case 0:
        return {2, {}};
      default:
        return {0, {}};
    }
  }

  RobberDecision choose(const GameState& s, const PolicyMemory& memory) const override {
    const Vertex r = s.robber;
    // Burn the bridge to a pendant when it cuts every cop off.
    for (Vertex t : sorted_neighbors(g_, s.burned, r)) {
      if (occupied(s.cops, t)) continue;
      GameState next = s;
      next.robber = t;
      if (variant_.burning) next.burned.insert(*g_.edge_between(r, t));
      if (!robber_component_check(g_, next)) return {t, memory};
    }
    if (s.cops.size() == 1 && r < 4 && s.cops.front() < 4) {
      const Vertex c = s.cops.front();
      if (c == (r + 2) % 4) return {r, memory};
      const Vertex away = (c + 2) % 4;
      if (edge_open(g_, s.burned, r, away)) return {away, memory};
    }
    return {evasive_move(g_, s, variant_), memory};
  }

 private:
  Graph g_;
  Variant variant_;
};

// ---------------------------------------------------------------- factory

struct ParsedSpec {
  std::string name;
  std::vector<int> params;
};

ParsedSpec parse_spec(std::string_view spec) {
  ParsedSpec out;
  const auto colon = spec.find(':');
  out.name = std::string(spec.substr(0, colon));
  if (colon == std::string_view::npos) return out;
  std::stringstream in{std::string(spec.substr(colon + 1))};
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.params.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("policy parameter '" + item + "' is not an integer");
    }
  }
  return out;
}

const std::vector<std::string> kCopNames = {"hypercube_mirror", "guard_start_vertex", "grid2xn_cop", "torus_placement",
                                            "grid_placement", "greedy_closer", "stationary"};
const std::vector<std::string> kRobberNames = {"leaf_isolate",  "corner_isolate", "border_isolate",   "gap_isolate",
                                               "degree4_isolate", "eulerian_stall", "stalemate_policy", "greedy_evader"};

Vertex vertex_param(const PolicyContext& ctx, const ParsedSpec& p, const std::string& policy) {
  if (p.params.size() == 1) return p.params[0];
  if (p.params.size() == 2) return lattice_of(ctx, policy).must(p.params[0], p.params[1]);
  throw InputError(policy + " takes a vertex index or a column,row pair");
}

std::vector<Vertex> checked_placement(const PolicyContext& ctx, std::vector<Vertex> placement, const std::string& policy) {
  if (placement.empty()) throw InputError(policy + ": empty placement");
  for (Vertex v : placement)
    if (!ctx.graph.valid_vertex(v)) throw InputError(policy + ": invalid vertex " + std::to_string(v));
  return placement;
}

// Default team placement: all cops on the smallest vertex of least eccentricity.
std::vector<Vertex> central_placement(const PolicyContext& ctx) {
  Vertex best = 0;
  int best_ecc = kFar;
  for (Vertex v = 0; v < ctx.graph.vertex_count(); ++v) {
    const auto d = bfs_distances(ctx.graph, v);
    int ecc = 0;
    for (int x : d) ecc = x == kUnreachable ? kFar : std::max(ecc, x);
    if (ecc < best_ecc) {
      best = v;
      best_ecc = ecc;
    }
  }
  return std::vector<Vertex>(static_cast<std::size_t>(std::max(1, ctx.cops)), best);
}

}  // namespace

std::optional<Side> policy_side(std::string_view spec) {
  const auto name = parse_spec(spec).name;
  if (std::find(kCopNames.begin(), kCopNames.end(), name) != kCopNames.end()) return Side::kCop;
  if (std::find(kRobberNames.begin(), kRobberNames.end(), name) != kRobberNames.end()) return Side::kRobber;
  return std::nullopt;
}

std::vector<std::string> policy_names(Side side) { return side == Side::kCop ? kCopNames : kRobberNames; }

std::unique_ptr<CopPolicy> make_cop_policy(const PolicyContext& ctx, std::string_view spec) {
  const auto p = parse_spec(spec);
  const Graph& g = ctx.graph;
  if (g.vertex_count() == 0) throw InputError("policies need a non-empty graph");
  if (p.name == "hypercube_mirror") {
    require_family_graph(ctx, p.name);
    if (ctx.family->family != Family::kHypercube) throw InputError("hypercube_mirror needs a hypercube");
    return std::make_unique<HypercubeMirror>(g, ctx.family->params[0]);
  }
  if (p.name == "guard_start_vertex") {
    if (p.params.size() > 1) throw InputError("guard_start_vertex takes at most one vertex");
    return std::make_unique<GuardStartVertex>(g, p.params.empty() ? 0 : p.params[0]);
  }
  if (p.name == "grid2xn_cop") return std::make_unique<Grid2xnCop>(g, lattice_of(ctx, p.name));
  if (p.name == "torus_placement" || p.name == "grid_placement") {
    require_family_graph(ctx, p.name);
    const bool torus = p.name == "torus_placement";
    if (ctx.family->family != (torus ? Family::kTorus : Family::kGrid)) throw InputError(p.name + ": wrong family");
    return std::make_unique<GreedyCloser>(g, placement_generators(*ctx.family), p.name);
  }
  if (p.name == "greedy_closer")
    return std::make_unique<GreedyCloser>(g, p.params.empty() ? central_placement(ctx) : checked_placement(ctx, p.params, p.name),
                                          p.name);
  if (p.name == "stationary")
    return std::make_unique<Stationary>(p.params.empty() ? central_placement(ctx) : checked_placement(ctx, p.params, p.name));
  throw InputError("unknown cop policy '" + p.name + "'");
}

std::unique_ptr<RobberPolicy> make_robber_policy(const PolicyContext& ctx, std::string_view spec) {
  const auto p = parse_spec(spec);
  const Graph& g = ctx.graph;
  if (g.vertex_count() == 0) throw InputError("policies need a non-empty graph");
  if (p.name == "greedy_evader") return std::make_unique<GreedyEvader>(g, ctx.variant);
  if (p.name == "leaf_isolate") return std::make_unique<LeafIsolate>(g, ctx.variant);
  if (p.name == "corner_isolate") return std::make_unique<CornerIsolate>(g, ctx.variant, lattice_of(ctx, p.name));
  if (p.name == "border_isolate")
    return std::make_unique<BorderIsolate>(g, ctx.variant, lattice_of(ctx, p.name), vertex_param(ctx, p, p.name));
  if (p.name == "gap_isolate") {
    if (p.params.size() != 1) throw InputError("gap_isolate takes one column");
    return std::make_unique<GapIsolate>(g, ctx.variant, lattice_of(ctx, p.name), p.params[0]);
  }
  if (p.name == "degree4_isolate")
    return std::make_unique<Degree4Isolate>(g, ctx.variant, lattice_of(ctx, p.name), vertex_param(ctx, p, p.name));
  if (p.name == "eulerian_stall") {
    if (p.params.size() != 2) throw InputError("eulerian_stall takes m,k");
    return std::make_unique<EulerianStall>(g, ctx.variant, p.params[0], p.params[1]);
  }
  if (p.name == "stalemate_policy") return std::make_unique<StalematePolicy>(g, ctx.variant);
  throw InputError("unknown robber policy '" + p.name + "'");
}

// ---------------------------------------------------------------- arena

namespace {

struct MemoryHash {
  std::size_t operator()(const PolicyMemory& m) const {
    std::size_t h = m.size();
    for (auto x : m) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    return h;
  }
};

struct NodeKey {
  GameState state;
  PolicyMemory memory;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const { return GameStateHash{}(k.state) * 31u ^ MemoryHash{}(k.memory); }
};

GameState checked_cop_turn(const Graph& g, const GameState& s, const CopPolicy& policy, const CopDecision& d,
                           std::vector<MoveRecord>* records) {
  try {
    return apply_cop_turn(g, s, d.targets, records);
  } catch (const InputError& ex) {
    throw PolicyError("policy '" + policy.name() + "' made an illegal move: " + ex.what());
  }
}

GameState checked_robber_turn(const Graph& g, const GameState& s, const RobberPolicy& policy, Vertex target,
                              Variant variant, MoveRecord* record) {
  try {
    return apply_robber_turn(g, s, target, variant, record);
  } catch (const InputError& ex) {
    throw PolicyError("policy '" + policy.name() + "' made an illegal move: " + ex.what());
  }
}

void check_cop_opening(const Graph& g, const CopPolicy& policy, const CopOpening& o) {
  if (o.cops.empty() || !std::is_sorted(o.cops.begin(), o.cops.end()) ||
      std::any_of(o.cops.begin(), o.cops.end(), [&](Vertex v) { return !g.valid_vertex(v); }))
    throw PolicyError("policy '" + policy.name() + "' produced an invalid placement");
}

void check_robber_opening(const Graph& g, const RobberPolicy& policy, Vertex r) {
  if (!g.valid_vertex(r)) throw PolicyError("policy '" + policy.name() + "' produced an invalid placement");
}

// Replays a game in which the robber follows `script` (targets per robber
// turn) against the cop policy, until the outcome `finish` applies.
Transcript replay_with_script(const Graph& g, const CopPolicy& cop, const CopOpening& opening, Vertex robber0,
                              const std::vector<Vertex>& script, Variant variant, Outcome finish) {
  Transcript t{g, variant, GameState::initial(opening.cops, robber0), {}, finish};
  GameState s = t.initial;
  PolicyMemory mem = opening.memory;
  for (std::size_t i = 0;; ++i) {
    const auto d = cop.choose(s, mem);
    mem = d.memory;
    std::vector<MoveRecord> recs;
    s = checked_cop_turn(g, s, cop, d, &recs);
    t.turns.push_back(std::move(recs));
    if (is_capture(s) || i >= script.size()) break;
    MoveRecord rec;
    s = apply_robber_turn(g, s, script[i], variant, &rec);
    t.turns.push_back({rec});
    if (is_capture(s)) break;
  }
  return t;
}

}  // namespace

Transcript run_match(const Graph& g, const CopPolicy& cop, const RobberPolicy& robber, int max_rounds, Variant variant) {
  check_capacity(g);
  const auto co = cop.place();
  check_cop_opening(g, cop, co);
  const auto ro = robber.place(co.cops);
  check_robber_opening(g, robber, ro.robber);

  Transcript t{g, variant, GameState::initial(co.cops, ro.robber), {}, {}};
  if (is_capture(t.initial)) {
    t.outcome = {Outcome::Kind::kCopWin, 0, ""};
    return t;
  }
  GameState s = t.initial;
  PolicyMemory cop_mem = co.memory, robber_mem = ro.memory;
  std::set<std::tuple<GameState, PolicyMemory, PolicyMemory>> seen;
  for (int round = 1; round <= max_rounds; ++round) {
    if (!seen.emplace(s, cop_mem, robber_mem).second) {
      t.outcome = {Outcome::Kind::kRobberEscape, round - 1, "cycle"};
      return t;
    }
    const auto cd = cop.choose(s, cop_mem);
    cop_mem = cd.memory;
    std::vector<MoveRecord> recs;
    s = checked_cop_turn(g, s, cop, cd, &recs);
    t.turns.push_back(std::move(recs));
    if (is_capture(s)) {
      t.outcome = {Outcome::Kind::kCopWin, round, ""};
      return t;
    }
    const auto rd = robber.choose(s, robber_mem);
    robber_mem = rd.memory;
    MoveRecord rec;
    s = checked_robber_turn(g, s, robber, rd.target, variant, &rec);
    t.turns.push_back({rec});
    if (is_capture(s)) {
      t.outcome = {Outcome::Kind::kCopWin, round, ""};
      return t;
    }
    if (!robber_component_check(g, s)) {
      t.outcome = {Outcome::Kind::kRobberEscape, round, "isolated"};
      return t;
    }
  }
  t.outcome = {Outcome::Kind::kRoundLimit, max_rounds, ""};
  return t;
}

Verdict exhaust_vs_policy(const Graph& g, const CopPolicy& fixed, const ExhaustOptions& options) {
  check_capacity(g);
  const auto opening = fixed.place();
  check_cop_opening(g, fixed, opening);
  Verdict verdict;
  std::vector<Vertex> starts;
  if (options.robber_starts) {
    starts = *options.robber_starts;
  } else {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!occupied(opening.cops, v)) starts.push_back(v);
  }
  if (starts.empty()) {
    verdict.policy_wins = true;
    verdict.capture_round = 0;
    return verdict;
  }

  // Depth-first over robber choices. A node is a robber-turn position together
  // with the cop's memory; its value is the number of further rounds until
  // capture under the worst robber play.
  std::unordered_map<NodeKey, int, NodeKeyHash> done;
  std::unordered_set<NodeKey, NodeKeyHash> on_path;
  struct Frame {
    NodeKey key;
    std::vector<Vertex> moves;
    std::size_t next = 0;
    int best = 0;
  };
  auto spend = [&] {
    if (++verdict.nodes_searched > options.budget)
      throw BudgetExceeded("exhaust_vs_policy budget exhausted", verdict.nodes_searched);
  };
  // Cop reply to a cop-turn state: capture (value 1) or the next node.
  auto reply = [&](const GameState& s, const PolicyMemory& mem, std::optional<NodeKey>& child) -> int {
    const auto d = fixed.choose(s, mem);
    const GameState next = checked_cop_turn(g, s, fixed, d, nullptr);
    if (is_capture(next)) return 1;
    child = NodeKey{next, d.memory};
    return 0;
  };
  auto moves_of = [&](const GameState& s) {
    std::vector<Vertex> out{s.robber};
    for (Vertex w : sorted_neighbors(g, s.burned, s.robber)) out.push_back(w);
    return out;
  };

  int worst = 0;
  for (Vertex r0 : starts) {
    const GameState init = GameState::initial(opening.cops, r0);
    std::optional<NodeKey> root;
    if (reply(init, opening.memory, root) == 1) {
      worst = std::max(worst, 1);
      continue;
    }
    std::vector<Frame> stack;
    auto push = [&](const NodeKey& key) {
      spend();
      on_path.insert(key);
      stack.push_back({key, moves_of(key.state), 0, 0});
    };
    auto fail = [&](std::optional<Vertex> last, const std::string& reason) {
      std::vector<Vertex> script;
      for (const auto& f : stack) script.push_back(f.moves[f.next - 1]);
      if (last) script.back() = *last;
      verdict.policy_wins = false;
      verdict.counterexample = replay_with_script(g, fixed, opening, r0, script, options.variant,
                                                  {Outcome::Kind::kRobberEscape, static_cast<int>(script.size()), reason});
      return verdict;
    };
    if (const auto it = done.find(*root); it != done.end()) {
      worst = std::max(worst, 1 + it->second);
      continue;
    }
    push(*root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.moves.size()) {
        const int value = f.best;
        done.emplace(f.key, value);
        on_path.erase(f.key);
        stack.pop_back();
        if (!stack.empty())
          stack.back().best = std::max(stack.back().best, 1 + value);
        else
          worst = std::max(worst, 1 + value);
        continue;
      }
      const Vertex target = f.moves[f.next++];
      if (occupied(f.key.state.cops, target)) continue;  // walking into a cop ends this round: value 0
      GameState s = apply_robber_turn(g, f.key.state, target, options.variant);
      if (!robber_component_check(g, s)) return fail(std::nullopt, "isolated");
      std::optional<NodeKey> child;
      if (reply(s, f.key.memory, child) == 1) {
        f.best = std::max(f.best, 1);
        continue;
      }
      if (const auto it = done.find(*child); it != done.end()) {
        f.best = std::max(f.best, 1 + it->second);
        continue;
      }
      if (on_path.contains(*child)) return fail(std::nullopt, "cycle");
      push(*child);
    }
  }
  verdict.policy_wins = true;
  verdict.capture_round = worst;
  return verdict;
}

Verdict exhaust_vs_policy(const Graph& g, const RobberPolicy& fixed, const ExhaustOptions& options) {
  check_capacity(g);
  Verdict verdict;
  std::vector<std::vector<Vertex>> placements;
  if (options.cop_placements) {
    placements = *options.cop_placements;
    for (auto& p : placements) std::sort(p.begin(), p.end());
  } else {
    if (options.cops < 1) throw InputError("exhaust_vs_policy: cop count must be positive");
    std::vector<Vertex> cur(static_cast<std::size_t>(options.cops), 0);
    const int n = g.vertex_count();
    while (true) {
      placements.push_back(cur);
      int i = options.cops - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
      if (i < 0) break;
      const Vertex v = cur[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < options.cops; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
  }

  // Breadth-first over cop choices; nodes are cop-turn positions with the
  // robber's memory. The first capture found is the earliest possible one.
  struct Node {
    NodeKey key;
    int parent;           // index into nodes, -1 for a root
    std::vector<Vertex> cop_targets;  // aligned with the parent's sorted cops
    Vertex robber_target;
    int round;            // rounds completed
  };
  std::vector<Node> nodes;
  std::unordered_set<NodeKey, NodeKeyHash> seen;
  auto spend = [&] {
    if (++verdict.nodes_searched > options.budget)
      throw BudgetExceeded("exhaust_vs_policy budget exhausted", verdict.nodes_searched);
  };

  auto transcript_to = [&](int idx, std::optional<std::vector<Vertex>> final_cops,
                           std::optional<Vertex> final_robber, int round) {
    std::vector<int> chain;
    for (int i = idx; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    const GameState& init = nodes[static_cast<std::size_t>(chain.front())].key.state;
    Transcript t{g, options.variant, init, {}, {Outcome::Kind::kCopWin, round, ""}};
    GameState s = init;
    auto play = [&](const std::vector<Vertex>& cops, std::optional<Vertex> robber) {
      std::vector<MoveRecord> recs;
      s = apply_cop_turn(g, s, cops, &recs);
      t.turns.push_back(std::move(recs));
      if (!robber) return;
      MoveRecord rec;
      s = apply_robber_turn(g, s, *robber, options.variant, &rec);
      t.turns.push_back({rec});
    };
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& n = nodes[static_cast<std::size_t>(chain[i])];
      play(n.cop_targets, n.robber_target);
    }
    if (final_cops) play(*final_cops, final_robber);
    return t;
  };

  for (const auto& p : placements) {
    const auto ro = fixed.place(p);
    check_robber_opening(g, fixed, ro.robber);
    NodeKey key{GameState::initial(p, ro.robber), ro.memory};
    if (!seen.insert(key).second) continue;
    spend();
    nodes.push_back({key, -1, {}, 0, 0});
    if (is_capture(key.state)) {
      verdict.counterexample = transcript_to(static_cast<int>(nodes.size()) - 1, std::nullopt, std::nullopt, 0);
      verdict.capture_round = 0;
      return verdict;
    }
  }

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const NodeKey key = nodes[head].key;
    const int round = nodes[head].round + 1;
    const GameState& s = key.state;
    // Every cop independently stays or crosses an intact edge.
    std::vector<std::vector<Vertex>> options_per_cop;
    for (Vertex c : s.cops) {
      std::vector<Vertex> o{c};
      for (Vertex w : sorted_neighbors(g, s.burned, c)) o.push_back(w);
      options_per_cop.push_back(std::move(o));
    }
    std::vector<std::size_t> idx(s.cops.size(), 0);
    std::set<std::vector<Vertex>> tried;
    while (true) {
      std::vector<Vertex> targets(s.cops.size());
      for (std::size_t i = 0; i < idx.size(); ++i) targets[i] = options_per_cop[i][idx[i]];
      std::vector<Vertex> canon = targets;
      std::sort(canon.begin(), canon.end());
      if (tried.insert(canon).second) {
        const GameState after = apply_cop_turn(g, s, targets);
        if (is_capture(after)) {
          verdict.counterexample = transcript_to(static_cast<int>(head), targets, std::nullopt, round);
          verdict.capture_round = round;
          return verdict;
        }
        const auto rd = fixed.choose(after, key.memory);
        const GameState next = checked_robber_turn(g, after, fixed, rd.target, options.variant, nullptr);
        if (is_capture(next)) {
          verdict.counterexample = transcript_to(static_cast<int>(head), targets, rd.target, round);
          verdict.capture_round = round;
          return verdict;
        }
        if (robber_component_check(g, next)) {
          NodeKey child{next, rd.memory};
          if (seen.insert(child).second) {
            spend();
            nodes.push_back({std::move(child), static_cast<int>(head), targets, rd.target, round});
          }
        }
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == options_per_cop[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  verdict.policy_wins = true;
  return verdict;
}

bool robber_distance_safe(const Graph& g, Vertex v, int d, const std::vector<Vertex>& plan,
                          const std::vector<Vertex>& cops) {
  if (!g.valid_vertex(v)) throw InputError("robber_distance_safe: invalid center");
  if (plan.empty()) throw InputError("robber_distance_safe: empty plan");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!g.valid_vertex(plan[i])) throw InputError("robber_distance_safe: invalid vertex in plan");
    if (i > 0 && plan[i] != plan[i - 1] && !g.edge_between(plan[i - 1], plan[i]))
      throw InputError("robber_distance_safe: plan is not a walk");
  }
  const auto dist = bfs_distances(g, v);
  for (Vertex c : cops) {
    if (!g.valid_vertex(c)) throw InputError("robber_distance_safe: invalid cop vertex");
    const int dc = dist[static_cast<std::size_t>(c)];
    if (dc != kUnreachable && dc <= d) return false;
  }
  for (std::size_t i = 0; i + 1 < plan.size(); ++i) {
    const int di = dist[static_cast<std::size_t>(plan[i])];
    if (di == kUnreachable || static_cast<int>(i) + di >= d) return false;
  }
  return true;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"outcome", v.policy_wins ? "policy_wins_always" : "policy_beaten"},
                      {"nodesSearched", v.nodes_searched},
                      {"captureRound", v.capture_round ? nlohmann::json(*v.capture_round) : nlohmann::json(nullptr)}};
  j["counterexample"] = v.counterexample ? to_json(*v.counterexample) : nlohmann::json(nullptr);
  return j;
}

}  // namespace bridgeburn
