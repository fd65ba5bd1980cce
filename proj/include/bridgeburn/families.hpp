#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bridgeburn/graph.hpp"

namespace bridgeburn {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kGrid,
  kTorus,
  kHypercube,
  kStalemate,
  kCaptureFamily,
  kSpider,
};

// A named graph family plus its integer parameters:
//   path n | cycle n | complete n | complete_bipartite a,b | grid m,n |
//   torus m,n | hypercube d | stalemate | capture_family m,k | spider l1,l2,...
// Grid and torus take (rows, columns).
struct FamilySpec {
  Family family;
  std::vector<int> params;

  // Throws InputError when arity or ranges are wrong for the family.
  void validate() const;

  static FamilySpec parse(std::string_view name, const std::vector<int>& params);
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

// Deterministic generator. Vertex numbering:
//  * grid / torus: vertex (i, j) in column i, row j has index j * columns + i;
//  * hypercube: the coordinate word read as a binary integer;
//  * stalemate: u, v, w, x, y, z = 0..5 with edges uv, vw, wx, xu, vy, xz;
//  * capture_family(m, k): v_1..v_k, then u_1..u_k, then S_1..S_k in blocks of m;
//  * spider: center 0, then each leg outward in order.
Graph generate(const FamilySpec& spec);

// Coordinates helpers for grid and torus layouts.
inline Vertex grid_index(int columns, int column, int row) { return row * columns + column; }
inline int grid_column(int columns, Vertex v) { return v % columns; }
inline int grid_row(int columns, Vertex v) { return v / columns; }

// Index helpers for capture_family(m, k); parts and pendants are 0-based.
struct CaptureFamilyLayout {
  int m;
  int k;
  Vertex clique(int i) const { return i; }
  Vertex pendant(int i) const { return k + i; }
  Vertex part_vertex(int i, int j) const { return 2 * k + i * m + j; }
  int vertex_count() const { return k * (m + 2); }
  bool is_clique(Vertex v) const { return v >= 0 && v < k; }
  bool is_pendant(Vertex v) const { return v >= k && v < 2 * k; }
  bool is_part(Vertex v) const { return v >= 2 * k && v < vertex_count(); }
  // Part index (0-based) of an S vertex, clique vertex, or pendant.
  int part_of(Vertex v) const {
    if (is_clique(v)) return v;
    if (is_pendant(v)) return v - k;
    return (v - 2 * k) / m;
  }
};

}  // namespace bridgeburn
