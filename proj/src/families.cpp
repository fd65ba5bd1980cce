#include "bridgeburn/families.hpp"

#include <array>
#include <string>

namespace bridgeburn {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kGrid, "grid"},
    {Family::kTorus, "torus"},
    {Family::kHypercube, "hypercube"},
    {Family::kStalemate, "stalemate"},
    {Family::kCaptureFamily, "capture_family"},
    {Family::kSpider, "spider"},
}};

// Generous limits so that a typo cannot ask for a billion-vertex graph.
constexpr int kMaxVertices = 1 << 16;

void require(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) throw InputError(std::string(family_name(spec.family)) + ": " + what);
}

void require_arity(const FamilySpec& spec, std::size_t arity) {
  require(spec.params.size() == arity, spec,
          "expected " + std::to_string(arity) + " parameter(s), got " + std::to_string(spec.params.size()));
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

Family family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kNames)
    if (n == name) return fam;
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

FamilySpec FamilySpec::parse(std::string_view name, const std::vector<int>& params) {
  FamilySpec spec{family_from_name(name), params};
  spec.validate();
  return spec;
}

void FamilySpec::validate() const {
  const auto& p = params;
  switch (family) {
    case Family::kPath:
      require_arity(*this, 1);
      require(p[0] >= 1 && p[0] <= kMaxVertices, *this, "n must be in [1, 65536]");
      break;
    case Family::kCycle:
      require_arity(*this, 1);
      require(p[0] >= 3 && p[0] <= kMaxVertices, *this, "n must be at least 3");
      break;
    case Family::kComplete:
      require_arity(*this, 1);
      require(p[0] >= 1 && p[0] <= 1024, *this, "n must be in [1, 1024]");
      break;
    case Family::kCompleteBipartite:
      require_arity(*this, 2);
      require(p[0] >= 1 && p[1] >= 1 && p[0] + p[1] <= 1024, *this, "part sizes must be positive");
      break;
    case Family::kGrid:
      require_arity(*this, 2);
      require(p[0] >= 1 && p[1] >= 1 && p[0] * static_cast<long>(p[1]) <= kMaxVertices, *this,
              "dimensions must be positive");
      break;
    case Family::kTorus:
      require_arity(*this, 2);
      require(p[0] >= 3 && p[1] >= 3 && p[0] * static_cast<long>(p[1]) <= kMaxVertices, *this,
              "both dimensions must be at least 3");
      break;
    case Family::kHypercube:
      require_arity(*this, 1);
      require(p[0] >= 1 && p[0] <= 16, *this, "dimension must be in [1, 16]");
      break;
    case Family::kStalemate:
      require_arity(*this, 0);
      break;
    case Family::kCaptureFamily:
      require_arity(*this, 2);
      require(p[0] >= 1 && p[1] >= 1 && p[1] * static_cast<long>(p[0] + 2) <= kMaxVertices, *this,
              "m and k must be positive");
      require((p[0] * (p[1] - 1)) % 2 == 0, *this, "m(k-1) must be even");
      break;
    case Family::kSpider: {
      require(!p.empty(), *this, "at least one leg length is required");
      long total = 1;
      for (int len : p) {
        require(len >= 1, *this, "leg lengths must be positive");
        total += len;
      }
      require(total <= kMaxVertices, *this, "too many vertices");
      break;
    }
  }
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  EdgeList edges;
  int n = 0;
  switch (spec.family) {
    case Family::kPath:
      n = p[0];
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::kCycle:
      n = p[0];
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case Family::kComplete:
      n = p[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::kCompleteBipartite:
      n = p[0] + p[1];
      for (int i = 0; i < p[0]; ++i)
        for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
      break;
    case Family::kGrid: {
      const int rows = p[0], cols = p[1];
      n = rows * cols;
      for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
          if (i + 1 < cols) edges.emplace_back(grid_index(cols, i, j), grid_index(cols, i + 1, j));
          if (j + 1 < rows) edges.emplace_back(grid_index(cols, i, j), grid_index(cols, i, j + 1));
        }
      break;
    }
    case Family::kTorus: {
      const int rows = p[0], cols = p[1];
      n = rows * cols;
      for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
          edges.emplace_back(grid_index(cols, i, j), grid_index(cols, (i + 1) % cols, j));
          edges.emplace_back(grid_index(cols, i, j), grid_index(cols, i, (j + 1) % rows));
        }
      break;
    }
    case Family::kHypercube: {
      const int d = p[0];
      n = 1 << d;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
          if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
      break;
    }
    case Family::kStalemate:
      n = 6;
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {3, 5}};
      break;
    case Family::kCaptureFamily: {
      const CaptureFamilyLayout L{p[0], p[1]};
      n = L.vertex_count();
      for (int i = 0; i < L.k; ++i)
        for (int j = i + 1; j < L.k; ++j) edges.emplace_back(L.clique(i), L.clique(j));
      for (int i = 0; i < L.k; ++i) edges.emplace_back(L.clique(i), L.pendant(i));
      for (int i = 0; i < L.k; ++i)
        for (int a = 0; a < L.m; ++a) edges.emplace_back(L.clique(i), L.part_vertex(i, a));
      for (int i = 0; i < L.k; ++i)
        for (int a = 0; a < L.m; ++a)
          for (int j = i + 1; j < L.k; ++j)
            for (int b = 0; b < L.m; ++b) edges.emplace_back(L.part_vertex(i, a), L.part_vertex(j, b));
      break;
    }
    case Family::kSpider: {
      n = 1;
      for (int len : p) {
        Vertex prev = 0;
        for (int s = 0; s < len; ++s) {
          edges.emplace_back(prev, n);
          prev = n++;
        }
      }
      break;
    }
  }
  return build_graph(n, edges);
}

}  // namespace bridgeburn
