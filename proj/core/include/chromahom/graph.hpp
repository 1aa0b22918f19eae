// Simple graphs with a canonical edge order, the combinatorial statistics
// consumed by the closed-form formulas, and the gluing products.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chromahom {

constexpr int kMaxVertices = 64;
constexpr int kGirthInf = 1 << 29;  // printed as "inf"; forests have no cycle

struct SimpleGraph {
  int v = 0;
  // Canonical order: pairs (u,w) with u < w, sorted lexicographically.
  std::vector<std::pair<int, int>> edges;
  bool collapsed_duplicates = false;  // set when input repeated an edge
  std::vector<std::uint64_t> adj;     // bitmask adjacency rows

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int w) const {
    return u != w && (adj[u] >> w) & 1ULL;
  }
  // Index into the canonical edge list, -1 if absent.
  int edge_index(int u, int w) const;
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
};

// Validates endpoints, rejects loops, collapses duplicates (flag set),
// sorts edges canonically.
SimpleGraph build_graph(int v, std::vector<std::pair<int, int>> edges);

struct GraphStats {
  int v = 0;
  int e = 0;
  long long t0 = 0, t1 = 0, t2 = 0, t3 = 0;  // triples with 0/1/2/3 edges
  long long d1 = 0, d2 = 0, dge3 = 0;        // ordered pairs at distance 1/2/>=3
  long long sq = 0;                           // 4-cycles (per vertex 4-subset, up to 3)
  long long sqprime = 0;                      // 4-cycles having a diagonal
  int girth = kGirthInf;
  int p0 = 0;    // connected components
  int p0bi = 0;  // bipartite components
  int p1 = 0;    // cyclomatic number E - v + p0
};

GraphStats stats(const SimpleGraph& g);

std::vector<int> component_labels(const SimpleGraph& g);
// BFS distances from src; -1 for unreachable.
std::vector<int> bfs_distances(const SimpleGraph& g, int src);

// Sorted vertex triples spanning three edges.
std::vector<std::array<int, 3>> triangles(const SimpleGraph& g);
// Number of triangles containing the given canonical edge.
int triangles_containing(const SimpleGraph& g, int edge_idx);

struct FourCycle {
  // Cycle order a-b-c-d-a; normalized to start at the smallest vertex with
  // its smaller neighbor second.
  std::array<int, 4> verts;
  bool has_diagonal = false;
};
std::vector<FourCycle> four_cycles(const SimpleGraph& g);

// Gluing products. New vertices keep G's labels; H's surviving vertices are
// appended in increasing original order.
SimpleGraph one_vertex_product(const SimpleGraph& g, int vg,
                               const SimpleGraph& h, int wh);
// Identifies v1 with w1 and v2 with w2; flip pairs v1 with w2 instead
// (Whitney flip).
SimpleGraph two_vertex_product(const SimpleGraph& g, int v1, int v2,
                               const SimpleGraph& h, int w1, int w2, bool flip);
// Identifies the endpoints of edge eg with those of eh, endpoint-to-endpoint
// in canonical (min,max) order; flip reverses the pairing.
SimpleGraph edge_product(const SimpleGraph& g, int eg, const SimpleGraph& h,
                         int eh, bool flip = false);

// perm[old] = new label.
SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm);
// Brute-force isomorphism with degree pruning; supported for v <= 10.
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Text format: line 1 "v E", then E lines "u w", 0-based.
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph parse_edge_list(const std::string& text);
SimpleGraph load_edge_list(const std::string& path);

}  // namespace chromahom
