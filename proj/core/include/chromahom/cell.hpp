// Two-dimensional cell complexes presented by relation matrices over the
// (coherently oriented) edges of a graph: triangle- and square-based
// presentations, their first and second homology, coherence of the triangle
// adjacency structure, and quadrilateral surface meshes.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "chromahom/abelian.hpp"
#include "chromahom/graph.hpp"
#include "chromahom/matrix.hpp"

namespace chromahom {

// Which 2-cells are attached, and over which generator set:
//   delta4        two skew rows (e1-2*e2+e3, e1+e2-2*e3) per triangle + one
//                 row per 4-cycle;
//   delta4_prime  same triangle rows, 4-cycle rows only for diagonal-free
//                 4-cycles;
//   t34           one row e1+e2+e3 per triangle + one row per 4-cycle;
//   t34_prime     as t34 with diagonal-free 4-cycles only;
//   quot34        edges of every triangle identified coherently; generators
//                 are the identified classes, rows are rewritten 4-cycle
//                 rows plus a row 2e for every class forced to equal its own
//                 reverse;
//   hat34         as t34 but keeping the vertices of the graph as 0-cells;
//   hat_quot34    as quot34 but keeping the (identified) vertices;
//   four_only     one row per 4-cycle, no triangle cells.
// String tags: delta4, delta4-prime, 34, 34-prime, (3)4, hat-34, hat-(3)4,
// 4-only.
enum class CellVariant {
  delta4,
  delta4_prime,
  t34,
  t34_prime,
  quot34,
  hat34,
  hat_quot34,
  four_only,
};

CellVariant cell_variant_from_string(const std::string& tag);
std::string to_string(CellVariant v);

struct CellPresentation {
  CellVariant variant = CellVariant::delta4;
  int generators = 0;        // edge classes after any identification
  SparseIntMat relations;    // one row per 2-cell, columns = generators
  // When vertices are kept as 0-cells, H_1 is a subquotient of the cycle
  // space instead of all of Z^generators.
  bool keep_vertices = false;
  SparseIntMat vertex_incidence;  // vertex classes x generators, +head -tail
};

CellPresentation presentation(const SimpleGraph& g, CellVariant variant);

// H_1 of the complex: coker of the relations inside Z^generators, restricted
// to the cycle space when vertices are kept.
AbelianGroup h1(const CellPresentation& p);
// H_2 is free; returns its rank (relation rows minus their Z-rank).
long long h2(const CellPresentation& p);
// dim over Z_p of H_1 with Z_p coefficients.
int h1_dim_zp(const CellPresentation& p, long long p_prime);

// Triangles of G as nodes, adjacent when they share an edge. A component is
// coherent when propagating the per-triangle edge identifications around it
// never forces an edge class to equal its own reverse.
struct TriangleGraph {
  std::vector<std::array<int, 3>> triangles;  // sorted vertex triples
  std::vector<int> component;                 // per-triangle component index
  int components = 0;
  std::vector<bool> coherent;                 // per component
};

TriangleGraph triangle_graph(const SimpleGraph& g);

// (number of triangle-graph components, number of coherent ones).
std::pair<int, int> coherence(const SimpleGraph& g);

// True when every 4-cycle has a diagonal.
bool square_cordial(const SimpleGraph& g);

// Quadrilateral surface mesh: an explicit face list over an edge list, used
// where the 2-cells are input data rather than cycles found in the graph.
struct QuadMesh {
  SimpleGraph graph;
  // Face walks as signed 1-based edge indices (sign = traversal direction
  // against the stored edge orientation); each face is a closed walk.
  std::vector<std::array<int, 4>> faces;
};

QuadMesh load_quad_mesh(const std::string& path);
QuadMesh parse_quad_mesh(const std::string& text);

// Faces as 2-cells over the mesh graph with vertices kept: the surface's
// own H_1/H_2 feed the h1/h2 functions above.
CellPresentation mesh_presentation(const QuadMesh& mesh);

}  // namespace chromahom
