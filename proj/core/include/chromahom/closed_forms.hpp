// Closed-form formulas for cohomology groups that the library otherwise
// computes by brute force.  Every function here returns an answer derived
// from a formula (polynomial in the graph's census numbers plus the homology
// of a small cell presentation); the test suite and the `verify` command
// cross-check them against the chain-level computation.
#pragma once

#include <string>

#include "chromahom/abelian.hpp"
#include "chromahom/graph.hpp"
#include "chromahom/state_complex.hpp"

namespace chromahom {

// Hochschild homology of the truncated polynomial ring Z[x]/(x^m) in
// bigrading (i, j): Z_m when i is odd and j = (i+1)m/2; Z when i = j = 0 or
// floor(i/2)*m + 1 <= j <= floor(i/2)*m + m - 1; zero otherwise.
// Requires m >= 2; i or j negative simply yields the zero group.
AbelianGroup hochschild_Am(int m, int i, int j);

// Cohomology of the v-gon in bidegree (i, j), valid for 1 <= i <= v - 1
// (throws std::invalid_argument otherwise; requires v >= 3).
// For 0 < i < v-1 both variants equal the Hochschild group in complementary
// degree (v-1-i, j).  At i = v-1 the chromatic group vanishes while the
// variant without same-component multiplication keeps one free generator in
// each grading j = 0..m-1.
AbelianGroup polygon_cohomology(int v, int m, int i, int j,
                                Variant variant = Variant::chromatic);

// The two groups in the distinguished grading J = (m-1)(v-2)+1 that the
// closed forms below describe: H^{0,J} and H^{1,J}.
struct TopPair {
  AbelianGroup h0;
  AbelianGroup h1;
};

// m = 2, grading j = v - 1, any simple graph:
//   H^0 = Z^{#bipartite components},
//   H^1 = Z^{p1 - (p0 - p0bi)} + Z_2^{p0 - p0bi}.
TopPair a2_theorem31(const SimpleGraph& g);

// m = 3, grading j = 2v - 3, any simple graph.  H^0 is free of rank
//   rank H_1(cells) + t0 + d2/2 + dge3;
// H^1 has the torsion of H_1(cells) and free rank
//   rank H_2(cells) + t2 - d2/2 - sq.
TopPair a3_theorem41(const SimpleGraph& g);

// Specialization of the m = 3 top formula that avoids integer homology of
// the cell presentation entirely, using only coherence counts and a mod-3
// dimension.  Valid when the graph is connected, every edge lies on a
// triangle, and every 4-cycle has a diagonal; otherwise falls back to
// a3_theorem41 and says so.
struct SquareCordialResult {
  AbelianGroup h1;
  bool used_formula = false;
  std::string path;  // human-readable note on which route produced h1
};
SquareCordialResult square_cordial_form(const SimpleGraph& g);

// H^{1,2n-3} over m = 3 for the complete graph on n >= 3 vertices.
AbelianGroup complete_graph_top(int n);

// H^{1,2n-3} over m = 3 for the wheel on n vertices (hub joined to an
// (n-1)-gon), n >= 4.  The parity formula holds from n = 5 up; n = 4 is
// computed via a3_theorem41.
AbelianGroup wheel_top(int n);

// H^{1,8k+5} over m = 3 for the k-th member of the square-band family
// (family descriptor "Gk:k"), valid for k >= 2: Z_{6k+6} + Z_3^{4k+2} +
// Z^{5k+5}.  Throws std::invalid_argument for k < 2 (the k = 1 group has a
// different free rank).
AbelianGroup gk_top(int k);

// True when the vanishing criterion applies to (g, m, i, j): m >= 3,
// 0 < i < girth(g), and j >= (m-1)(v-i) force H^{i,j} = 0.
bool vanishing_applies(const SimpleGraph& g, int m, int i, int j);

}  // namespace chromahom
