// Enhanced-state bases and differentials of the graded cochain complex of a
// graph over a truncated polynomial algebra Z[x]/(x^m), plus exact
// slice-at-a-time cohomology with a configurable size guard.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromahom/abelian.hpp"
#include "chromahom/graph.hpp"
#include "chromahom/matrix.hpp"

namespace chromahom {

// Differential rule applied when an added edge has both endpoints in one
// component of the spanned subgraph: identity (chromatic), zero (hat), or
// multiplication by x^(m-1) (dichromatic).
enum class Variant { chromatic, hat, dichromatic };

// Which convention the reported group follows. The two differ only in
// torsion (universal coefficients); matrices are transposed between them.
enum class Convention { cohomology, homology };

Variant variant_from_string(const std::string& name);
Convention convention_from_string(const std::string& name);
std::string to_string(Variant v);
std::string to_string(Convention c);

// A state is an edge subset s (bitmask over the canonical sorted edge list);
// an enhanced state decorates every connected component of the spanned
// subgraph [G:s] with an exponent in [0, m). Weights are listed in component
// order, components ordered by their smallest vertex.
struct EnhancedState {
  std::uint64_t edges = 0;
  std::vector<int> weights;
  bool operator==(const EnhancedState&) const = default;
};

// Vertex partition induced by an edge subset; component indices are assigned
// in order of each component's smallest vertex.
struct SubsetComponents {
  int count = 0;
  std::array<std::int8_t, kMaxVertices> comp{};
};
SubsetComponents subset_components(const SimpleGraph& g, std::uint64_t edge_mask);

// Sizes saturate at this sentinel instead of overflowing.
inline constexpr long long kSizeSaturated = 1LL << 62;

// Number of weight tuples of length k with entries in [0, m) summing to j.
long long count_weight_tuples(int k, int m, int j);

// census[k] = number of edge subsets of cardinality i spanning exactly k
// components. Independent of m and of the grading.
std::vector<long long> component_census(const SimpleGraph& g, int i);

// All enhanced states with |s| = i and weight sum j, in canonical order:
// edge subsets ascending (lexicographic on sorted index tuples), then weight
// tuples in ascending lexicographic order. Empty when no states exist.
std::vector<EnhancedState> enumerate_basis(const SimpleGraph& g, int m, int i, int j);
long long basis_size(const SimpleGraph& g, int m, int i, int j);

// Dichromatic counterparts. The dichromatic differential does not preserve
// the weight sum; it preserves grading = (m-1) * (i + k(s)) - weight sum,
// which equals v*(m-1) - (weight sum) in degrees below the girth.
std::vector<EnhancedState> enumerate_basis_dichromatic(const SimpleGraph& g, int m,
                                                       int i, int grading);
long long basis_size_dichromatic(const SimpleGraph& g, int m, int i, int grading);

// Matrix of d^i : C^i -> C^(i+1) within one grading slice, rows indexed by
// the degree-(i+1) basis and columns by the degree-i basis, both in
// canonical order. Entry rules: an edge joining two components merges them
// and adds exponents (zero when the sum reaches m); an edge inside a
// component acts per the variant. Sign is (-1)^t with t the number of subset
// edges preceding the added edge in the canonical edge order.
// For the dichromatic variant `j` is the preserved grading above.
SparseIntMat differential(const SimpleGraph& g, int m, int j, int i, Variant variant);

// Three adjacent chain groups and the two differentials between them —
// everything needed for the middle degree's cohomology and homology.
struct GradedSliceComplex {
  int m = 2;
  int j = 0;
  int i_center = 0;
  Variant variant = Variant::chromatic;
  std::array<long long, 3> ranks{0, 0, 0};  // dims in degrees i-1, i, i+1
  std::vector<EnhancedState> basis_below, basis_center, basis_above;
  SparseIntMat d_in;   // C^(i-1) -> C^i
  SparseIntMat d_out;  // C^i     -> C^(i+1)
};

GradedSliceComplex slice_complex(const SimpleGraph& g, int m, int j, int i_center,
                                 Variant variant = Variant::chromatic);

inline constexpr long long kDefaultMaxCells = 10'000'000;

// Result of one guarded slice computation. When the work estimate (the
// larger product of adjacent chain ranks, at least the middle rank itself)
// exceeds the cap, nothing is computed and `computed` stays false.
struct SliceOutcome {
  bool computed = false;
  AbelianGroup group;
  std::array<long long, 3> chain_ranks{0, 0, 0};
  long long guard_estimate = 0;
};

SliceOutcome slice_cohomology(const SimpleGraph& g, int m, int i, int j,
                              Variant variant = Variant::chromatic,
                              Convention convention = Convention::cohomology,
                              long long max_cells = kDefaultMaxCells);

// Smallest and largest grading with a nonempty degree-i chain group, or
// nullopt when every grading is empty.
std::optional<std::pair<int, int>> grading_range(const SimpleGraph& g, int m, int i,
                                                 Variant variant = Variant::chromatic);

}  // namespace chromahom
