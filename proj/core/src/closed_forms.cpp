#include "chromahom/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "chromahom/cell.hpp"
#include "chromahom/families.hpp"

namespace chromahom {

namespace {

AbelianGroup zero_group() { return AbelianGroup{0, {}}; }
AbelianGroup free_group(long long rank) {
  if (rank < 0) throw std::logic_error("closed form produced a negative rank");
  return AbelianGroup{static_cast<int>(rank), {}};
}

std::vector<long long> repeated(long long value, long long count) {
  if (count < 0) throw std::logic_error("closed form produced a negative torsion count");
  return std::vector<long long>(static_cast<std::size_t>(count), value);
}

}  // namespace

AbelianGroup hochschild_Am(int m, int i, int j) {
  if (m < 2) throw std::invalid_argument("hochschild_Am: need m >= 2");
  if (i < 0 || j < 0) return zero_group();
  if (i % 2 == 1 && 2LL * j == static_cast<long long>(i + 1) * m)
    return AbelianGroup::from_factors(0, {m});
  if (i == 0 && j == 0) return free_group(1);
  const long long lo = static_cast<long long>(i / 2) * m;
  if (lo + 1 <= j && j <= lo + m - 1) return free_group(1);
  return zero_group();
}

AbelianGroup polygon_cohomology(int v, int m, int i, int j, Variant variant) {
  if (v < 3) throw std::invalid_argument("polygon_cohomology: need v >= 3");
  if (m < 2) throw std::invalid_argument("polygon_cohomology: need m >= 2");
  if (i < 1 || i > v - 1)
    throw std::invalid_argument("polygon_cohomology: i out of range [1, v-1]");
  if (variant == Variant::dichromatic)
    throw std::invalid_argument(
        "polygon_cohomology: no closed form for the dichromatic variant");
  if (variant == Variant::chromatic && i == v - 1) return zero_group();
  return hochschild_Am(m, v - 1 - i, j);
}

TopPair a2_theorem31(const SimpleGraph& g) {
  const GraphStats st = stats(g);
  const long long odd_components = st.p0 - st.p0bi;
  TopPair out;
  out.h0 = free_group(st.p0bi);
  out.h1 = AbelianGroup::from_factors(
      static_cast<int>(st.p1 - odd_components), repeated(2, odd_components));
  return out;
}

TopPair a3_theorem41(const SimpleGraph& g) {
  const GraphStats st = stats(g);
  const CellPresentation cells = presentation(g, CellVariant::delta4);
  const AbelianGroup cells_h1 = h1(cells);
  const long long cells_h2 = h2(cells);
  const long long half_d2 = st.d2 / 2;  // d2 counts ordered pairs, so even
  TopPair out;
  out.h0 = free_group(cells_h1.rank + st.t0 + half_d2 + st.dge3);
  const long long rank1 = cells_h2 + st.t2 - half_d2 - st.sq;
  if (rank1 < 0) throw std::logic_error("a3_theorem41: negative free rank");
  out.h1 = AbelianGroup::from_factors(static_cast<int>(rank1),
                                      cells_h1.invariant_factors);
  return out;
}

SquareCordialResult square_cordial_form(const SimpleGraph& g) {
  const GraphStats st = stats(g);
  std::string obstruction;
  if (g.v == 0 || st.p0 != 1) {
    obstruction = "graph is not connected";
  } else if (!square_cordial(g)) {
    obstruction = "some 4-cycle has no diagonal";
  } else {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (triangles_containing(g, e) == 0) {
        obstruction = "some edge lies on no triangle";
        break;
      }
    }
  }
  if (!obstruction.empty())
    return {a3_theorem41(g).h1, false, "generic formula (" + obstruction + ")"};

  const auto [components, coherent] = coherence(g);
  const int dim3 =
      h1_dim_zp(presentation(g, CellVariant::hat34), 3);
  const long long two_count = components - coherent;
  const long long three_count = g.v - 1 + dim3 - coherent;
  const long long rank = coherent + st.t2 + 2 * st.t3 - st.e - st.d2 / 2;
  if (two_count < 0 || three_count < 0 || rank < 0)
    return {a3_theorem41(g).h1, false,
            "generic formula (coherence counts out of range)"};
  std::vector<long long> factors = repeated(2, two_count);
  const auto threes = repeated(3, three_count);
  factors.insert(factors.end(), threes.begin(), threes.end());
  return {AbelianGroup::from_factors(static_cast<int>(rank), std::move(factors)),
          true, "coherence-count formula"};
}

AbelianGroup complete_graph_top(int n) {
  if (n < 3) throw std::invalid_argument("complete_graph_top: need n >= 3");
  if (n == 3) return AbelianGroup::from_factors(0, {3});
  const long long rank =
      static_cast<long long>(n) * (n - 1) * (2 * n - 7) / 6;
  std::vector<long long> factors = repeated(3, n - 1);
  factors.push_back(2);
  return AbelianGroup::from_factors(static_cast<int>(rank), std::move(factors));
}

AbelianGroup wheel_top(int n) {
  if (n < 4) throw std::invalid_argument("wheel_top: need n >= 4");
  if (n == 4) return a3_theorem41(wheel_graph(4)).h1;
  if (n % 2 == 1) return AbelianGroup::from_factors(n, repeated(3, n - 2));
  std::vector<long long> factors = repeated(3, n - 1);
  factors.push_back(2);
  return AbelianGroup::from_factors(n - 1, std::move(factors));
}

AbelianGroup gk_top(int k) {
  if (k < 2)
    throw std::invalid_argument(
        "gk_top: formula valid for k >= 2 (the k = 1 free rank differs)");
  std::vector<long long> factors = repeated(3, 4LL * k + 2);
  factors.push_back(6LL * k + 6);
  return AbelianGroup::from_factors(5 * k + 5, std::move(factors));
}

bool vanishing_applies(const SimpleGraph& g, int m, int i, int j) {
  if (m < 3 || i <= 0 || i >= stats(g).girth) return false;
  return j >= static_cast<long long>(m - 1) * (g.v - i);
}

}  // namespace chromahom
