#include "chromahom/state_complex.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "chromahom/snf.hpp"

namespace chromahom {

namespace {

long long sat_add(long long a, long long b) {
  long long s = 0;
  if (__builtin_add_overflow(a, b, &s) || s > kSizeSaturated) return kSizeSaturated;
  return s;
}

long long sat_mul(long long a, long long b) {
  long long p = 0;
  if (__builtin_mul_overflow(a, b, &p) || p > kSizeSaturated) return kSizeSaturated;
  return p;
}

// Bounded-composition counting table: cnt[k][j] = number of length-k tuples
// with entries in [0, m) and sum j. Doubles as the rank function turning a
// weight tuple into its position in the ascending lexicographic order.
struct WeightCounts {
  int m;
  int k_max;
  std::vector<std::vector<long long>> cnt;

  WeightCounts(int m_, int k_max_) : m(m_), k_max(k_max_), cnt(k_max_ + 1) {
    cnt[0] = {1};
    for (int k = 1; k <= k_max; ++k) {
      cnt[k].assign(static_cast<std::size_t>(m - 1) * k + 1, 0);
      for (int j = 0; j < static_cast<int>(cnt[k].size()); ++j) {
        long long total = 0;
        for (int a = 0; a < m && a <= j; ++a) {
          int rem = j - a;
          if (rem < static_cast<int>(cnt[k - 1].size()))
            total = sat_add(total, cnt[k - 1][rem]);
        }
        cnt[k][j] = total;
      }
    }
  }

  long long count(int k, int j) const {
    if (k < 0 || k > k_max || j < 0) return 0;
    if (j >= static_cast<int>(cnt[k].size())) return 0;
    return cnt[k][j];
  }

  long long rank(const std::vector<int>& w, int sum) const {
    long long r = 0;
    int rem = sum;
    const int k = static_cast<int>(w.size());
    for (int t = 0; t < k; ++t) {
      for (int b = 0; b < w[t]; ++b) r = sat_add(r, count(k - 1 - t, rem - b));
      rem -= w[t];
    }
    return r;
  }
};

// Visit weight tuples of length k, entries in [0, m), sum rem, in ascending
// lexicographic order.
template <class F>
void visit_weight_tuples(int t, int k, int m, int rem, std::vector<int>& w, F&& f) {
  if (t == k) {
    if (rem == 0) f(w);
    return;
  }
  const int lo = std::max(0, rem - (m - 1) * (k - 1 - t));
  const int hi = std::min(m - 1, rem);
  for (int a = lo; a <= hi; ++a) {
    w[t] = a;
    visit_weight_tuples(t + 1, k, m, rem - a, w, f);
  }
}

// Visit all size-i subsets of {0, ..., n-1} as bitmasks, in lexicographic
// order of the sorted index tuples.
template <class F>
void visit_subsets(int n, int i, F&& f) {
  if (i < 0 || i > n) return;
  if (i == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::vector<int> idx(i);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::uint64_t mask = 0;
    for (int b : idx) mask |= std::uint64_t{1} << b;
    f(mask);
    int t = i - 1;
    while (t >= 0 && idx[t] == n - i + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < i; ++u) idx[u] = idx[u - 1] + 1;
  }
}

void check_enumerable(const SimpleGraph& g, int m) {
  if (m < 2) throw std::invalid_argument("truncation order m must be at least 2");
  if (g.edge_count() > 64)
    throw std::invalid_argument("state enumeration supports at most 64 edges");
}

// Weight sum selected by the grading: the plain quantum grading for the
// chromatic and hat variants, the preserved combination for dichromatic.
int weight_sum_for(Variant variant, int m, int i, int k, int grading) {
  if (variant == Variant::dichromatic) return (m - 1) * (i + k) - grading;
  return grading;
}

int checked_dim(long long n, const char* what) {
  if (n > INT_MAX) throw std::length_error(std::string(what) + " exceeds 2^31 entries");
  return static_cast<int>(n);
}

std::vector<EnhancedState> enumerate_impl(const SimpleGraph& g, int m, int i,
                                          int grading, Variant variant) {
  check_enumerable(g, m);
  std::vector<EnhancedState> out;
  const int e = g.edge_count();
  if (i < 0 || i > e) return out;
  std::vector<int> w;
  visit_subsets(e, i, [&](std::uint64_t mask) {
    const SubsetComponents sc = subset_components(g, mask);
    const int ws = weight_sum_for(variant, m, i, sc.count, grading);
    if (ws < 0 || ws > (m - 1) * sc.count) return;
    w.assign(sc.count, 0);
    visit_weight_tuples(0, sc.count, m, ws, w,
                        [&](const std::vector<int>& tuple) {
                          out.push_back(EnhancedState{mask, tuple});
                        });
  });
  return out;
}

long long basis_size_impl(const SimpleGraph& g, int m, int i, int grading,
                          Variant variant) {
  check_enumerable(g, m);
  if (i < 0 || i > g.edge_count()) return 0;
  const std::vector<long long> census = component_census(g, i);
  const WeightCounts wc(m, static_cast<int>(census.size()) - 1);
  long long total = 0;
  for (int k = 0; k < static_cast<int>(census.size()); ++k) {
    if (census[k] == 0) continue;
    const int ws = weight_sum_for(variant, m, i, k, grading);
    total = sat_add(total, sat_mul(census[k], wc.count(k, ws)));
  }
  return total;
}

}  // namespace

Variant variant_from_string(const std::string& name) {
  if (name == "chromatic") return Variant::chromatic;
  if (name == "hat") return Variant::hat;
  if (name == "dichromatic") return Variant::dichromatic;
  throw std::invalid_argument("unknown variant: " + name);
}

Convention convention_from_string(const std::string& name) {
  if (name == "cohomology") return Convention::cohomology;
  if (name == "homology") return Convention::homology;
  throw std::invalid_argument("unknown convention: " + name);
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::chromatic: return "chromatic";
    case Variant::hat: return "hat";
    case Variant::dichromatic: return "dichromatic";
  }
  return "?";
}

std::string to_string(Convention c) {
  return c == Convention::cohomology ? "cohomology" : "homology";
}

SubsetComponents subset_components(const SimpleGraph& g, std::uint64_t edge_mask) {
  std::array<int, kMaxVertices> parent{};
  for (int v = 0; v < g.v; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint64_t rest = edge_mask; rest != 0; rest &= rest - 1) {
    const int idx = __builtin_ctzll(rest);
    const auto [a, b] = g.edges[static_cast<std::size_t>(idx)];
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  SubsetComponents sc;
  std::array<std::int8_t, kMaxVertices> label{};
  label.fill(-1);
  for (int v = 0; v < g.v; ++v) {
    const int r = find(v);
    if (label[r] < 0) label[r] = static_cast<std::int8_t>(sc.count++);
    sc.comp[v] = label[r];
  }
  return sc;
}

long long count_weight_tuples(int k, int m, int j) {
  if (m < 2) throw std::invalid_argument("truncation order m must be at least 2");
  if (k < 0 || j < 0) return 0;
  return WeightCounts(m, k).count(k, j);
}

std::vector<long long> component_census(const SimpleGraph& g, int i) {
  std::vector<long long> census(static_cast<std::size_t>(g.v) + 1, 0);
  if (i < 0 || i > g.edge_count() || g.edge_count() > 64) return census;
  visit_subsets(g.edge_count(), i, [&](std::uint64_t mask) {
    ++census[static_cast<std::size_t>(subset_components(g, mask).count)];
  });
  return census;
}

std::vector<EnhancedState> enumerate_basis(const SimpleGraph& g, int m, int i, int j) {
  return enumerate_impl(g, m, i, j, Variant::chromatic);
}

long long basis_size(const SimpleGraph& g, int m, int i, int j) {
  return basis_size_impl(g, m, i, j, Variant::chromatic);
}

std::vector<EnhancedState> enumerate_basis_dichromatic(const SimpleGraph& g, int m,
                                                       int i, int grading) {
  return enumerate_impl(g, m, i, grading, Variant::dichromatic);
}

long long basis_size_dichromatic(const SimpleGraph& g, int m, int i, int grading) {
  return basis_size_impl(g, m, i, grading, Variant::dichromatic);
}

SparseIntMat differential(const SimpleGraph& g, int m, int j, int i, Variant variant) {
  check_enumerable(g, m);
  if (i < 0) throw std::invalid_argument("differential degree must be nonnegative");
  const int e = g.edge_count();
  const WeightCounts wc(m, g.v);

  // Index the target basis: per subset of size i+1, its starting offset in
  // the canonical order together with its component structure.
  struct TargetInfo {
    long long offset = 0;
    SubsetComponents comps;
    int weight_sum = 0;
  };
  std::unordered_map<std::uint64_t, TargetInfo> targets;
  long long target_dim = 0;
  visit_subsets(e, i + 1, [&](std::uint64_t mask) {
    TargetInfo info;
    info.offset = target_dim;
    info.comps = subset_components(g, mask);
    info.weight_sum = weight_sum_for(variant, m, i + 1, info.comps.count, j);
    targets.emplace(mask, info);
    target_dim = sat_add(target_dim, wc.count(info.comps.count, info.weight_sum));
  });

  SparseIntMat d(checked_dim(target_dim, "target chain group"),
                 checked_dim(basis_size_impl(g, m, i, j, variant), "chain group"));

  long long col = 0;
  std::vector<int> scratch, tw, rep;
  visit_subsets(e, i, [&](std::uint64_t mask) {
    const SubsetComponents sc = subset_components(g, mask);
    const int ws = weight_sum_for(variant, m, i, sc.count, j);
    if (ws < 0 || ws > (m - 1) * sc.count) return;
    // Smallest vertex of each component = its representative.
    rep.assign(static_cast<std::size_t>(sc.count), -1);
    for (int v = 0; v < g.v; ++v)
      if (rep[static_cast<std::size_t>(sc.comp[v])] < 0)
        rep[static_cast<std::size_t>(sc.comp[v])] = v;
    scratch.assign(static_cast<std::size_t>(sc.count), 0);
    visit_weight_tuples(0, sc.count, m, ws, scratch, [&](const std::vector<int>& w) {
      for (int ei = 0; ei < e; ++ei) {
        const std::uint64_t bit = std::uint64_t{1} << ei;
        if (mask & bit) continue;
        const int sign =
            (__builtin_popcountll(mask & (bit - 1)) % 2 == 0) ? 1 : -1;
        const auto [a, b] = g.edges[static_cast<std::size_t>(ei)];
        const int ca = sc.comp[a], cb = sc.comp[b];
        const TargetInfo& ti = targets.at(mask | bit);
        if (ca != cb) {
          // Merge: exponents add in Z[x]/(x^m).
          if (w[static_cast<std::size_t>(ca)] + w[static_cast<std::size_t>(cb)] >= m)
            continue;
          tw.assign(static_cast<std::size_t>(ti.comps.count), 0);
          for (int c = 0; c < sc.count; ++c)
            tw[static_cast<std::size_t>(
                ti.comps.comp[rep[static_cast<std::size_t>(c)]])] +=
                w[static_cast<std::size_t>(c)];
          d.set(checked_dim(ti.offset + wc.rank(tw, ti.weight_sum), "row index"),
                static_cast<int>(col), sign);
        } else if (variant == Variant::chromatic) {
          // Same component: identity. The vertex partition is unchanged, so
          // the weight tuple carries over verbatim.
          d.set(checked_dim(ti.offset + wc.rank(w, ti.weight_sum), "row index"),
                static_cast<int>(col), sign);
        } else if (variant == Variant::dichromatic) {
          // Same component: multiplication by x^(m-1), nonzero only on
          // weight-zero components.
          if (w[static_cast<std::size_t>(ca)] != 0) continue;
          tw = w;
          tw[static_cast<std::size_t>(ca)] = m - 1;
          d.set(checked_dim(ti.offset + wc.rank(tw, ti.weight_sum), "row index"),
                static_cast<int>(col), sign);
        }
        // hat: same-component entries vanish.
      }
      ++col;
    });
  });
  d.finalize();
  return d;
}

GradedSliceComplex slice_complex(const SimpleGraph& g, int m, int j, int i_center,
                                 Variant variant) {
  check_enumerable(g, m);
  if (i_center < 0) throw std::invalid_argument("slice degree must be nonnegative");
  GradedSliceComplex s;
  s.m = m;
  s.j = j;
  s.i_center = i_center;
  s.variant = variant;
  s.basis_below = enumerate_impl(g, m, i_center - 1, j, variant);
  s.basis_center = enumerate_impl(g, m, i_center, j, variant);
  s.basis_above = enumerate_impl(g, m, i_center + 1, j, variant);
  s.ranks = {static_cast<long long>(s.basis_below.size()),
             static_cast<long long>(s.basis_center.size()),
             static_cast<long long>(s.basis_above.size())};
  if (i_center == 0) {
    s.d_in = SparseIntMat(static_cast<int>(s.ranks[1]), 0);
  } else {
    s.d_in = differential(g, m, j, i_center - 1, variant);
  }
  if (i_center >= g.edge_count()) {
    s.d_out = SparseIntMat(static_cast<int>(s.ranks[2]), static_cast<int>(s.ranks[1]));
  } else {
    s.d_out = differential(g, m, j, i_center, variant);
  }
  return s;
}

SliceOutcome slice_cohomology(const SimpleGraph& g, int m, int i, int j,
                              Variant variant, Convention convention,
                              long long max_cells) {
  check_enumerable(g, m);
  if (i < 0) throw std::invalid_argument("cohomological degree must be nonnegative");
  SliceOutcome out;
  out.chain_ranks = {basis_size_impl(g, m, i - 1, j, variant),
                     basis_size_impl(g, m, i, j, variant),
                     basis_size_impl(g, m, i + 1, j, variant)};
  out.guard_estimate =
      std::max({sat_mul(out.chain_ranks[0], out.chain_ranks[1]),
                sat_mul(out.chain_ranks[1], out.chain_ranks[2]), out.chain_ranks[1]});
  if (out.guard_estimate > max_cells) return out;  // computed stays false
  if (out.chain_ranks[1] == 0) {
    out.computed = true;
    out.group = AbelianGroup{};
    return out;
  }
  SparseIntMat d_in = i == 0 ? SparseIntMat(static_cast<int>(out.chain_ranks[1]), 0)
                             : differential(g, m, j, i - 1, variant);
  SparseIntMat d_out =
      i >= g.edge_count()
          ? SparseIntMat(static_cast<int>(out.chain_ranks[2]),
                         static_cast<int>(out.chain_ranks[1]))
          : differential(g, m, j, i, variant);
  if (convention == Convention::cohomology) {
    out.group = homology_pair(d_out, d_in);
  } else {
    out.group = homology_pair(d_in.transposed(), d_out.transposed());
  }
  out.computed = true;
  return out;
}

std::optional<std::pair<int, int>> grading_range(const SimpleGraph& g, int m, int i,
                                                 Variant variant) {
  check_enumerable(g, m);
  if (i < 0 || i > g.edge_count()) return std::nullopt;
  const std::vector<long long> census = component_census(g, i);
  int k_min = -1, k_max = -1;
  for (int k = 0; k < static_cast<int>(census.size()); ++k)
    if (census[k] > 0) {
      if (k_min < 0) k_min = k;
      k_max = k;
    }
  if (k_max < 0) return std::nullopt;
  int lo, hi;
  if (variant == Variant::dichromatic) {
    lo = (m - 1) * i;             // every weight maxed out
    hi = (m - 1) * (i + k_max);   // every weight zero
  } else {
    lo = 0;
    hi = (m - 1) * k_max;
  }
  while (lo <= hi && basis_size_impl(g, m, i, lo, variant) == 0) ++lo;
  while (hi >= lo && basis_size_impl(g, m, i, hi, variant) == 0) --hi;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace chromahom
