// Sparse integer matrices (row-major adjacency of nonzeros) and a small
// dense arbitrary-precision matrix used by the Smith normal form kernel.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chromahom {

struct SparseIntMat {
  int n_rows = 0;
  int n_cols = 0;
  // Each row sorted by column index, values nonzero.
  std::vector<std::vector<std::pair<int, long long>>> rows;

  SparseIntMat() = default;
  SparseIntMat(int r, int c) : n_rows(r), n_cols(c), rows(r) {}

  void set(int r, int c, long long v) {
    if (r < 0 || r >= n_rows || c < 0 || c >= n_cols)
      throw std::out_of_range("SparseIntMat::set");
    if (v != 0) rows[r].push_back({c, v});
  }

  // Call once after building with set(); merges duplicate columns.
  void finalize();

  std::size_t nnz() const {
    std::size_t n = 0;
    for (auto& r : rows) n += r.size();
    return n;
  }

  bool is_zero() const { return nnz() == 0; }

  SparseIntMat transposed() const;

  static SparseIntMat from_dense(const std::vector<std::vector<long long>>& d);
  std::vector<std::vector<long long>> to_dense() const;
};

// Exact product (checked 128-bit accumulation).
SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b);

struct ZMat {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<mpz_class> a;

  ZMat() = default;
  ZMat(int r, int c) : n_rows(r), n_cols(c), a(static_cast<std::size_t>(r) * c) {}

  mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * n_cols + j]; }
  const mpz_class& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n_cols + j];
  }

  static ZMat identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

ZMat multiply(const ZMat& a, const ZMat& b);
mpz_class determinant(const ZMat& m);  // fraction-free elimination

}  // namespace chromahom
