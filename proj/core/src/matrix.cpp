#include "chromahom/matrix.hpp"

#include <algorithm>
#include <map>

namespace chromahom {

namespace {
using int128 = __int128;
constexpr long long kEntryCap = 1LL << 59;

long long checked_narrow(int128 v, const char* what) {
  if (v > int128(kEntryCap) || v < -int128(kEntryCap))
    throw std::overflow_error(what);
  return static_cast<long long>(v);
}
}  // namespace

void SparseIntMat::finalize() {
  for (auto& row : rows) {
    if (row.empty()) continue;
    std::sort(row.begin(), row.end());
    std::vector<std::pair<int, long long>> merged;
    merged.reserve(row.size());
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.push_back({c, v});
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](auto& e) { return e.second == 0; }),
                 merged.end());
    row = std::move(merged);
  }
}

SparseIntMat SparseIntMat::transposed() const {
  SparseIntMat t(n_cols, n_rows);
  for (int i = 0; i < n_rows; ++i)
    for (auto& [c, v] : rows[i]) t.rows[c].push_back({i, v});
  for (auto& row : t.rows) std::sort(row.begin(), row.end());
  return t;
}

SparseIntMat SparseIntMat::from_dense(const std::vector<std::vector<long long>>& d) {
  int r = static_cast<int>(d.size());
  int c = r ? static_cast<int>(d[0].size()) : 0;
  SparseIntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(d[i].size()) != c)
      throw std::invalid_argument("from_dense: ragged rows");
    for (int j = 0; j < c; ++j)
      if (d[i][j] != 0) m.rows[i].push_back({j, d[i][j]});
  }
  return m;
}

std::vector<std::vector<long long>> SparseIntMat::to_dense() const {
  std::vector<std::vector<long long>> d(n_rows, std::vector<long long>(n_cols, 0));
  for (int i = 0; i < n_rows; ++i)
    for (auto& [c, v] : rows[i]) d[i][c] = v;
  return d;
}

SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b) {
  if (a.n_cols != b.n_rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseIntMat out(a.n_rows, b.n_cols);
  std::map<int, int128> acc;
  for (int i = 0; i < a.n_rows; ++i) {
    acc.clear();
    for (auto& [k, va] : a.rows[i])
      for (auto& [j, vb] : b.rows[k]) acc[j] += int128(va) * vb;
    for (auto& [j, v] : acc)
      if (v != 0) out.rows[i].push_back({j, checked_narrow(v, "multiply: overflow")});
  }
  return out;
}

ZMat multiply(const ZMat& a, const ZMat& b) {
  if (a.n_cols != b.n_rows) throw std::invalid_argument("ZMat multiply: shape mismatch");
  ZMat out(a.n_rows, b.n_cols);
  for (int i = 0; i < a.n_rows; ++i)
    for (int k = 0; k < a.n_cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.n_cols; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

mpz_class determinant(const ZMat& m) {
  if (m.n_rows != m.n_cols) throw std::invalid_argument("determinant: not square");
  int n = m.n_rows;
  if (n == 0) return 1;
  ZMat a = m;  // Bareiss fraction-free elimination
  mpz_class prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (a.at(t, t) == 0) {
      int found = -1;
      for (int i = t + 1; i < n; ++i)
        if (a.at(i, t) != 0) { found = i; break; }
      if (found < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(found, j));
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(t, t);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace chromahom
