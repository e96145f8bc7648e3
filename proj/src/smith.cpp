#include "qhd/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhd {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor-free remainder: pick quotient minimizing |a - q*b|
Int nearest_quot(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (iabs(r) * 2 > iabs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

std::vector<Int> smith_diagonal(IntMatrix a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t n = std::min(rows, cols);
  std::vector<Int> diag(n, 0);

  for (size_t t = 0; t < n; ++t) {
    // find smallest nonzero entry in the remaining block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || iabs(a[i][j]) < iabs(a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = nearest_quot(a[i][t], a[t][t]);
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      // clear row t
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = nearest_quot(a[t][j], a[t][t]);
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide the rest of the block
      for (size_t i = t + 1; i < rows && !dirty; ++i)
        for (size_t j = t + 1; j < cols && !dirty; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            dirty = true;
          }
    }
    diag[t] = iabs(a[t][t]);
  }
  return diag;
}

std::vector<Int> cokernel_invariants(const IntMatrix& a, size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("cokernel_invariants: ragged matrix");
  std::vector<Int> diag = smith_diagonal(a);
  size_t rank = 0;
  std::vector<Int> out;
  for (const Int& d : diag)
    if (d != 0) {
      ++rank;
      if (d > 1) out.push_back(d);
    }
  for (size_t i = rank; i < cols; ++i) out.push_back(0);
  return out;
}

Int determinant(IntMatrix a) {
  size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_negative_definite(const IntMatrix& a) {
  size_t n = a.size();
  for (size_t k = 1; k <= n; ++k) {
    IntMatrix sub(k, std::vector<Int>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
    Int d = determinant(std::move(sub));
    if (k % 2 == 0 ? d <= 0 : d >= 0) return false;
  }
  return true;
}

}  // namespace qhd
