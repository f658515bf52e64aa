#include "linalg.hpp"

#include "errors.hpp"

#include <utility>

namespace flagcalc {

std::vector<int> rref(Matrix& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (int k = c; k < ncols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int matrix_rank(Matrix rows, int ncols) { return static_cast<int>(rref(rows, ncols).size()); }

std::vector<Vector> kernel(Matrix rows, int ncols) {
  const std::vector<int> pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

Vector reduce(Vector v, const Matrix& rows, const std::vector<int>& pivots) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rational f = v[pivots[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * rows[r][k];
  }
  return v;
}

}  // namespace flagcalc
