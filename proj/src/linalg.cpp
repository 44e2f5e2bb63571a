#include "divstab/linalg.hpp"

#include <algorithm>

namespace divstab::linalg {

// Row-reduces in place, returning the pivot column of each eliminated row.
static std::vector<int> row_reduce(Matrix& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = rows[0].dim();
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = Rational(1) / rows[r][c];
    for (int j = c; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix rows) { return static_cast<int>(row_reduce(rows).size()); }

std::optional<RatVector> solve(const Matrix& rows, const std::vector<Rational>& rhs) {
  if (rows.size() != rhs.size()) throw dimension_error("solve: shape mismatch");
  if (rows.empty()) return RatVector();
  const int n = rows[0].dim();
  if (static_cast<int>(rows.size()) != n) throw dimension_error("solve: non-square system");
  Matrix aug;
  aug.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rational> row(rows[i].coords());
    row.push_back(rhs[i]);
    aug.emplace_back(std::move(row));
  }
  const auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() == n) return std::nullopt;
  RatVector u(n);
  for (int i = 0; i < n; ++i) u[pivots[static_cast<size_t>(i)]] = aug[static_cast<size_t>(i)][n];
  return u;
}

std::vector<RatVector> kernel_basis(const Matrix& rows, int dim) {
  Matrix work = rows;
  const auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<RatVector> basis;
  for (int free_c = 0; free_c < dim; ++free_c) {
    if (is_pivot[static_cast<size_t>(free_c)]) continue;
    RatVector d(dim);
    d[free_c] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      d[pivots[i]] = -work[i][free_c];
    basis.push_back(std::move(d));
  }
  return basis;
}

int affine_dim(const std::vector<RatVector>& points, const std::vector<int>& subset) {
  if (subset.empty()) return -1;
  Matrix diffs;
  const RatVector& base = points[static_cast<size_t>(subset[0])];
  for (size_t i = 1; i < subset.size(); ++i)
    diffs.push_back(points[static_cast<size_t>(subset[i])] - base);
  return rank(std::move(diffs));
}

Rational determinant(Matrix rows) {
  if (rows.empty()) return Rational(1);
  const int n = rows[0].dim();
  if (static_cast<int>(rows.size()) != n) throw dimension_error("determinant: non-square");
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i) {
      if (!rows[static_cast<size_t>(i)][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return Rational(0);
    if (sel != c) {
      std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(c)]);
      det = -det;
    }
    det *= rows[static_cast<size_t>(c)][c];
    const Rational inv = Rational(1) / rows[static_cast<size_t>(c)][c];
    for (int i = c + 1; i < n; ++i) {
      if (rows[static_cast<size_t>(i)][c].is_zero()) continue;
      const Rational f = rows[static_cast<size_t>(i)][c] * inv;
      for (int j = c; j < n; ++j)
        rows[static_cast<size_t>(i)][j] = rows[static_cast<size_t>(i)][j] - f * rows[static_cast<size_t>(c)][j];
    }
  }
  return det;
}

}  // namespace divstab::linalg
