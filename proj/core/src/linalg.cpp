#include "polypart/linalg.hpp"

namespace polypart {

Rational determinant(Matrix m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> kernel_vector(Matrix m, int cols) {
  size_t rows = m.size();
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("kernel_vector: ragged matrix");
  // Row-reduce, tracking pivot columns.
  std::vector<int> pivot_col(rows, -1);
  size_t rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    Rational inv = m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] /= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  // Find a free column.
  std::vector<bool> is_pivot(cols, false);
  for (size_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col < 0) return std::nullopt;
  std::vector<Rational> w(cols, Rational(0));
  w[free_col] = 1;
  for (size_t r = 0; r < rank; ++r) w[pivot_col[r]] = -m[r][free_col];
  return w;
}

}  // namespace polypart
