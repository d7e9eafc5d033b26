#include "pbv/linalg.hpp"

namespace pbv {

namespace {

// Reduces [a | b] in place; returns the pivot column of each pivot row.
// When b is null, only a is reduced.
std::vector<std::size_t> eliminate(RatMat& a, RatVec* b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    if (b) std::swap((*b)[piv], (*b)[row]);
    Rational inv = a[row][col];
    for (std::size_t c = col; c < cols; ++c) a[row][c] /= inv;
    if (b) (*b)[row] /= inv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == row || a[rr][col] == 0) continue;
      Rational f = a[rr][col];
      for (std::size_t c = col; c < cols; ++c) a[rr][c] -= f * a[row][c];
      if (b) (*b)[rr] -= f * (*b)[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

} // namespace

std::size_t rank(RatMat m) { return eliminate(m, nullptr).size(); }

std::optional<RatVec> solve(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto pivot_cols = eliminate(a, &b);
  for (std::size_t r = pivot_cols.size(); r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = b[r];
  return x;
}

} // namespace pbv
