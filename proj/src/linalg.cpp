#include "gaudinlab/linalg.hpp"

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

namespace {

// After additions a rational function can be zero without its unit being
// zero; reducing expands the numerator and settles the question.
bool settled_zero(RationalFn& f) {
  if (f.is_zero()) return true;
  f.reduce();
  return f.is_zero();
}

// Reduces m to reduced row-echelon form in place; returns the pivot count.
// Pivots are sought only in the first pivot_cols columns, but row operations
// apply to the whole row, so augmented columns ride along untouched by the
// pivot count.
int eliminate(RationalMatrix& m, std::size_t pivot_cols) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < pivot_cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && settled_zero(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const RationalFn inv = m[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || settled_zero(m[i][col])) continue;
      const RationalFn factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        m[i][j] = m[i][j] - factor * m[rank][j];
        m[i][j].reduce();
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int matrix_rank(RationalMatrix m) {
  return m.empty() ? 0 : eliminate(m, m[0].size());
}

RationalFn det_fraction(RationalMatrix m) {
  if (m.empty()) throw IndexOutOfRange("determinant of empty matrix");
  const std::size_t n = m.size();
  const auto& ctx = m[0][0].context();
  RationalFn det = RationalFn::one(ctx);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && settled_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return RationalFn::zero(ctx);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    const RationalFn inv = m[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (settled_zero(m[i][col])) continue;
      const RationalFn factor = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) {
        m[i][j] = m[i][j] - factor * m[col][j];
        m[i][j].reduce();
      }
    }
  }
  return det;
}

std::vector<RationalFn> solve_linear(RationalMatrix a, std::vector<RationalFn> b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw IndexOutOfRange("bad linear system shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw IndexOutOfRange("bad linear system shape");
    a[i].push_back(b[i]);
  }
  if (eliminate(a, n) < static_cast<int>(n))
    throw NonInvertibleImage("linear system is singular");
  std::vector<RationalFn> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a[i][n]);
  return c;
}

}  // namespace gaudinlab
