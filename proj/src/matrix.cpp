#include "pivotlab/matrix.hpp"

#include <cassert>
#include <utility>

namespace pivotlab {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(int j) const {
  RatVector out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::select_columns(const std::vector<int>& cols0) const {
  RatMatrix out(rows_, static_cast<int>(cols0.size()));
  for (int j = 0; j < out.cols(); ++j)
    for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, cols0[j]);
  return out;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  assert(static_cast<int>(v.size()) == m.cols());
  RatVector out(m.rows(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational out(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) out += a[i] * b[i];
  return out;
}

namespace {

// Forward elimination on an augmented matrix, pivot = first nonzero row.
// Returns the number of pivots found over the first `lead` columns.
int eliminate(RatMatrix& m, int lead) {
  int pivots = 0;
  for (int col = 0; col < lead && pivots < m.rows(); ++col) {
    int pivot_row = -1;
    for (int i = pivots; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != pivots)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivots, j), m.at(pivot_row, j));
    const Rational inv = 1 / m.at(pivots, col);
    for (int j = col; j < m.cols(); ++j) m.at(pivots, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == pivots || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pivots, j);
    }
    ++pivots;
  }
  return pivots;
}

}  // namespace

RatVector solve_square(const RatMatrix& m, const RatVector& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_square: matrix not square");
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::invalid_argument("solve_square: rhs size mismatch");
  const int n = m.rows();
  RatMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n) = rhs[i];
  }
  if (eliminate(aug, n) < n) throw Error(ErrorCode::Singular, "rank-deficient system");
  RatVector x(n);
  for (int i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (eliminate(aug, n) < n) throw Error(ErrorCode::Singular, "matrix not invertible");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

int rank(const RatMatrix& m) {
  RatMatrix work = m;
  return eliminate(work, m.cols());
}

std::vector<int> greedy_column_basis(const RatMatrix& a) {
  RatMatrix work = a;
  std::vector<int> picked;
  int pivots = 0;
  for (int col = 0; col < a.cols() && pivots < a.rows(); ++col) {
    int pivot_row = -1;
    for (int i = pivots; i < work.rows(); ++i) {
      if (work.at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != pivots)
      for (int j = 0; j < work.cols(); ++j) std::swap(work.at(pivots, j), work.at(pivot_row, j));
    const Rational inv = 1 / work.at(pivots, col);
    for (int j = col; j < work.cols(); ++j) work.at(pivots, j) *= inv;
    for (int i = 0; i < work.rows(); ++i) {
      if (i == pivots || work.at(i, col) == 0) continue;
      const Rational f = work.at(i, col);
      for (int j = col; j < work.cols(); ++j) work.at(i, j) -= f * work.at(pivots, j);
    }
    picked.push_back(col);
    ++pivots;
  }
  if (pivots < a.rows())
    throw Error(ErrorCode::NoStartBasis, "matrix rows are not independent");
  return picked;
}

}  // namespace pivotlab
