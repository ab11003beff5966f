#pragma once

#include <vector>

#include "pivotlab/exact.hpp"

namespace pivotlab {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Dimensions are fixed at
/// construction.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RatVector column(int j) const;
  RatMatrix transposed() const;

  /// Column-induced submatrix; indices are 0-based here.
  RatMatrix select_columns(const std::vector<int>& cols0) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

RatVector mat_vec(const RatMatrix& m, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

/// Solves M x = rhs exactly by Gaussian elimination, pivoting on the first
/// nonzero entry of each column. Throws SINGULAR when rank(M) < m.
RatVector solve_square(const RatMatrix& m, const RatVector& rhs);

/// Exact inverse via Gauss-Jordan. Throws SINGULAR.
RatMatrix inverse(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Lexicographically first set of column indices (0-based) whose columns
/// are independent and span the row space; greedy left-to-right
/// elimination. Throws NO_START_BASIS when rank(A) < rows.
std::vector<int> greedy_column_basis(const RatMatrix& a);

}  // namespace pivotlab
