#include "pivotlab/klee_minty.hpp"

#include <string>

namespace pivotlab {

RatVector KleeMintyInstance::vertex_coords(const BitString& v) const {
  if (v.size() != d) throw Error(ErrorCode::WidthMismatch, "vertex width differs from d");
  RatVector x(static_cast<size_t>(d));
  x[static_cast<size_t>(d - 1)] = v.bit(d);
  for (int i = d - 1; i >= 1; --i) {
    const int b = v.bit(i);
    x[static_cast<size_t>(i - 1)] = Rational(b) + Rational(1 - 2 * b) * eps * x[static_cast<size_t>(i)];
  }
  return x;
}

Rational KleeMintyInstance::vertex_objective(const BitString& v) const {
  return vertex_coords(v)[0];
}

Basis KleeMintyInstance::vertex_basis(const BitString& v) const {
  if (v.size() != d) throw Error(ErrorCode::WidthMismatch, "vertex width differs from d");
  std::vector<int> cols;
  cols.reserve(static_cast<size_t>(2 * d));
  for (int j = 1; j <= d; ++j) cols.push_back(j);
  for (int i = 1; i <= d; ++i) {
    // bit 0: lower tight, keep the upper slack; bit 1: the reverse
    const int lower = d + 2 * i - 1, upper = d + 2 * i;
    cols.push_back(v.bit(i) ? lower : upper);
  }
  return Basis(std::move(cols));
}

BitString KleeMintyInstance::basis_vertex(const Basis& basis) const {
  if (basis.size() != 2 * d) throw Error(ErrorCode::BadInput, "basis size differs from 2d");
  BitString v(d);
  for (int j = 1; j <= d; ++j)
    if (!basis.contains(j))
      throw Error(ErrorCode::BadInput, "not a vertex basis: structural column missing");
  for (int i = 1; i <= d; ++i) {
    const int lower = d + 2 * i - 1, upper = d + 2 * i;
    const bool has_lower = basis.contains(lower), has_upper = basis.contains(upper);
    if (has_lower == has_upper)
      throw Error(ErrorCode::BadInput, "not a vertex basis: slack pair " + std::to_string(i));
    v.set_bit(i, has_lower ? 1 : 0);
  }
  return v;
}

bool increasing(const BitString& v, int i) {
  if (i < 1 || i > v.size()) throw Error(ErrorCode::Range, "coordinate out of range");
  int sum = 0;
  for (int j = 1; j <= i; ++j) sum ^= v.bit(j);
  return sum == 0;
}

KleeMintyInstance km_instance(int d, const Rational& eps) {
  if (d < 1) throw Error(ErrorCode::Range, "dimension must be at least 1");
  if (!(eps > 0 && eps < Rational(1, 2)))
    throw Error(ErrorCode::Range, "eps must satisfy 0 < eps < 1/2");

  KleeMintyInstance inst;
  inst.d = d;
  inst.eps = eps;
  LinearProgram& lp = inst.lp;
  lp.m = 2 * d;
  lp.n = 3 * d;
  lp.A = RatMatrix(lp.m, lp.n);
  lp.b.assign(static_cast<size_t>(lp.m), Rational(0));
  lp.c.assign(static_cast<size_t>(lp.n), BigMScalar());
  lp.c[0] = BigMScalar(Rational(1));
  lp.names.reserve(static_cast<size_t>(lp.n));
  for (int j = 1; j <= d; ++j) lp.names.push_back("x" + std::to_string(j));
  for (int i = 1; i <= d; ++i) {
    lp.names.push_back("lo" + std::to_string(i));
    lp.names.push_back("hi" + std::to_string(i));
  }

  for (int i = 1; i <= d; ++i) {
    const int row_lo = 2 * i - 2, row_hi = 2 * i - 1;
    const int col_lo = d + 2 * i - 2, col_hi = d + 2 * i - 1;  // 0-based
    // x_i - eps x_{i+1} - lo_i = 0
    lp.A.at(row_lo, i - 1) = 1;
    if (i < d) lp.A.at(row_lo, i) = -eps;
    lp.A.at(row_lo, col_lo) = -1;
    lp.b[static_cast<size_t>(row_lo)] = 0;
    // x_i + eps x_{i+1} + hi_i = 1
    lp.A.at(row_hi, i - 1) = 1;
    if (i < d) lp.A.at(row_hi, i) = eps;
    lp.A.at(row_hi, col_hi) = 1;
    lp.b[static_cast<size_t>(row_hi)] = 1;
  }
  return inst;
}

}  // namespace pivotlab
