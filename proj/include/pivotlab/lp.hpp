#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pivotlab/matrix.hpp"

namespace pivotlab {

/// Equality-form program: maximize c^T x subject to A x = b, x >= 0.
/// Costs are big-M scalars throughout so the same pivot machinery runs
/// unchanged on big-M transforms; plain programs keep m_coeff = 0.
struct LinearProgram {
  int m = 0;
  int n = 0;
  RatMatrix A;
  RatVector b;
  std::vector<BigMScalar> c;
  std::vector<std::string> names;  // optional column names

  /// Checks shape and rank(A) = m; programs failing this are rejected.
  void validate() const;
};

/// Ordered set of m column indices, kept strictly increasing, 1-based.
struct Basis {
  std::vector<int> cols;

  Basis() = default;
  explicit Basis(std::vector<int> c);

  int size() const { return static_cast<int>(cols.size()); }
  bool contains(int j) const;

  /// New basis with `leave` replaced by `enter`, re-sorted.
  Basis exchanged(int leave, int enter) const;

  std::string to_string() const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.cols == b.cols; }
  friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }
  friend bool operator<(const Basis& a, const Basis& b) { return a.cols < b.cols; }
};

/// True when the two bases differ in exactly one column.
bool adjacent(const Basis& a, const Basis& b);

/// The unique column of `a` that is not in `b`; requires adjacency.
int basis_difference(const Basis& a, const Basis& b);

struct Classification {
  enum class Kind { NonTerminal, Optimal, Unbounded, Infeasible };
  Kind kind = Kind::NonTerminal;
  int witness = 0;  // entering column j for Unbounded, row i for Infeasible

  bool terminal() const { return kind != Kind::NonTerminal; }
  friend bool operator==(const Classification& a, const Classification& b) {
    return a.kind == b.kind && a.witness == b.witness;
  }
};

std::string classification_name(Classification::Kind kind);

/// Exact data of one basis: B^{-1}, basic values, reduced costs. Everything
/// downstream (classification, pivots, rules) reads from this.
struct BasisView {
  Basis basis;
  RatMatrix b_inv;
  RatVector x;                     // B^{-1} b, ordered as basis.cols
  std::vector<BigMScalar> reduced;  // length n; exactly zero on basic columns

  bool feasible() const;
  BigMScalar objective(const LinearProgram& lp) const;
  /// B^{-1} A_j for a 1-based column.
  RatVector direction(const LinearProgram& lp, int j) const;
};

/// Factors the basis; throws SINGULAR_BASIS when the induced submatrix is
/// singular.
BasisView make_view(const LinearProgram& lp, const Basis& basis);

/// x_B = B^{-1} b, in the order of basis.cols.
RatVector basic_solution(const LinearProgram& lp, const Basis& basis);

/// c_j - c_B^T B^{-1} A_j for every column.
std::vector<BigMScalar> reduced_costs(const LinearProgram& lp, const Basis& basis);

/// First matching condition in the order optimal, unbounded (smallest
/// witness column), infeasible (smallest witness row); NonTerminal
/// otherwise.
Classification classify_basis(const LinearProgram& lp, const Basis& basis);
Classification classify_view(const LinearProgram& lp, const BasisView& view);

struct PivotResult {
  Basis next;
  int leaving = 0;
  Rational step;  // ratio-test value of the entering variable
};

/// One primal pivot with the exact ratio test. Requires a feasible basis,
/// enter outside it, and a positive reduced cost for enter. Throws
/// UNBOUNDED_DIRECTION when no ratio-test row exists and DEGENERATE_TIE
/// when the minimum is attained twice or equals zero.
PivotResult pivot(const LinearProgram& lp, const Basis& basis, int enter);
PivotResult pivot_view(const LinearProgram& lp, const BasisView& view, int enter);

/// Big-M transform: (A | -A) with mirrored columns priced at -M, plus a
/// start basis that is always primal feasible (greedy column choice on A,
/// mirrored members substituted where the basic value would be negative).
struct BigMProgram {
  LinearProgram lp;
  Basis start;
  int original_n = 0;
};

BigMProgram big_m_transform(const LinearProgram& lp);

}  // namespace pivotlab
