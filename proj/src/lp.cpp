#include "pivotlab/lp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace pivotlab {

void LinearProgram::validate() const {
  if (m < 1 || n < m) throw Error(ErrorCode::BadInput, "need 1 <= m <= n");
  if (A.rows() != m || A.cols() != n || static_cast<int>(b.size()) != m ||
      static_cast<int>(c.size()) != n)
    throw Error(ErrorCode::BadInput, "inconsistent program dimensions");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw Error(ErrorCode::BadInput, "names length differs from n");
  if (rank(A) != m) throw Error(ErrorCode::BadInput, "constraint matrix is not full row rank");
}

Basis::Basis(std::vector<int> c) : cols(std::move(c)) {
  std::sort(cols.begin(), cols.end());
  for (size_t i = 0; i + 1 < cols.size(); ++i)
    if (cols[i] == cols[i + 1]) throw std::invalid_argument("duplicate basis column");
  if (!cols.empty() && cols.front() < 1) throw std::invalid_argument("basis columns are 1-based");
}

bool Basis::contains(int j) const {
  return std::binary_search(cols.begin(), cols.end(), j);
}

Basis Basis::exchanged(int leave, int enter) const {
  std::vector<int> next = cols;
  auto it = std::find(next.begin(), next.end(), leave);
  if (it == next.end()) throw std::invalid_argument("leaving column not in basis");
  *it = enter;
  return Basis(std::move(next));
}

std::string Basis::to_string() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) out << ',';
    out << cols[i];
  }
  out << '}';
  return out.str();
}

bool adjacent(const Basis& a, const Basis& b) {
  if (a.size() != b.size()) return false;
  int diff = 0;
  for (int j : a.cols)
    if (!b.contains(j)) ++diff;
  return diff == 1;
}

int basis_difference(const Basis& a, const Basis& b) {
  int found = 0, col = 0;
  for (int j : a.cols)
    if (!b.contains(j)) {
      col = j;
      ++found;
    }
  if (found != 1) throw std::invalid_argument("bases are not adjacent");
  return col;
}

std::string classification_name(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::NonTerminal: return "NonTerminal";
    case Classification::Kind::Optimal: return "Optimal";
    case Classification::Kind::Unbounded: return "Unbounded";
    case Classification::Kind::Infeasible: return "Infeasible";
  }
  return "?";
}

bool BasisView::feasible() const {
  for (const Rational& v : x)
    if (v < 0) return false;
  return true;
}

BigMScalar BasisView::objective(const LinearProgram& lp) const {
  BigMScalar total;
  for (int k = 0; k < basis.size(); ++k) total += lp.c[static_cast<size_t>(basis.cols[k] - 1)] * x[static_cast<size_t>(k)];
  return total;
}

RatVector BasisView::direction(const LinearProgram& lp, int j) const {
  return mat_vec(b_inv, lp.A.column(j - 1));
}

BasisView make_view(const LinearProgram& lp, const Basis& basis) {
  if (basis.size() != lp.m) throw std::invalid_argument("basis size must equal m");
  for (int j : basis.cols)
    if (j < 1 || j > lp.n) throw std::invalid_argument("basis column out of range");

  std::vector<int> cols0;
  cols0.reserve(basis.cols.size());
  for (int j : basis.cols) cols0.push_back(j - 1);

  BasisView view;
  view.basis = basis;
  try {
    view.b_inv = inverse(lp.A.select_columns(cols0));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular)
      throw Error(ErrorCode::SingularBasis, "basis " + basis.to_string() + " is singular");
    throw;
  }
  view.x = mat_vec(view.b_inv, lp.b);

  // y^T = c_B^T B^{-1}, split into finite and M parts.
  RatVector y_fin(lp.m, Rational(0)), y_m(lp.m, Rational(0));
  for (int k = 0; k < lp.m; ++k) {
    const BigMScalar& ck = lp.c[static_cast<size_t>(basis.cols[k] - 1)];
    if (ck.finite == 0 && ck.m_coeff == 0) continue;
    for (int j = 0; j < lp.m; ++j) {
      const Rational& w = view.b_inv.at(k, j);
      if (w == 0) continue;
      if (ck.finite != 0) y_fin[static_cast<size_t>(j)] += ck.finite * w;
      if (ck.m_coeff != 0) y_m[static_cast<size_t>(j)] += ck.m_coeff * w;
    }
  }
  view.reduced.assign(static_cast<size_t>(lp.n), BigMScalar());
  for (int j = 1; j <= lp.n; ++j) {
    if (basis.contains(j)) continue;  // exactly zero on basic columns
    Rational fin = lp.c[static_cast<size_t>(j - 1)].finite;
    Rational mc = lp.c[static_cast<size_t>(j - 1)].m_coeff;
    for (int i = 0; i < lp.m; ++i) {
      const Rational& a = lp.A.at(i, j - 1);
      if (a == 0) continue;
      if (y_fin[static_cast<size_t>(i)] != 0) fin -= y_fin[static_cast<size_t>(i)] * a;
      if (y_m[static_cast<size_t>(i)] != 0) mc -= y_m[static_cast<size_t>(i)] * a;
    }
    view.reduced[static_cast<size_t>(j - 1)] = BigMScalar(std::move(fin), std::move(mc));
  }
  return view;
}

RatVector basic_solution(const LinearProgram& lp, const Basis& basis) {
  return make_view(lp, basis).x;
}

std::vector<BigMScalar> reduced_costs(const LinearProgram& lp, const Basis& basis) {
  return make_view(lp, basis).reduced;
}

Classification classify_view(const LinearProgram& lp, const BasisView& view) {
  const BigMScalar zero;
  bool primal_ok = view.feasible();
  bool dual_ok = true;
  for (const BigMScalar& r : view.reduced)
    if (zero < r) {
      dual_ok = false;
      break;
    }
  if (primal_ok && dual_ok) return {Classification::Kind::Optimal, 0};

  // Unbounded: smallest column with positive reduced cost and a
  // nonpositive basis direction.
  for (int j = 1; j <= lp.n; ++j) {
    if (!(zero < view.reduced[static_cast<size_t>(j - 1)])) continue;
    RatVector u = view.direction(lp, j);
    bool nonpositive = true;
    for (const Rational& v : u)
      if (v > 0) {
        nonpositive = false;
        break;
      }
    if (nonpositive) return {Classification::Kind::Unbounded, j};
  }

  // Infeasible: smallest row i with (B^{-1})_i A >= 0 and (B^{-1})_i b < 0.
  for (int i = 0; i < lp.m; ++i) {
    Rational row_b(0);
    for (int k = 0; k < lp.m; ++k)
      if (view.b_inv.at(i, k) != 0) row_b += view.b_inv.at(i, k) * lp.b[static_cast<size_t>(k)];
    if (!(row_b < 0)) continue;
    bool row_nonneg = true;
    for (int j = 0; j < lp.n && row_nonneg; ++j) {
      Rational v(0);
      for (int k = 0; k < lp.m; ++k)
        if (view.b_inv.at(i, k) != 0) v += view.b_inv.at(i, k) * lp.A.at(k, j);
      if (v < 0) row_nonneg = false;
    }
    if (row_nonneg) return {Classification::Kind::Infeasible, i + 1};
  }
  return {Classification::Kind::NonTerminal, 0};
}

Classification classify_basis(const LinearProgram& lp, const Basis& basis) {
  return classify_view(lp, make_view(lp, basis));
}

PivotResult pivot_view(const LinearProgram& lp, const BasisView& view, int enter) {
  if (enter < 1 || enter > lp.n) throw std::invalid_argument("entering column out of range");
  if (view.basis.contains(enter)) throw std::invalid_argument("entering column already basic");
  if (!view.feasible()) throw std::invalid_argument("pivot requires a feasible basis");
  const BigMScalar zero;
  if (!(zero < view.reduced[static_cast<size_t>(enter - 1)]))
    throw std::invalid_argument("entering column must have positive reduced cost");

  RatVector u = view.direction(lp, enter);
  int arg = -1;
  Rational best;
  bool tie = false;
  for (int i = 0; i < lp.m; ++i) {
    if (!(u[static_cast<size_t>(i)] > 0)) continue;
    Rational ratio = view.x[static_cast<size_t>(i)] / u[static_cast<size_t>(i)];
    if (arg < 0 || ratio < best) {
      best = ratio;
      arg = i;
      tie = false;
    } else if (ratio == best) {
      tie = true;
    }
  }
  if (arg < 0)
    throw Error(ErrorCode::UnboundedDirection, "no positive ratio-test denominator");
  if (tie || best == 0)
    throw Error(ErrorCode::DegenerateTie, "ratio test tied or stalled at zero");

  PivotResult out;
  out.leaving = view.basis.cols[static_cast<size_t>(arg)];
  out.next = view.basis.exchanged(out.leaving, enter);
  out.step = best;
  return out;
}

PivotResult pivot(const LinearProgram& lp, const Basis& basis, int enter) {
  return pivot_view(lp, make_view(lp, basis), enter);
}

BigMProgram big_m_transform(const LinearProgram& lp) {
  BigMProgram out;
  out.original_n = lp.n;
  LinearProgram& big = out.lp;
  big.m = lp.m;
  big.n = 2 * lp.n;
  big.A = RatMatrix(lp.m, 2 * lp.n);
  for (int i = 0; i < lp.m; ++i)
    for (int j = 0; j < lp.n; ++j) {
      big.A.at(i, j) = lp.A.at(i, j);
      big.A.at(i, lp.n + j) = -lp.A.at(i, j);
    }
  big.b = lp.b;
  big.c = lp.c;
  big.c.resize(static_cast<size_t>(2 * lp.n), BigMScalar(Rational(0), Rational(-1)));
  if (!lp.names.empty()) {
    big.names = lp.names;
    for (const std::string& name : lp.names) big.names.push_back(name + "_neg");
  }

  // Greedy independent columns of A, then swap in the mirrored member
  // wherever the basic value comes out negative.
  std::vector<int> picked = greedy_column_basis(lp.A);
  assert(static_cast<int>(picked.size()) == lp.m);
  RatVector x = solve_square(lp.A.select_columns(picked), lp.b);
  std::vector<int> cols;
  cols.reserve(picked.size());
  for (size_t k = 0; k < picked.size(); ++k) {
    const int j = picked[k] + 1;
    cols.push_back(x[k] < 0 ? lp.n + j : j);
  }
  out.start = Basis(std::move(cols));
  return out;
}

}  // namespace pivotlab
