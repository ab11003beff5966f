#include "pivotlab/shadow.hpp"

#include <cassert>

namespace pivotlab {

namespace {

RatVector plain_costs(const LinearProgram& lp) {
  RatVector c(static_cast<size_t>(lp.n));
  for (int j = 0; j < lp.n; ++j) {
    if (lp.c[static_cast<size_t>(j)].m_coeff != 0)
      throw Error(ErrorCode::BadInput, "shadow vertex requires plain rational costs");
    c[static_cast<size_t>(j)] = lp.c[static_cast<size_t>(j)].finite;
  }
  return c;
}

/// Constraint value alpha + lambda * beta; primal rows need >= 0, dual
/// columns need <= 0.
struct Affine {
  Rational alpha;
  Rational beta;

  Rational at(const Rational& lambda) const { return alpha + lambda * beta; }
};

struct HomotopySystems {
  std::vector<Affine> primal;          // per basic row
  std::vector<Affine> dual;            // per column (basic columns are zero)
  std::vector<int> dual_cols;          // nonbasic columns, ascending
};

HomotopySystems build_systems(const LinearProgram& lp, const ShadowHomotopy& h,
                              const BasisView& view) {
  HomotopySystems sys;
  const RatVector c = plain_costs(lp);

  RatVector x0 = mat_vec(view.b_inv, h.b0_rhs);
  // primal row i: (1-l) x0_i + l x_i = x0_i + l (x_i - x0_i) >= 0
  sys.primal.reserve(static_cast<size_t>(lp.m));
  for (int i = 0; i < lp.m; ++i)
    sys.primal.push_back({x0[static_cast<size_t>(i)],
                          view.x[static_cast<size_t>(i)] - x0[static_cast<size_t>(i)]});

  // dual prices for both cost vectors
  RatVector y0(static_cast<size_t>(lp.m), Rational(0)), y1(static_cast<size_t>(lp.m), Rational(0));
  for (int k = 0; k < lp.m; ++k) {
    const Rational c0k = h.c0_cost[static_cast<size_t>(view.basis.cols[static_cast<size_t>(k)] - 1)];
    const Rational c1k = c[static_cast<size_t>(view.basis.cols[static_cast<size_t>(k)] - 1)];
    for (int j = 0; j < lp.m; ++j) {
      const Rational& w = view.b_inv.at(k, j);
      if (w == 0) continue;
      if (c0k != 0) y0[static_cast<size_t>(j)] += c0k * w;
      if (c1k != 0) y1[static_cast<size_t>(j)] += c1k * w;
    }
  }
  for (int j = 1; j <= lp.n; ++j) {
    if (view.basis.contains(j)) continue;
    Rational r0 = h.c0_cost[static_cast<size_t>(j - 1)];
    Rational r1 = c[static_cast<size_t>(j - 1)];
    for (int i = 0; i < lp.m; ++i) {
      const Rational& a = lp.A.at(i, j - 1);
      if (a == 0) continue;
      r0 -= y0[static_cast<size_t>(i)] * a;
      r1 -= y1[static_cast<size_t>(i)] * a;
    }
    // dual column j: (1-l) r0 + l r1 = r0 + l (r1 - r0) <= 0
    sys.dual.push_back({r0, r1 - r0});
    sys.dual_cols.push_back(j);
  }
  return sys;
}

/// Intersects { lambda : alpha + lambda beta OP 0 } into [lo, hi];
/// wants_nonneg selects >= 0 versus <= 0.
bool clip(const Affine& f, bool wants_nonneg, Rational& lo, Rational& hi) {
  Rational alpha = f.alpha, beta = f.beta;
  if (!wants_nonneg) {
    alpha = -alpha;
    beta = -beta;
  }
  if (beta == 0) return alpha >= 0;  // constant: either trivially true or empty
  const Rational bound = -alpha / beta;
  if (beta > 0) {
    if (bound > lo) lo = bound;
  } else {
    if (bound < hi) hi = bound;
  }
  return lo <= hi;
}

}  // namespace

ShadowHomotopy make_homotopy(const LinearProgram& lp, const Basis& b0) {
  plain_costs(lp);  // reject big-M costs up front
  BasisView view = make_view(lp, b0);  // SINGULAR_BASIS when ill-posed

  ShadowHomotopy h;
  h.b0 = b0;
  // b0 = B0 * 1: every basic value is exactly 1
  h.b0_rhs.assign(static_cast<size_t>(lp.m), Rational(0));
  for (int i = 0; i < lp.m; ++i)
    for (int k = 0; k < lp.m; ++k)
      h.b0_rhs[static_cast<size_t>(i)] += lp.A.at(i, b0.cols[static_cast<size_t>(k)] - 1);
  // c0: zero on basic columns, -1 elsewhere, so nonbasic reduced costs
  // are exactly -1
  h.c0_cost.assign(static_cast<size_t>(lp.n), Rational(-1));
  for (int j : b0.cols) h.c0_cost[static_cast<size_t>(j - 1)] = 0;
  return h;
}

LambdaInterval lambda_interval(const LinearProgram& lp, const ShadowHomotopy& h, const Basis& b) {
  BasisView view = make_view(lp, b);
  HomotopySystems sys = build_systems(lp, h, view);

  LambdaInterval out;
  Rational lo(0), hi(1);
  for (const Affine& f : sys.primal)
    if (!clip(f, /*wants_nonneg=*/true, lo, hi)) return out;
  for (const Affine& f : sys.dual)
    if (!clip(f, /*wants_nonneg=*/false, lo, hi)) return out;
  out.lo = lo;
  out.hi = hi;
  out.empty = false;
  return out;
}

bool shadow_member(const LinearProgram& lp, const ShadowHomotopy& h, const Basis& b) {
  return !lambda_interval(lp, h, b).empty;
}

ShadowStep shadow_next(const LinearProgram& lp, const ShadowHomotopy& h, const Basis& b) {
  BasisView view = make_view(lp, b);
  HomotopySystems sys = build_systems(lp, h, view);

  LambdaInterval iv = lambda_interval(lp, h, b);
  if (iv.empty) throw std::invalid_argument("basis is not on the shadow walk");
  if (iv.hi >= 1) throw std::invalid_argument("basis is already optimal at lambda = 1");
  const Rational lambda_star = iv.hi;

  // The binding constraint at lambda* with a violating derivative.
  int binding_row = -1, binding_col = -1;
  int count = 0;
  for (int i = 0; i < lp.m; ++i) {
    const Affine& f = sys.primal[static_cast<size_t>(i)];
    if (f.at(lambda_star) == 0 && f.beta < 0) {
      binding_row = i;
      ++count;
    }
  }
  for (size_t t = 0; t < sys.dual.size(); ++t) {
    const Affine& f = sys.dual[t];
    if (f.at(lambda_star) == 0 && f.beta > 0) {
      binding_col = sys.dual_cols[t];
      ++count;
    }
  }
  if (count != 1)
    throw Error(ErrorCode::DegenerateTie,
                "expected exactly one binding constraint at the breakpoint, found " +
                    std::to_string(count));

  ShadowStep out;
  out.breakpoint = lambda_star;

  if (binding_row >= 0) {
    // A basic value hits zero: that variable leaves. Entering by the dual
    // ratio test on the leaving row, at the lambda* cost vector.
    const int leave = b.cols[static_cast<size_t>(binding_row)];
    int enter = -1;
    Rational best;
    bool tie = false;
    for (size_t t = 0; t < sys.dual.size(); ++t) {
      const int j = sys.dual_cols[t];
      Rational a(0);
      for (int k = 0; k < lp.m; ++k)
        if (view.b_inv.at(binding_row, k) != 0) a += view.b_inv.at(binding_row, k) * lp.A.at(k, j - 1);
      if (!(a < 0)) continue;
      Rational ratio = sys.dual[t].at(lambda_star) / a;  // both <= 0: ratio >= 0
      if (enter < 0 || ratio < best) {
        best = ratio;
        enter = j;
        tie = false;
      } else if (ratio == best) {
        tie = true;
      }
    }
    if (enter < 0)
      throw Error(ErrorCode::NoExchange, "no entering column: the walk is blocked");
    if (tie) throw Error(ErrorCode::DegenerateTie, "dual ratio test tied");
    out.next = b.exchanged(leave, enter);
    return out;
  }

  // A reduced cost hits zero: that column enters. Leaving by the primal
  // ratio test at the lambda* right-hand side.
  const int enter = binding_col;
  RatVector u = view.direction(lp, enter);
  int arg = -1;
  Rational best;
  bool tie = false;
  for (int i = 0; i < lp.m; ++i) {
    if (!(u[static_cast<size_t>(i)] > 0)) continue;
    Rational value = sys.primal[static_cast<size_t>(i)].at(lambda_star);
    Rational ratio = value / u[static_cast<size_t>(i)];
    if (arg < 0 || ratio < best) {
      best = ratio;
      arg = i;
      tie = false;
    } else if (ratio == best) {
      tie = true;
    }
  }
  if (arg < 0) throw Error(ErrorCode::UnboundedDirection, "interpolated program is unbounded");
  if (tie) throw Error(ErrorCode::DegenerateTie, "primal ratio test tied");
  out.next = b.exchanged(b.cols[static_cast<size_t>(arg)], enter);
  return out;
}

PathTrace trace_shadow(const LinearProgram& lp, const ShadowHomotopy& h, uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  PathTrace out;
  Basis current = h.b0;
  uint64_t pivots = 0;
  while (true) {
    LambdaInterval iv = lambda_interval(lp, h, current);
    if (iv.empty)
      throw Error(ErrorCode::InvariantViolation, "walk left the homotopy feasible set");
    out.bases.push_back(current);
    out.potentials.push_back(BigMScalar(iv.lo));  // the current lambda
    if (iv.hi >= 1) {
      out.verdict = Verdict::terminal(classify_basis(lp, current));
      return out;
    }
    if (pivots == cap) {
      out.verdict = Verdict::cap();
      return out;
    }
    try {
      ShadowStep step = shadow_next(lp, h, current);
      out.entering.push_back(basis_difference(step.next, current));
      out.leaving.push_back(basis_difference(current, step.next));
      current = step.next;
    } catch (const Error& e) {
      out.verdict = Verdict::rule_error(e.code());
      return out;
    }
    ++pivots;
  }
}

std::vector<uint8_t> shadow_member_sweep_serial(const LinearProgram& lp, const ShadowHomotopy& h,
                                                const std::vector<Basis>& queries) {
  std::vector<uint8_t> out(queries.size(), 0);
  for (size_t i = 0; i < queries.size(); ++i) out[i] = shadow_member(lp, h, queries[i]) ? 1 : 0;
  return out;
}

std::vector<uint8_t> shadow_member_sweep(const LinearProgram& lp, const ShadowHomotopy& h,
                                         const std::vector<Basis>& queries) {
  std::vector<uint8_t> out(queries.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < static_cast<long>(queries.size()); ++i)
    out[static_cast<size_t>(i)] = shadow_member(lp, h, queries[static_cast<size_t>(i)]) ? 1 : 0;
  return out;
}

}  // namespace pivotlab
