#pragma once

#include "pivotlab/rules.hpp"

namespace pivotlab {

/// Parametric homotopy for the shadow-vertex rule. The auxiliary data
/// (b0, c0) makes B0 both primal and dual feasible at lambda = 0:
/// b0 = B0 * 1 (all basic values exactly one) and c0 = 0 on B0's columns,
/// -1 elsewhere (all nonbasic reduced costs exactly -1). The rule follows
/// the optimal basis of the interpolated program
///   max (lambda c + (1-lambda) c0)^T x,  A x = lambda b + (1-lambda) b0
/// as lambda runs from 0 to 1.
struct ShadowHomotopy {
  Basis b0;
  RatVector b0_rhs;   // length m
  RatVector c0_cost;  // length n
};

struct LambdaInterval {
  Rational lo;
  Rational hi;
  bool empty = true;

  bool contains(const Rational& v) const { return !empty && lo <= v && v <= hi; }
};

/// Requires plain rational costs; the lambda arithmetic is not closed over
/// big-M scalars, and the homotopy never needs a big-M start.
ShadowHomotopy make_homotopy(const LinearProgram& lp, const Basis& b0);

/// The lambda values in [0, 1] for which B satisfies both interpolated
/// feasibility systems: m primal inequalities
///   (1-lambda) B^{-1}b0 + lambda B^{-1}b >= 0
/// and n dual inequalities
///   (1-lambda)(c0 - c0_B B^{-1}A) + lambda(c - c_B B^{-1}A) <= 0,
/// each linear in lambda.
LambdaInterval lambda_interval(const LinearProgram& lp, const ShadowHomotopy& h, const Basis& b);

/// B lies on the shadow-vertex walk iff its interval is nonempty.
bool shadow_member(const LinearProgram& lp, const ShadowHomotopy& h, const Basis& b);

struct ShadowStep {
  Basis next;
  Rational breakpoint;  // lambda*
};

/// Advances past the upper breakpoint of B's interval. The unique
/// constraint that turns infeasible just above lambda* dictates the
/// exchange: a vanishing basic value leaves (entering chosen by the exact
/// dual ratio test on its row); a vanishing reduced cost enters (leaving
/// chosen by the exact primal ratio test at lambda*). DEGENERATE_TIE when
/// two constraints bind at once or a ratio test ties.
ShadowStep shadow_next(const LinearProgram& lp, const ShadowHomotopy& h, const Basis& b);

/// Full walk from B0: potentials are the interval lower endpoints (the
/// current lambda), ending when the interval reaches 1.
PathTrace trace_shadow(const LinearProgram& lp, const ShadowHomotopy& h, uint64_t cap);

/// Membership for many bases at once; OpenMP over the queries.
std::vector<uint8_t> shadow_member_sweep(const LinearProgram& lp, const ShadowHomotopy& h,
                                         const std::vector<Basis>& queries);
std::vector<uint8_t> shadow_member_sweep_serial(const LinearProgram& lp, const ShadowHomotopy& h,
                                                const std::vector<Basis>& queries);

}  // namespace pivotlab
