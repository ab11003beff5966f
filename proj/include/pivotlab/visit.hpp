#pragma once

#include <map>
#include <optional>

#include "pivotlab/rules.hpp"

namespace pivotlab {

/// Exact visit probability of `query` under the random-index rule started
/// at `start`: dynamic programming over the basis graph, which is acyclic
/// because the objective strictly increases along every edge. Each
/// non-terminal basis branches uniformly over its improving columns.
/// STATE_EXPLOSION when more than `state_cap` bases become reachable.
struct VisitDag {
  struct Edge {
    Basis from;
    Basis to;
    Rational weight;  // p(from) / |J(from)|
  };
  std::map<std::vector<int>, Rational> probability;  // keyed by basis columns
  std::vector<Edge> edges;
  std::vector<Basis> terminals;
};

VisitDag visit_probabilities(const LinearProgram& lp, const Basis& start,
                             size_t state_cap = size_t{1} << 14);

Rational exact_visit_probability(const LinearProgram& lp, const Basis& start, const Basis& query,
                                 size_t state_cap = size_t{1} << 14);

/// Monte Carlo estimate of the same probability. Trial t draws its own
/// stream from (seed, t), so trials are order independent and the parallel
/// and serial versions count identically.
struct VisitEstimate {
  Rational p_hat;  // visits / trials, exact
  uint64_t trials = 0;
  uint64_t visits = 0;
  std::optional<Rational> exact_p;

  /// Hoeffding radius sqrt(ln(2/delta) / (2 trials)).
  double hoeffding_radius(double delta) const;
};

VisitEstimate estimate_visit(const LinearProgram& lp, const Basis& start, const Basis& query,
                             uint64_t trials, uint64_t seed, uint64_t trace_cap = 100000);
VisitEstimate estimate_visit_serial(const LinearProgram& lp, const Basis& start,
                                    const Basis& query, uint64_t trials, uint64_t seed,
                                    uint64_t trace_cap = 100000);

enum class FpVerdict { Below, Above, Undecided };
const char* fp_verdict_name(FpVerdict v);

/// Promise-gap decision: the interval [f, f + 1/p] is split at its
/// midpoint; Below / Above when the confidence interval around the
/// estimate clears the midpoint on one side, Undecided when it straddles
/// (the caller then raises the trial count). An exact probability, when
/// present, is used with radius zero.
FpVerdict decide_fp(const VisitEstimate& estimate, const Rational& f_value,
                    const Rational& p_value, double delta);

}  // namespace pivotlab
