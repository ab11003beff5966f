#pragma once

#include "pivotlab/lp.hpp"

namespace pivotlab {

struct BruteForceResult {
  enum class Kind { Optimal, Unbounded, Infeasible };
  Kind kind = Kind::Infeasible;
  BigMScalar value;  // set for Optimal
  Basis basis;       // set for Optimal

  friend bool operator==(const BruteForceResult& a, const BruteForceResult& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != Kind::Optimal) return true;
    return a.value == b.value && a.basis == b.basis;
  }
};

const char* brute_force_kind_name(BruteForceResult::Kind kind);

uint64_t binomial(int n, int m);

/// All C(n, m) column subsets in lexicographic order (1-based indices).
std::vector<Basis> enumerate_bases(int n, int m, uint64_t cap = 1000000);

/// Exhaustive optimum over basic solutions. Enumerates every basis,
/// classifies, and reports the best feasible objective; Unbounded when the
/// best feasible basis carries an improving ray instead of an optimality
/// certificate; Infeasible when no feasible basis exists. TOO_LARGE when
/// C(n, m) exceeds the cap; DEGENERATE_TIE when degeneracy leaves the
/// enumeration inconclusive.
///
/// The serial version classifies every basis, literally. The default
/// version prunes to feasibility checks plus one final classification and
/// runs the scan under OpenMP; both return identical results.
BruteForceResult brute_force_optimum_serial(const LinearProgram& lp, uint64_t cap = 1000000);
BruteForceResult brute_force_optimum(const LinearProgram& lp, uint64_t cap = 1000000);

}  // namespace pivotlab
