#include "pivotlab/oracle.hpp"

#include <algorithm>

namespace pivotlab {

const char* brute_force_kind_name(BruteForceResult::Kind kind) {
  switch (kind) {
    case BruteForceResult::Kind::Optimal: return "Optimal";
    case BruteForceResult::Kind::Unbounded: return "Unbounded";
    case BruteForceResult::Kind::Infeasible: return "Infeasible";
  }
  return "?";
}

uint64_t binomial(int n, int m) {
  if (m < 0 || m > n) return 0;
  m = std::min(m, n - m);
  unsigned __int128 out = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 62;
  for (int i = 1; i <= m; ++i) {
    out = out * static_cast<unsigned>(n - m + i) / static_cast<unsigned>(i);
    if (out > limit) throw Error(ErrorCode::TooLarge, "binomial overflow");
  }
  return static_cast<uint64_t>(out);
}

namespace {

/// Combination of the given lexicographic rank (combinatorial number
/// system), as ascending 1-based indices.
std::vector<int> unrank_combination(uint64_t rank, int n, int m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(m));
  int next = 1;
  for (int k = m; k >= 1; --k) {
    // choose the smallest value v with C(n - v, k - 1) covering the rank
    for (int v = next;; ++v) {
      const uint64_t block = binomial(n - v, k - 1);
      if (rank < block) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

struct FeasibleScan {
  bool any_feasible = false;
  bool have_best = false;
  BigMScalar best_value;
  std::vector<int> best_cols;

  void absorb(const FeasibleScan& o) {
    any_feasible = any_feasible || o.any_feasible;
    if (!o.have_best) return;
    if (!have_best || best_value < o.best_value ||
        (best_value == o.best_value && o.best_cols < best_cols)) {
      have_best = true;
      best_value = o.best_value;
      best_cols = o.best_cols;
    }
  }

  void consider(const LinearProgram& lp, const std::vector<int>& cols) {
    std::vector<int> cols0;
    cols0.reserve(cols.size());
    for (int j : cols) cols0.push_back(j - 1);
    RatVector x;
    try {
      x = solve_square(lp.A.select_columns(cols0), lp.b);
    } catch (const Error&) {
      return;  // singular subset: not a basis
    }
    for (const Rational& v : x)
      if (v < 0) return;
    any_feasible = true;
    BigMScalar value;
    for (size_t k = 0; k < cols.size(); ++k)
      value += lp.c[static_cast<size_t>(cols[k] - 1)] * x[k];
    FeasibleScan single;
    single.any_feasible = true;
    single.have_best = true;
    single.best_value = std::move(value);
    single.best_cols = cols;
    absorb(single);
  }
};

BruteForceResult finish(const LinearProgram& lp, const FeasibleScan& scan) {
  BruteForceResult out;
  if (!scan.any_feasible) {
    out.kind = BruteForceResult::Kind::Infeasible;
    return out;
  }
  const Basis best{std::vector<int>(scan.best_cols)};
  Classification cls = classify_basis(lp, best);
  if (cls.kind == Classification::Kind::Optimal) {
    out.kind = BruteForceResult::Kind::Optimal;
    out.value = scan.best_value;
    out.basis = best;
    return out;
  }
  if (cls.kind == Classification::Kind::Unbounded) {
    out.kind = BruteForceResult::Kind::Unbounded;
    return out;
  }
  // The best feasible basis improves somewhere yet no basis beats it:
  // only degeneracy allows that.
  throw Error(ErrorCode::DegenerateTie, "enumeration inconclusive: degenerate optimum");
}

}  // namespace

std::vector<Basis> enumerate_bases(int n, int m, uint64_t cap) {
  const uint64_t total = binomial(n, m);
  if (total > cap) throw Error(ErrorCode::TooLarge, "too many column subsets");
  std::vector<Basis> out;
  out.reserve(static_cast<size_t>(total));
  for (uint64_t r = 0; r < total; ++r) out.push_back(Basis(unrank_combination(r, n, m)));
  return out;
}

BruteForceResult brute_force_optimum_serial(const LinearProgram& lp, uint64_t cap) {
  const uint64_t total = binomial(lp.n, lp.m);
  if (total > cap) throw Error(ErrorCode::TooLarge, "too many column subsets");

  // Literal sweep: classify every nonsingular basis.
  bool any_feasible = false;
  bool saw_unbounded_at_feasible = false;
  FeasibleScan scan;
  for (uint64_t r = 0; r < total; ++r) {
    std::vector<int> combo = unrank_combination(r, lp.n, lp.m);
    BasisView view;
    try {
      view = make_view(lp, Basis(std::vector<int>(combo)));
    } catch (const Error&) {
      continue;
    }
    Classification cls = classify_view(lp, view);
    if (!view.feasible()) continue;
    any_feasible = true;
    if (cls.kind == Classification::Kind::Unbounded) saw_unbounded_at_feasible = true;
    scan.consider(lp, combo);
  }
  if (!any_feasible) return {BruteForceResult::Kind::Infeasible, {}, {}};
  BruteForceResult out = finish(lp, scan);
  if (out.kind == BruteForceResult::Kind::Unbounded && !saw_unbounded_at_feasible)
    throw Error(ErrorCode::DegenerateTie, "unbounded verdict without a feasible certificate");
  return out;
}

BruteForceResult brute_force_optimum(const LinearProgram& lp, uint64_t cap) {
  const uint64_t total = binomial(lp.n, lp.m);
  if (total > cap) throw Error(ErrorCode::TooLarge, "too many column subsets");

  FeasibleScan scan;
#pragma omp parallel
  {
    FeasibleScan local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long r = 0; r < static_cast<long long>(total); ++r)
      local.consider(lp, unrank_combination(static_cast<uint64_t>(r), lp.n, lp.m));
#pragma omp critical
    scan.absorb(local);
  }
  return finish(lp, scan);
}

}  // namespace pivotlab
