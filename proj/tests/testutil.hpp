#pragma once

#include <random>
#include <vector>

#include "pivotlab/lp.hpp"
#include "pivotlab/rules.hpp"

namespace pivotlab::testutil {

inline Rational Q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline BigMScalar plain(long num, long den = 1) { return BigMScalar(Q(num, den)); }

/// maximize c^T x subject to the single row a^T x = b0.
inline LinearProgram one_row_lp(const std::vector<long>& a, long b0,
                                const std::vector<long>& c) {
  LinearProgram lp;
  lp.m = 1;
  lp.n = static_cast<int>(a.size());
  lp.A = RatMatrix(1, lp.n);
  for (int j = 0; j < lp.n; ++j) lp.A.at(0, j) = Q(a[static_cast<size_t>(j)]);
  lp.b = {Q(b0)};
  for (long cj : c) lp.c.push_back(plain(cj));
  lp.validate();
  return lp;
}

/// Literal reflected-code construction (0 G, 1 G^R); the independent
/// reference the arithmetic Gray routines are tested against.
inline std::vector<std::string> reference_gray_code(int d) {
  std::vector<std::string> code{"0", "1"};
  for (int len = 2; len <= d; ++len) {
    std::vector<std::string> next;
    next.reserve(code.size() * 2);
    for (const std::string& w : code) next.push_back("0" + w);
    for (auto it = code.rbegin(); it != code.rend(); ++it) next.push_back("1" + *it);
    code = std::move(next);
  }
  return code;
}

/// Deterministic random programs for the rule/oracle comparisons. With
/// ensure_bounded the first row is all ones (the feasible set lies in a
/// simplex slab) and b = A xbar for a nonnegative xbar, so the program is
/// feasible and bounded by construction.
struct InstanceGen {
  std::mt19937_64 rng;

  explicit InstanceGen(uint64_t seed) : rng(seed) {}

  long pick(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
  }

  LinearProgram random_lp(int m, int n, bool ensure_bounded) {
    while (true) {
      LinearProgram lp;
      lp.m = m;
      lp.n = n;
      lp.A = RatMatrix(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
          lp.A.at(i, j) = (ensure_bounded && i == 0) ? Q(1) : Q(pick(-3, 3));
      if (rank(lp.A) != m) continue;
      if (ensure_bounded) {
        RatVector xbar(static_cast<size_t>(n), Rational(0));
        const int support = std::max(1, m);
        for (int k = 0; k < support; ++k)
          xbar[static_cast<size_t>(pick(0, n - 1))] += Q(pick(1, 3));
        lp.b = mat_vec(lp.A, xbar);
      } else {
        lp.b.clear();
        for (int i = 0; i < m; ++i) lp.b.push_back(Q(pick(-4, 4)));
      }
      lp.c.clear();
      for (int j = 0; j < n; ++j) lp.c.push_back(plain(pick(-4, 4)));
      return lp;
    }
  }
};

}  // namespace pivotlab::testutil
