#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivotlab/lp.hpp"
#include "testutil.hpp"

using namespace pivotlab;
using testutil::Q;
using testutil::one_row_lp;
using testutil::plain;

namespace {

// max x1  s.t.  x1 + x2 = 1
LinearProgram tiny_lp() { return one_row_lp({1, 1}, 1, {1, 0}); }

// max x2  s.t.  x1 - x2 = 0
LinearProgram ray_lp() { return one_row_lp({1, -1}, 0, {0, 1}); }

// max x1  s.t.  x1 + x2 = -1
LinearProgram empty_lp() { return one_row_lp({1, 1}, -1, {1, 0}); }

/// Re-checks a classification witness directly from A, b and an
/// independently recomputed inverse, without reusing classify's internals.
void recheck_witness(const LinearProgram& lp, const Basis& basis, const Classification& cls) {
  std::vector<int> cols0;
  for (int j : basis.cols) cols0.push_back(j - 1);
  RatMatrix b_inv = inverse(lp.A.select_columns(cols0));
  RatVector x = mat_vec(b_inv, lp.b);
  auto reduced = reduced_costs(lp, basis);
  const BigMScalar zero;

  switch (cls.kind) {
    case Classification::Kind::Optimal: {
      for (const Rational& v : x) CHECK(v >= 0);
      for (const BigMScalar& r : reduced) CHECK(r <= zero);
      break;
    }
    case Classification::Kind::Unbounded: {
      const int j = cls.witness;
      CHECK(zero < reduced[static_cast<size_t>(j - 1)]);
      RatVector u = mat_vec(b_inv, lp.A.column(j - 1));
      for (const Rational& v : u) CHECK(v <= 0);
      break;
    }
    case Classification::Kind::Infeasible: {
      const int i = cls.witness - 1;
      Rational row_b(0);
      for (int k = 0; k < lp.m; ++k) row_b += b_inv.at(i, k) * lp.b[static_cast<size_t>(k)];
      CHECK(row_b < 0);
      for (int j = 0; j < lp.n; ++j) {
        Rational v(0);
        for (int k = 0; k < lp.m; ++k) v += b_inv.at(i, k) * lp.A.at(k, j);
        CHECK(v >= 0);
      }
      break;
    }
    case Classification::Kind::NonTerminal:
      break;
  }
}

}  // namespace

TEST_CASE("basic_solution on the tiny program") {
  LinearProgram lp = tiny_lp();
  CHECK(basic_solution(lp, Basis({1})) == RatVector{Q(1)});
  CHECK(basic_solution(lp, Basis({2})) == RatVector{Q(1)});
  // an infeasible basic solution is still returned
  CHECK(basic_solution(empty_lp(), Basis({1})) == RatVector{Q(-1)});
}

TEST_CASE("reduced costs, hand-evaluated") {
  LinearProgram lp = tiny_lp();
  auto rc2 = reduced_costs(lp, Basis({2}));
  CHECK(rc2[0] == plain(1));
  CHECK(rc2[1] == plain(0));
  auto rc1 = reduced_costs(lp, Basis({1}));
  CHECK(rc1[0] == plain(0));
  CHECK(rc1[1] == plain(-1));
}

TEST_CASE("classification of the three hand witnesses") {
  Classification opt = classify_basis(tiny_lp(), Basis({1}));
  CHECK(opt.kind == Classification::Kind::Optimal);
  recheck_witness(tiny_lp(), Basis({1}), opt);

  Classification unb = classify_basis(ray_lp(), Basis({1}));
  CHECK(unb.kind == Classification::Kind::Unbounded);
  CHECK(unb.witness == 2);
  recheck_witness(ray_lp(), Basis({1}), unb);

  Classification inf = classify_basis(empty_lp(), Basis({1}));
  CHECK(inf.kind == Classification::Kind::Infeasible);
  CHECK(inf.witness == 1);
  recheck_witness(empty_lp(), Basis({1}), inf);
}

TEST_CASE("exactly one classification per basis, witnesses re-checked") {
  testutil::InstanceGen gen(99);
  for (int t = 0; t < 25; ++t) {
    LinearProgram lp = gen.random_lp(2, 5, t % 2 == 0);
    for (const Basis& basis : {Basis({1, 2}), Basis({1, 3}), Basis({2, 4}), Basis({4, 5})}) {
      Classification cls;
      try {
        cls = classify_basis(lp, basis);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularBasis);
        continue;
      }
      recheck_witness(lp, basis, cls);
    }
  }
}

TEST_CASE("pivot mechanics and errors") {
  LinearProgram lp = tiny_lp();
  PivotResult res = pivot(lp, Basis({2}), 1);
  CHECK(res.next == Basis({1}));
  CHECK(res.leaving == 2);
  CHECK(res.step == Q(1));
  CHECK(adjacent(Basis({2}), res.next));

  CHECK_THROWS_AS(pivot(lp, Basis({2}), 2), std::invalid_argument);  // enter already basic
  CHECK_THROWS_AS(pivot(ray_lp(), Basis({1}), 2), Error);            // unbounded direction
  try {
    pivot(ray_lp(), Basis({1}), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundedDirection);
  }
}

TEST_CASE("pivot surfaces degenerate ties") {
  // two rows forced through the same ratio
  LinearProgram lp;
  lp.m = 2;
  lp.n = 3;
  lp.A = RatMatrix(2, 3);
  lp.A.at(0, 0) = Q(1);
  lp.A.at(0, 2) = Q(1);
  lp.A.at(1, 1) = Q(1);
  lp.A.at(1, 2) = Q(1);
  lp.b = {Q(1), Q(1)};
  lp.c = {plain(0), plain(0), plain(1)};
  lp.validate();
  try {
    pivot(lp, Basis({1, 2}), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTie);
  }
}

TEST_CASE("big-M transform shape and start") {
  LinearProgram lp = one_row_lp({1}, 1, {1});
  BigMProgram big = big_m_transform(lp);
  CHECK(big.lp.n == 2 * lp.n);
  CHECK(big.lp.A.at(0, 0) == Q(1));
  CHECK(big.lp.A.at(0, 1) == Q(-1));
  CHECK(big.lp.c[0] == plain(1));
  CHECK(big.lp.c[1] == BigMScalar(Q(0), Q(-1)));
  CHECK(big.start == Basis({1}));

  LinearProgram neg = one_row_lp({1}, -1, {1});
  BigMProgram big_neg = big_m_transform(neg);
  CHECK(big_neg.start == Basis({2}));
  CHECK(basic_solution(big_neg.lp, big_neg.start) == RatVector{Q(1)});
}

TEST_CASE("big-M start basis is always primal feasible") {
  testutil::InstanceGen gen(4242);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + static_cast<int>(gen.rng() % 4);
    const int n = m + static_cast<int>(gen.rng() % 5);
    LinearProgram lp = gen.random_lp(m, n, false);
    BigMProgram big = big_m_transform(lp);
    for (const Rational& v : basic_solution(big.lp, big.start)) CHECK(v >= 0);
  }
}

TEST_CASE("objective strictly increases across a pivot with positive reduced cost") {
  testutil::InstanceGen gen(777);
  int checked = 0;
  while (checked < 40) {
    LinearProgram lp = gen.random_lp(2, 5, true);
    BigMProgram big = big_m_transform(lp);
    BasisView view = make_view(big.lp, big.start);
    if (!view.feasible()) continue;
    const BigMScalar zero;
    int enter = 0;
    for (int j = 1; j <= big.lp.n && !enter; ++j)
      if (zero < view.reduced[static_cast<size_t>(j - 1)]) enter = j;
    if (!enter) continue;
    PivotResult res;
    try {
      res = pivot_view(big.lp, view, enter);
    } catch (const Error&) {
      continue;  // degenerate or unbounded draw
    }
    CHECK(view.objective(big.lp) < make_view(big.lp, res.next).objective(big.lp));
    CHECK(adjacent(big.start, res.next));
    ++checked;
  }
}

TEST_CASE("programs with dependent rows are rejected on load") {
  LinearProgram lp;
  lp.m = 2;
  lp.n = 2;
  lp.A = RatMatrix(2, 2);
  lp.A.at(0, 0) = Q(1);
  lp.A.at(0, 1) = Q(1);
  lp.A.at(1, 0) = Q(2);
  lp.A.at(1, 1) = Q(2);
  lp.b = {Q(1), Q(2)};
  lp.c = {plain(1), plain(0)};
  CHECK_THROWS_AS(lp.validate(), Error);
}
