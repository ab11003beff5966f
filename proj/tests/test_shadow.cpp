#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pivotlab/oracle.hpp"
#include "pivotlab/shadow.hpp"
#include "testutil.hpp"

using namespace pivotlab;
using testutil::Q;
using testutil::one_row_lp;

namespace {

// max x1  s.t.  x1 + x2 = 1
LinearProgram tiny_lp() { return one_row_lp({1, 1}, 1, {1, 0}); }

Basis greedy_start(const LinearProgram& lp) {
  std::vector<int> cols0 = greedy_column_basis(lp.A);
  for (int& c : cols0) ++c;
  return Basis(cols0);
}

}  // namespace

TEST_CASE("homotopy construction fixes unit basics and -1 reduced costs") {
  LinearProgram lp = tiny_lp();
  ShadowHomotopy h = make_homotopy(lp, Basis({2}));
  CHECK(h.b0_rhs == RatVector{Q(1)});
  CHECK(h.c0_cost == RatVector{Q(-1), Q(0)});

  testutil::InstanceGen gen(17);
  for (int t = 0; t < 20; ++t) {
    LinearProgram random = gen.random_lp(3, 7, true);
    Basis b0 = greedy_start(random);
    ShadowHomotopy hh = make_homotopy(random, b0);
    // all basic values exactly one under b0
    LinearProgram at_zero = random;
    at_zero.b = hh.b0_rhs;
    RatVector x = basic_solution(at_zero, b0);
    for (const Rational& v : x) CHECK(v == Q(1));
    // all nonbasic reduced costs exactly -1 under c0
    LinearProgram costed = random;
    for (int j = 0; j < costed.n; ++j)
      costed.c[static_cast<size_t>(j)] = BigMScalar(hh.c0_cost[static_cast<size_t>(j)]);
    auto rc = reduced_costs(costed, b0);
    for (int j = 1; j <= costed.n; ++j)
      if (!b0.contains(j)) CHECK(rc[static_cast<size_t>(j - 1)] == BigMScalar(Q(-1)));
  }
}

TEST_CASE("big-M costs are rejected") {
  LinearProgram lp = tiny_lp();
  lp.c[0] = BigMScalar(Q(0), Q(-1));
  CHECK_THROWS_AS(make_homotopy(lp, Basis({2})), Error);
}

TEST_CASE("hand-solved intervals on the tiny program") {
  LinearProgram lp = tiny_lp();
  ShadowHomotopy h = make_homotopy(lp, Basis({2}));

  LambdaInterval at_start = lambda_interval(lp, h, Basis({2}));
  CHECK_FALSE(at_start.empty);
  CHECK(at_start.lo == Q(0));
  CHECK(at_start.hi == Q(1, 2));

  LambdaInterval at_opt = lambda_interval(lp, h, Basis({1}));
  CHECK_FALSE(at_opt.empty);
  CHECK(at_opt.lo == Q(1, 2));
  CHECK(at_opt.hi == Q(1));

  CHECK(shadow_member(lp, h, Basis({2})));
  CHECK(shadow_member(lp, h, Basis({1})));
}

TEST_CASE("shadow_next crosses the breakpoint at 1/2") {
  LinearProgram lp = tiny_lp();
  ShadowHomotopy h = make_homotopy(lp, Basis({2}));
  ShadowStep step = shadow_next(lp, h, Basis({2}));
  CHECK(step.next == Basis({1}));
  CHECK(step.breakpoint == Q(1, 2));
  CHECK_THROWS_AS(shadow_next(lp, h, Basis({1})), std::invalid_argument);  // hi = 1 already
}

TEST_CASE("a duplicated column forces a degenerate tie") {
  LinearProgram lp = one_row_lp({1, 1, 1}, 1, {1, 1, 0});
  ShadowHomotopy h = make_homotopy(lp, Basis({3}));
  try {
    shadow_next(lp, h, Basis({3}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTie);
  }
}

TEST_CASE("a basis violating a lambda-free inequality has an empty interval") {
  // x3 is priced so badly that the basis {3} fails the dual system at
  // every lambda; its direction also never helps the primal side
  LinearProgram lp = one_row_lp({1, 1, -1}, 1, {1, 0, 0});
  ShadowHomotopy h = make_homotopy(lp, Basis({2}));
  LambdaInterval iv = lambda_interval(lp, h, Basis({3}));
  CHECK(iv.empty);
  CHECK_FALSE(shadow_member(lp, h, Basis({3})));
}

TEST_CASE("walk intervals chain across [0,1] and match membership exactly") {
  testutil::InstanceGen gen(808);
  int accepted = 0;
  uint64_t attempt = 0;
  while (accepted < 25 && attempt < 4000) {
    ++attempt;
    const int m = 1 + static_cast<int>(gen.rng() % 3);
    const int n = m + 1 + static_cast<int>(gen.rng() % 4);
    LinearProgram lp = gen.random_lp(m, n, true);
    Basis b0 = greedy_start(lp);
    ShadowHomotopy h = make_homotopy(lp, b0);
    PathTrace walk = trace_shadow(lp, h, 10000);
    if (walk.verdict.kind != Verdict::Kind::Terminal) continue;  // degenerate: redraw
    if (walk.verdict.classification.kind != Classification::Kind::Optimal) continue;
    walk.check_invariants();
    ++accepted;

    // consecutive intervals meet at single shared breakpoints and cover [0,1]
    Rational reached(0);
    for (size_t i = 0; i < walk.bases.size(); ++i) {
      LambdaInterval iv = lambda_interval(lp, h, walk.bases[i]);
      REQUIRE_FALSE(iv.empty);
      CHECK(iv.lo == reached);
      if (i + 1 < walk.bases.size()) CHECK(iv.hi < 1);
      reached = iv.hi;
    }
    CHECK(reached == Q(1));

    // membership is exactly the walk, checked over every nonsingular basis
    std::set<std::vector<int>> on_walk;
    for (const Basis& b : walk.bases) on_walk.insert(b.cols);
    for (const Basis& b : enumerate_bases(lp.n, lp.m)) {
      bool member;
      try {
        member = shadow_member(lp, h, b);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularBasis);
        continue;
      }
      CHECK(member == (on_walk.count(b.cols) > 0));
    }
  }
  CHECK(accepted >= 25);
}

TEST_CASE("the walk ends at an optimum certified by enumeration") {
  testutil::InstanceGen gen(909);
  int accepted = 0;
  while (accepted < 10) {
    LinearProgram lp = gen.random_lp(2, 6, true);
    ShadowHomotopy h = make_homotopy(lp, greedy_start(lp));
    PathTrace walk = trace_shadow(lp, h, 10000);
    if (walk.verdict.kind != Verdict::Kind::Terminal) continue;
    if (walk.verdict.classification.kind != Classification::Kind::Optimal) continue;
    BruteForceResult oracle = brute_force_optimum(lp);
    REQUIRE(oracle.kind == BruteForceResult::Kind::Optimal);
    CHECK(make_view(lp, walk.bases.back()).objective(lp) == oracle.value);
    ++accepted;
  }
}
