#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivotlab/rule_r.hpp"
#include "testutil.hpp"

using namespace pivotlab;

namespace {

Circuit identity_circuit(int n) {
  Circuit c;
  c.n = n;
  for (int i = 0; i < n; ++i) {
    c.gates.push_back({Gate::Op::Input, -1, -1});
    c.outputs.push_back(i);
  }
  c.validate();
  return c;
}

Circuit complement_circuit(int n) {
  Circuit c;
  c.n = n;
  for (int i = 0; i < n; ++i) c.gates.push_back({Gate::Op::Input, -1, -1});
  for (int i = 0; i < n; ++i) {
    c.gates.push_back({Gate::Op::Not, i, -1});
    c.outputs.push_back(n + i);
  }
  c.validate();
  return c;
}

std::vector<Circuit> bundled_circuits(int n) {
  return {gray_successor_circuit(n), toggle_last_circuit(n), lowest_zero_walker_circuit(n)};
}

}  // namespace

TEST_CASE("gate-level evaluation basics") {
  // not / and over constant chains built from one input
  Circuit c;
  c.n = 2;
  c.gates.push_back({Gate::Op::Input, -1, -1});
  c.gates.push_back({Gate::Op::Input, -1, -1});
  c.gates.push_back({Gate::Op::Not, 0, -1});    // !x1
  c.gates.push_back({Gate::Op::And, 2, 1, });   // !x1 & x2
  c.outputs = {2, 3};
  c.validate();
  CHECK(eval_circuit(c, BitString::from_string("00")).to_string() == "10");
  CHECK(eval_circuit(c, BitString::from_string("10")).to_string() == "00");
  CHECK(eval_circuit(c, BitString::from_string("01")).to_string() == "11");
  CHECK_THROWS_AS(eval_circuit(c, BitString::from_string("010")), Error);
}

TEST_CASE("the walker flips the lowest zero, pinned at n = 2") {
  Circuit c = lowest_zero_walker_circuit(2);
  CHECK(eval_circuit(c, BitString::from_string("00")).to_string() == "01");
  CHECK(eval_circuit(c, BitString::from_string("01")).to_string() == "11");
  CHECK(eval_circuit(c, BitString::from_string("11")).to_string() == "10");
  CHECK(eval_circuit(c, BitString::from_string("10")).to_string() == "11");
}

TEST_CASE("c_step returns the unique flip and checks the promise") {
  Circuit walker = lowest_zero_walker_circuit(3);
  CircuitStep s = c_step(walker, BitString::from_string("011"));
  CHECK(s.y.to_string() == "111");
  CHECK(s.flip_index == 1);

  try {
    c_step(identity_circuit(3), BitString::from_string("010"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PromiseViolation);  // distance 0
  }
  try {
    c_step(complement_circuit(3), BitString::from_string("010"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PromiseViolation);  // distance n
  }
}

TEST_CASE("bundled families keep the distance-1 promise on every input") {
  for (int n = 2; n <= 5; ++n) {
    for (const Circuit& c : bundled_circuits(n)) {
      for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) {
        BitString x = gray_unrank(n, w);
        CHECK_NOTHROW(c_step(c, x));
      }
    }
  }
}

TEST_CASE("the gray-successor circuit mirrors the arithmetic successor") {
  for (int n = 2; n <= 5; ++n) {
    Circuit c = gray_successor_circuit(n);
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t k = 0; k + 1 < total; ++k) {
      BitString x = gray_unrank(n, k);
      CHECK(eval_circuit(c, x) == gray_succ(x));
    }
    // the top word steps back to its predecessor
    CHECK(eval_circuit(c, top_of_code(n)) == gray_pred(top_of_code(n)));
  }
}

TEST_CASE("walk membership: start, full walk, and a two-cycle miss") {
  Circuit gray3 = gray_successor_circuit(3);
  CHECK(c_path_member(gray3, all_zero_string(3)) == PathVerdict::Yes);
  for (uint64_t k = 0; k < 8; ++k)
    CHECK(c_path_member(gray3, gray_unrank(3, k)) == PathVerdict::Yes);

  Circuit toggle3 = toggle_last_circuit(3);
  CHECK(c_path_member(toggle3, BitString::from_string("110")) == PathVerdict::No);
  CHECK(c_path_member(toggle3, BitString::from_string("001")) == PathVerdict::Yes);

  Circuit walker4 = lowest_zero_walker_circuit(4);
  CHECK(c_path_member(walker4, BitString::from_string("0011")) == PathVerdict::Yes);
  CHECK(c_path_member(walker4, BitString::from_string("1110")) == PathVerdict::Yes);
  CHECK(c_path_member(walker4, BitString::from_string("1001")) == PathVerdict::No);
}

TEST_CASE("pinned steps of the constructed rule, paper variant, n = 2") {
  RuleRContext ctx{lowest_zero_walker_circuit(2), BitString::from_string("11")};

  // word flip is non-increasing: the counter bumps instead
  BitString b = BitString::from_string("0010");
  CHECK(rule_r_next(RuleRVariant::Paper, ctx, b).to_string() == "0110");

  // word flip is increasing: the word advances
  b = BitString::from_string("0000");
  CHECK(rule_r_next(RuleRVariant::Paper, ctx, b).to_string() == "0001");

  // the terminal state is rejected as input
  CHECK_THROWS_AS(rule_r_next(RuleRVariant::Paper, ctx, BitString::from_string("1000")),
                  std::invalid_argument);
}

TEST_CASE("after a counter bump the same word flip becomes increasing") {
  RuleRContext ctx{lowest_zero_walker_circuit(3), BitString::from_string("111")};
  const int n = 3;
  for (uint64_t s = 0; s < (uint64_t{1} << (2 * n)); ++s) {
    BitString state = gray_unrank(2 * n, s);
    if (state == top_of_code(2 * n)) continue;
    BitString b1(n), b2(n);
    for (int i = 0; i < n; ++i) {
      b1.bits[static_cast<size_t>(i)] = state.bits[static_cast<size_t>(i)];
      b2.bits[static_cast<size_t>(i)] = state.bits[static_cast<size_t>(n + i)];
    }
    if (b2 == ctx.x_c || b1 == top_of_code(n)) continue;  // simulation clause only
    CircuitStep cs = c_step(ctx.circuit, b2);
    if (increasing(state, n + cs.flip_index)) continue;
    BitString bumped = rule_r_next(RuleRVariant::Paper, ctx, state);
    CHECK(increasing(bumped, n + cs.flip_index));
  }
}

TEST_CASE("every repaired step flips one bit and raises the rank") {
  const int n = 3;
  RuleRContext ctx{gray_successor_circuit(n), BitString::from_string("011")};
  for (uint64_t s = 0; s < (uint64_t{1} << (2 * n)); ++s) {
    BitString state = gray_unrank(2 * n, s);
    if (state == top_of_code(2 * n)) continue;
    DiagnosticLog log;
    BitString next = rule_r_next(RuleRVariant::Repaired, ctx, state, &log);
    CHECK(single_flip_index(state, next) >= 1);
    CHECK(gray_rank(next) > gray_rank(state));
  }
}

TEST_CASE("reduction packaging") {
  Circuit c = gray_successor_circuit(3);
  BitString xc = BitString::from_string("011");
  ReductionInstance inst = build_reduction(c, xc);
  CHECK(inst.km.d == 6);
  CHECK(inst.km.lp.m == 12);  // every inequality of the cube is a row
  CHECK(inst.b_hat_bits.to_string() == "100011");
  CHECK(inst.b0_bits.to_string() == "000000");
  CHECK(inst.km.basis_vertex(inst.b_hat) == inst.b_hat_bits);

  try {
    build_reduction(c, all_zero_string(3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrivialQuery);
  }
  CHECK_THROWS_AS(build_reduction(gray_successor_circuit(2), BitString::from_string("01")),
                  std::invalid_argument);
}

TEST_CASE("repaired walk matches the direct walk exhaustively at n = 3") {
  const int n = 3;
  for (const Circuit& c : bundled_circuits(n)) {
    for (uint64_t w = 1; w < (uint64_t{1} << n); ++w) {
      BitString xc = gray_unrank(n, w);
      ReductionInstance inst = build_reduction(c, xc);
      RPathResult run = r_path_member(RuleRVariant::Repaired, inst);
      PathVerdict direct = c_path_member(c, xc);
      CHECK(run.diagnostics.empty());
      CHECK(run.verdict == (direct == PathVerdict::Yes ? RVerdict::Yes : RVerdict::No));
      CHECK(run.steps < (uint64_t{1} << (2 * n + 1)));
    }
  }
}

TEST_CASE("paper variant reproduces its defects") {
  const int n = 3;
  // success instance: the gray circuit reaches every word, and the run
  // dies asking for a successor past the end of the counter right at the
  // target state
  {
    ReductionInstance inst = build_reduction(gray_successor_circuit(n),
                                             BitString::from_string("011"));
    RPathResult run = r_path_member(RuleRVariant::Paper, inst);
    CHECK(run.verdict == RVerdict::Diagnostic);
    CHECK(run.visited_target);
    bool end_of_code = false;
    for (const auto& d : run.diagnostics)
      end_of_code = end_of_code || d.kind == RuleRDiagnostic::EndOfCode;
    CHECK(end_of_code);
  }
  // failure instance: the two-cycle walk exhausts the counter, and the
  // top-block clause then steps against the objective
  {
    ReductionInstance inst = build_reduction(toggle_last_circuit(n),
                                             BitString::from_string("110"));
    RPathResult run = r_path_member(RuleRVariant::Paper, inst);
    CHECK(run.verdict == RVerdict::Diagnostic);
    bool monotonicity = false, end_of_code = false;
    for (const auto& d : run.diagnostics) {
      monotonicity = monotonicity || d.kind == RuleRDiagnostic::MonotonicityViolation;
      end_of_code = end_of_code || d.kind == RuleRDiagnostic::EndOfCode;
    }
    CHECK(monotonicity);
    CHECK(end_of_code);
  }
}

TEST_CASE("repaired walk is a valid basis trace over the cube") {
  ReductionInstance inst = build_reduction(lowest_zero_walker_circuit(3),
                                           BitString::from_string("110"));
  PathTrace t = trace_rule_r(RuleRVariant::Repaired, inst);
  REQUIRE(t.verdict.kind == Verdict::Kind::Terminal);
  CHECK(t.verdict.classification.kind == Classification::Kind::Optimal);
  t.check_invariants();
  CHECK(inst.km.basis_vertex(t.bases.back()) == top_of_code(6));
}
