#pragma once

#include "pivotlab/circuit.hpp"
#include "pivotlab/klee_minty.hpp"
#include "pivotlab/rules.hpp"

namespace pivotlab {

/// The circuit-driven rule runs on the 2n-dimensional cube. Its state is
/// the bit string B = (B1, B2): B1 is a Gray counter, B2 carries the
/// circuit walk. The terminal state is 1 0^{2n-1} = (top, 0^n), the cube's
/// optimum. The target basis of a membership query is (top, x_c).
enum class RuleRVariant { Paper, Repaired };

struct RuleRContext {
  Circuit circuit;
  BitString x_c;

  int n() const { return circuit.n; }
};

enum class RuleRDiagnostic {
  EndOfCode,             // a Gray step past the end of the code was requested
  MonotonicityViolation, // a step lowered the objective
  ReductionEdge,         // the drain was forced through the target word
  InvariantViolation,    // a counter block was crossed with an unexpected word
  PromiseViolation,      // the circuit output broke the distance-1 promise
};

const char* rule_r_diagnostic_name(RuleRDiagnostic d);

struct RuleRDiagnosticEvent {
  RuleRDiagnostic kind;
  uint64_t step;
  BitString state;
};

using DiagnosticLog = std::vector<RuleRDiagnosticEvent>;

/// One step of the rule on a non-terminal state.
///
/// Paper variant, dispatched in this order:
///   1. B2 = x_c          -> (succ(B1), B2)
///   2. B1 = top          -> (B1, succ(B2))
///   3. simulate: flip i = c_step(B2); coordinate n+i increasing at B
///      -> (B1, C(B2)), otherwise (succ(B1), B2).
/// succ past the end of the code throws END_OF_CODE; clause 2 lowers the
/// objective whenever it fires (the counter's top block is reversed), which
/// the caller records as a diagnostic rather than hiding.
///
/// Repaired variant, first matching clause with g1 = rank(B1),
/// top = 2^n - 1:
///   (i)   B1 = top word      -> (B1, pred(B2))            [sweep]
///   (ii)  B2 = x_c           -> (succ(B1), B2)             [success count]
///   (iii) g1 = top - 2       -> drain: B2 = 0^n ? (succ(B1), B2)
///         : (B1, down(B2)) where down picks, among single-bit flips of B2
///         with strictly smaller rank, the smallest landing rank whose
///         word is not x_c; when the only candidate is x_c it is taken and
///         REDUCTION_EDGE is raised.
///   (iv)  g1 = top - 1       -> (succ(B1), B2); INVARIANT_VIOLATION
///         unless B2 = 0^n.
///   (v)   simulate as in clause 3 above.
/// Every repaired clause strictly increases the Gray rank of the whole
/// 2n-string, hence the objective.
BitString rule_r_next(RuleRVariant variant, const RuleRContext& ctx, const BitString& state,
                      DiagnosticLog* diagnostics = nullptr, uint64_t step = 0);

/// Packaged membership query: the cube of dimension 2n, the start basis
/// (the all-zero vertex) and the target basis (top word followed by x_c).
struct ReductionInstance {
  RuleRContext ctx;
  KleeMintyInstance km;
  BitString b0_bits;
  BitString b_hat_bits;
  Basis b0;
  Basis b_hat;
};

/// Builds the query package. Requires width >= 3 and x_c != 0^n
/// (TRIVIAL_QUERY: the walk starts at 0^n, so the answer is Yes without
/// any construction). The distance-1 promise is spot-checked on a sample
/// of inputs here and enforced again at every simulated step.
ReductionInstance build_reduction(const Circuit& circuit, const BitString& x_c);

enum class RVerdict { Yes, No, Aborted, Diagnostic };
const char* r_verdict_name(RVerdict v);

struct RPathResult {
  RVerdict verdict = RVerdict::Aborted;
  bool visited_target = false;
  uint64_t steps = 0;
  DiagnosticLog diagnostics;
  std::vector<BitString> states;  // filled when keep_states is requested
};

/// Iterates the rule from 0^{2n}. Yes iff the target state is visited; No
/// when the terminal state arrives without it; Diagnostic when any
/// diagnostic fired (the answer is then reported but not trusted);
/// Aborted when the cap cuts the walk. Default cap 2^{2n+2}.
RPathResult r_path_member(RuleRVariant variant, const ReductionInstance& inst, uint64_t cap = 0,
                          bool keep_states = false);

/// The walk as a basis trace over the cube: bases are the canonical vertex
/// bases, the potential is the objective x_1. Only the repaired variant
/// yields a valid trace; the paper variant's violations surface in the
/// verdict.
PathTrace trace_rule_r(RuleRVariant variant, const ReductionInstance& inst, uint64_t cap = 0);

}  // namespace pivotlab
