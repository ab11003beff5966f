#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pivotlab/lp.hpp"

namespace pivotlab {

enum class RuleKind {
  Dantzig,
  Bland,
  SteepestEdge,
  GreatestImprovement,
  RandomIndex,
  ShadowVertex,
  RuleRPaper,
  RuleRRepaired,
};

const char* rule_kind_name(RuleKind kind);
RuleKind rule_kind_from_name(const std::string& name);

/// Rule selector. RandomIndex draws from a deterministic stream seeded
/// here; the stream is owned by the trace loop, never by the rule itself.
struct Rule {
  RuleKind kind = RuleKind::Dantzig;
  uint64_t seed = 0;
};

bool is_primal_rule(RuleKind kind);

/// splitmix64; used to derive independent streams from (seed, index).
uint64_t mix_seed(uint64_t seed, uint64_t index);

/// Deterministic RNG with explicit uniform sampling: the engine is the
/// fully specified mt19937_64, and the draw is rejection sampling, so
/// results do not depend on the standard library's distribution
/// implementations.
class RuleRng {
 public:
  explicit RuleRng(uint64_t seed) : engine_(mix_seed(seed, 0)) {}
  /// Uniform draw from {0, ..., k-1} by rejection.
  size_t uniform_below(size_t k);

 private:
  std::mt19937_64 engine_;
};

/// Entering column of the rule at a feasible, non-terminal basis. All ties
/// break toward the smallest column index. Requires J(B) nonempty.
int entering_column(const LinearProgram& lp, const BasisView& view, RuleKind kind,
                    RuleRng* rng = nullptr);

/// One step of the rule: entering_column followed by the exact ratio-test
/// pivot, with the potential increase re-checked at runtime
/// (MONOTONICITY_VIOLATION if it ever fails).
Basis next_basis(const LinearProgram& lp, const Basis& basis, RuleKind kind,
                 RuleRng* rng = nullptr);

struct Verdict {
  enum class Kind { Terminal, StepCapExceeded, RuleError };
  Kind kind = Kind::StepCapExceeded;
  Classification classification;  // set for Terminal
  ErrorCode error = ErrorCode::BadInput;  // set for RuleError

  static Verdict terminal(Classification c) { return {Kind::Terminal, c, ErrorCode::BadInput}; }
  static Verdict cap() { return {Kind::StepCapExceeded, {}, ErrorCode::BadInput}; }
  static Verdict rule_error(ErrorCode e) { return {Kind::RuleError, {}, e}; }
};

/// The rule's walk: bases, exact potential per basis, entering/leaving
/// columns per step, and how the walk ended. Consecutive bases are
/// adjacent and potentials strictly increase; check_invariants re-verifies
/// both from scratch.
struct PathTrace {
  std::vector<Basis> bases;
  std::vector<BigMScalar> potentials;
  std::vector<int> entering;  // per executed step
  std::vector<int> leaving;
  Verdict verdict;

  size_t steps() const { return entering.size(); }
  void check_invariants() const;  // throws on violation
};

/// Start basis for the rule. Primal rules need a known feasible start:
/// the big-M overload uses the transform's start; the explicit overload
/// checks feasibility. NEEDS_BIGM otherwise.
Basis initial_basis(const Rule& rule, const BigMProgram& big);

/// Runs the rule for at most `cap` pivots from an explicit feasible start.
PathTrace trace(const LinearProgram& lp, const Basis& start, const Rule& rule, uint64_t cap);

/// Convenience: big-M program with its built-in start.
PathTrace trace(const BigMProgram& big, const Rule& rule, uint64_t cap);

enum class MemberVerdict { Yes, No, Aborted };
const char* member_verdict_name(MemberVerdict v);

/// Does the walk visit `query` before terminating? Aborted when the cap
/// (or a rule error) cuts the walk first.
MemberVerdict path_member(const LinearProgram& lp, const Basis& start, const Rule& rule,
                          const Basis& query, uint64_t cap);
MemberVerdict path_member(const BigMProgram& big, const Rule& rule, const Basis& query,
                          uint64_t cap);

}  // namespace pivotlab
