#include "pivotlab/rules.hpp"

#include <algorithm>

namespace pivotlab {

const char* rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::Dantzig: return "dantzig";
    case RuleKind::Bland: return "bland";
    case RuleKind::SteepestEdge: return "steepest-edge";
    case RuleKind::GreatestImprovement: return "greatest-improvement";
    case RuleKind::RandomIndex: return "random-index";
    case RuleKind::ShadowVertex: return "shadow-vertex";
    case RuleKind::RuleRPaper: return "rule-r";
    case RuleKind::RuleRRepaired: return "rule-r-repaired";
  }
  return "?";
}

RuleKind rule_kind_from_name(const std::string& name) {
  for (RuleKind k :
       {RuleKind::Dantzig, RuleKind::Bland, RuleKind::SteepestEdge,
        RuleKind::GreatestImprovement, RuleKind::RandomIndex, RuleKind::ShadowVertex,
        RuleKind::RuleRPaper, RuleKind::RuleRRepaired})
    if (name == rule_kind_name(k)) return k;
  throw Error(ErrorCode::BadInput, "unknown rule '" + name + "'");
}

bool is_primal_rule(RuleKind kind) {
  switch (kind) {
    case RuleKind::Dantzig:
    case RuleKind::Bland:
    case RuleKind::SteepestEdge:
    case RuleKind::GreatestImprovement:
    case RuleKind::RandomIndex:
      return true;
    default:
      return false;
  }
}

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

size_t RuleRng::uniform_below(size_t k) {
  if (k == 0) throw std::invalid_argument("uniform_below(0)");
  if (k == 1) return 0;
  const uint64_t span = UINT64_MAX - UINT64_MAX % k;
  uint64_t v;
  do {
    v = engine_();
  } while (v >= span);
  return static_cast<size_t>(v % k);
}

namespace {

std::vector<int> improving_columns(const LinearProgram& lp, const BasisView& view) {
  const BigMScalar zero;
  std::vector<int> j_set;
  for (int j = 1; j <= lp.n; ++j)
    if (zero < view.reduced[static_cast<size_t>(j - 1)]) j_set.push_back(j);
  return j_set;
}

/// Ratio-test step length for a candidate entering column, or nullopt when
/// the direction is unbounded. DEGENERATE_TIE as in pivot.
std::optional<Rational> step_length(const LinearProgram& lp, const BasisView& view, int j) {
  RatVector u = view.direction(lp, j);
  bool found = false, tie = false;
  Rational best;
  for (int i = 0; i < lp.m; ++i) {
    if (!(u[static_cast<size_t>(i)] > 0)) continue;
    Rational ratio = view.x[static_cast<size_t>(i)] / u[static_cast<size_t>(i)];
    if (!found || ratio < best) {
      best = ratio;
      found = true;
      tie = false;
    } else if (ratio == best) {
      tie = true;
    }
  }
  if (!found) return std::nullopt;
  if (tie || best == 0) throw Error(ErrorCode::DegenerateTie, "ratio test tied or stalled");
  return best;
}

}  // namespace

int entering_column(const LinearProgram& lp, const BasisView& view, RuleKind kind, RuleRng* rng) {
  if (!view.feasible()) throw std::invalid_argument("primal rules need a feasible basis");
  std::vector<int> j_set = improving_columns(lp, view);
  if (j_set.empty()) throw std::invalid_argument("no improving column at this basis");

  switch (kind) {
    case RuleKind::Bland:
      return j_set.front();

    case RuleKind::Dantzig: {
      int best = j_set.front();
      for (int j : j_set)
        if (view.reduced[static_cast<size_t>(best - 1)] < view.reduced[static_cast<size_t>(j - 1)]) best = j;
      return best;
    }

    case RuleKind::SteepestEdge: {
      // argmax c_j / ||B^{-1}A_j||, decided exactly on squares:
      // (c_j)^2 ||u_best||^2 vs (c_best)^2 ||u_j||^2.
      int best = j_set.front();
      Rational best_norm2 = dot(view.direction(lp, best), view.direction(lp, best));
      for (size_t t = 1; t < j_set.size(); ++t) {
        const int j = j_set[t];
        RatVector u = view.direction(lp, j);
        Rational norm2 = dot(u, u);
        if (bigm_square_compare(view.reduced[static_cast<size_t>(j - 1)], best_norm2,
                                view.reduced[static_cast<size_t>(best - 1)],
                                norm2) == Ordering::Greater) {
          best = j;
          best_norm2 = norm2;
        }
      }
      return best;
    }

    case RuleKind::GreatestImprovement: {
      // argmax over J of c_j * theta_j; a column with no blocking row is
      // treated as infinitely improving, and the smallest such wins.
      int best = -1;
      BigMScalar best_gain;
      for (int j : j_set) {
        std::optional<Rational> theta = step_length(lp, view, j);
        if (!theta) return j;  // j_set is ascending, so this is the smallest
        BigMScalar gain = view.reduced[static_cast<size_t>(j - 1)] * *theta;
        if (best < 0 || best_gain < gain) {
          best = j;
          best_gain = gain;
        }
      }
      return best;
    }

    case RuleKind::RandomIndex: {
      if (!rng) throw std::invalid_argument("random-index needs its stream");
      return j_set[rng->uniform_below(j_set.size())];
    }

    default:
      throw std::invalid_argument("not a primal entering rule");
  }
}

Basis next_basis(const LinearProgram& lp, const Basis& basis, RuleKind kind, RuleRng* rng) {
  BasisView view = make_view(lp, basis);
  Classification cls = classify_view(lp, view);
  if (cls.terminal()) throw std::invalid_argument("basis is terminal");
  const int enter = entering_column(lp, view, kind, rng);
  PivotResult res = pivot_view(lp, view, enter);
  // Potential must strictly increase; with a positive reduced cost and a
  // strictly positive step this holds, but it is re-checked, not trusted.
  BigMScalar before = view.objective(lp);
  BigMScalar after = make_view(lp, res.next).objective(lp);
  if (!(before < after))
    throw Error(ErrorCode::MonotonicityViolation,
                "objective did not increase from " + basis.to_string());
  return res.next;
}

void PathTrace::check_invariants() const {
  if (bases.size() != potentials.size())
    throw Error(ErrorCode::InvariantViolation, "trace arrays out of step");
  for (size_t i = 0; i + 1 < bases.size(); ++i) {
    if (!adjacent(bases[i], bases[i + 1]))
      throw Error(ErrorCode::InvariantViolation,
                  "consecutive bases not adjacent at step " + std::to_string(i));
    if (!(potentials[i] < potentials[i + 1]))
      throw Error(ErrorCode::InvariantViolation,
                  "potential not strictly increasing at step " + std::to_string(i));
  }
  if (verdict.kind == Verdict::Kind::Terminal && bases.empty())
    throw Error(ErrorCode::InvariantViolation, "terminal trace without bases");
}

Basis initial_basis(const Rule& rule, const BigMProgram& big) {
  if (!is_primal_rule(rule.kind))
    throw std::invalid_argument("initial_basis here covers the primal rules");
  return big.start;  // shared start policy: every primal rule begins there
}

PathTrace trace(const LinearProgram& lp, const Basis& start, const Rule& rule, uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  if (!is_primal_rule(rule.kind))
    throw std::invalid_argument("trace(lp, start, ...) runs primal rules only");

  PathTrace out;
  RuleRng rng(rule.seed);
  Basis current = start;
  {
    BasisView v0 = make_view(lp, current);
    if (!v0.feasible())
      throw Error(ErrorCode::NeedsBigM, "no feasible start known for a primal rule");
  }
  uint64_t pivots = 0;
  while (true) {
    BasisView view = make_view(lp, current);
    out.bases.push_back(current);
    out.potentials.push_back(view.objective(lp));
    const size_t k = out.potentials.size();
    if (k >= 2 && !(out.potentials[k - 2] < out.potentials[k - 1])) {
      out.verdict = Verdict::rule_error(ErrorCode::MonotonicityViolation);
      return out;
    }
    Classification cls = classify_view(lp, view);
    if (cls.terminal()) {
      out.verdict = Verdict::terminal(cls);
      return out;
    }
    if (pivots == cap) {
      out.verdict = Verdict::cap();
      return out;
    }
    try {
      const int enter = entering_column(lp, view, rule.kind, &rng);
      PivotResult res = pivot_view(lp, view, enter);
      out.entering.push_back(enter);
      out.leaving.push_back(res.leaving);
      current = res.next;
    } catch (const Error& e) {
      out.verdict = Verdict::rule_error(e.code());
      return out;
    }
    ++pivots;
  }
}

PathTrace trace(const BigMProgram& big, const Rule& rule, uint64_t cap) {
  return trace(big.lp, big.start, rule, cap);
}

const char* member_verdict_name(MemberVerdict v) {
  switch (v) {
    case MemberVerdict::Yes: return "Yes";
    case MemberVerdict::No: return "No";
    case MemberVerdict::Aborted: return "Aborted";
  }
  return "?";
}

MemberVerdict path_member(const LinearProgram& lp, const Basis& start, const Rule& rule,
                          const Basis& query, uint64_t cap) {
  PathTrace t = trace(lp, start, rule, cap);
  for (const Basis& b : t.bases)
    if (b == query) return MemberVerdict::Yes;
  // a rule error also leaves the tail of the walk unexplored
  return t.verdict.kind == Verdict::Kind::Terminal ? MemberVerdict::No : MemberVerdict::Aborted;
}

MemberVerdict path_member(const BigMProgram& big, const Rule& rule, const Basis& query,
                          uint64_t cap) {
  return path_member(big.lp, big.start, rule, query, cap);
}

}  // namespace pivotlab
