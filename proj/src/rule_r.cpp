#include "pivotlab/rule_r.hpp"

namespace pivotlab {

namespace {

BitString first_half(const BitString& s, int n) {
  BitString out(n);
  for (int i = 0; i < n; ++i) out.bits[static_cast<size_t>(i)] = s.bits[static_cast<size_t>(i)];
  return out;
}

BitString second_half(const BitString& s, int n) {
  BitString out(n);
  for (int i = 0; i < n; ++i) out.bits[static_cast<size_t>(i)] = s.bits[static_cast<size_t>(n + i)];
  return out;
}

void log_diag(DiagnosticLog* log, RuleRDiagnostic kind, uint64_t step, const BitString& state) {
  if (log) log->push_back({kind, step, state});
}

}  // namespace

const char* rule_r_diagnostic_name(RuleRDiagnostic d) {
  switch (d) {
    case RuleRDiagnostic::EndOfCode: return "END_OF_CODE";
    case RuleRDiagnostic::MonotonicityViolation: return "MONOTONICITY_VIOLATION";
    case RuleRDiagnostic::ReductionEdge: return "REDUCTION_EDGE";
    case RuleRDiagnostic::InvariantViolation: return "INVARIANT_VIOLATION";
    case RuleRDiagnostic::PromiseViolation: return "PROMISE_VIOLATION";
  }
  return "?";
}

const char* r_verdict_name(RVerdict v) {
  switch (v) {
    case RVerdict::Yes: return "Yes";
    case RVerdict::No: return "No";
    case RVerdict::Aborted: return "Aborted";
    case RVerdict::Diagnostic: return "Diagnostic";
  }
  return "?";
}

BitString rule_r_next(RuleRVariant variant, const RuleRContext& ctx, const BitString& state,
                      DiagnosticLog* diagnostics, uint64_t step) {
  const int n = ctx.n();
  if (state.size() != 2 * n) throw Error(ErrorCode::WidthMismatch, "state width must be 2n");
  if (state == top_of_code(2 * n)) throw std::invalid_argument("state is terminal");

  const BitString b1 = first_half(state, n);
  const BitString b2 = second_half(state, n);
  const BitString top = top_of_code(n);

  auto simulate = [&]() -> BitString {
    CircuitStep cs = c_step(ctx.circuit, b2);
    // A flip of word coordinate i is cube coordinate n + i; it raises the
    // objective iff the prefix sum through that coordinate is even.
    if (increasing(state, n + cs.flip_index)) return concat(b1, cs.y);
    return concat(gray_succ(b1), b2);
  };

  if (variant == RuleRVariant::Paper) {
    if (b2 == ctx.x_c) return concat(gray_succ(b1), b2);  // throws at b1 = top
    if (b1 == top) return concat(b1, gray_succ(b2));      // reversed block: descends
    return simulate();
  }

  // Repaired dispatch.
  const uint64_t top_rank = (uint64_t{1} << n) - 1;
  const uint64_t g1 = gray_rank(b1);

  if (b1 == top) return concat(b1, gray_pred(b2));  // (i) sweep; b2 != 0^n here
  if (b2 == ctx.x_c) return concat(gray_succ(b1), b2);  // (ii) success count

  if (g1 == top_rank - 2) {  // (iii) drain
    if (b2.all_zero()) return concat(gray_succ(b1), b2);
    const uint64_t r = gray_rank(b2);
    const uint64_t target_rank = gray_rank(ctx.x_c);
    bool found = false, only_target = false;
    uint64_t best_rank = 0;
    BitString best;
    BitString forced;
    for (int i = 1; i <= n; ++i) {
      BitString cand = b2;
      cand.set_bit(i, static_cast<uint8_t>(1 - cand.bit(i)));
      const uint64_t cr = gray_rank(cand);
      if (cr >= r) continue;
      if (cr == target_rank) {
        forced = cand;
        only_target = true;  // provisional; cleared if a clean landing exists
        continue;
      }
      if (!found || cr < best_rank) {
        best_rank = cr;
        best = cand;
        found = true;
      }
    }
    if (found) return concat(b1, best);
    if (only_target) {
      log_diag(diagnostics, RuleRDiagnostic::ReductionEdge, step, state);
      return concat(b1, forced);
    }
    // rank(b2) > 0 always has a descending flip, so this is unreachable
    throw Error(ErrorCode::InvariantViolation, "drain found no descending flip");
  }

  if (g1 == top_rank - 1) {  // (iv)
    if (!b2.all_zero()) log_diag(diagnostics, RuleRDiagnostic::InvariantViolation, step, state);
    return concat(gray_succ(b1), b2);
  }

  return simulate();  // (v)
}

ReductionInstance build_reduction(const Circuit& circuit, const BitString& x_c) {
  circuit.validate();
  const int n = circuit.n;
  if (n < 3) throw std::invalid_argument("reduction requires width n >= 3");
  if (x_c.size() != n) throw Error(ErrorCode::WidthMismatch, "x_c width differs from n");
  if (x_c.all_zero())
    throw Error(ErrorCode::TrivialQuery, "x_c = 0^n starts the walk; the answer is Yes");

  // Spot-check the distance-1 promise before committing to the build; it
  // stays enforced at every simulated step regardless.
  c_step(circuit, all_zero_string(n));
  c_step(circuit, x_c);
  c_step(circuit, top_of_code(n));

  ReductionInstance inst;
  inst.ctx.circuit = circuit;
  inst.ctx.x_c = x_c;
  inst.km = km_instance(2 * n, Rational(1, 3));
  inst.b0_bits = all_zero_string(2 * n);
  inst.b_hat_bits = concat(top_of_code(n), x_c);
  inst.b0 = inst.km.vertex_basis(inst.b0_bits);
  inst.b_hat = inst.km.vertex_basis(inst.b_hat_bits);
  return inst;
}

RPathResult r_path_member(RuleRVariant variant, const ReductionInstance& inst, uint64_t cap,
                          bool keep_states) {
  const int n = inst.ctx.n();
  if (cap == 0) cap = uint64_t{1} << (2 * n + 2);
  const BitString terminal = top_of_code(2 * n);

  RPathResult out;
  BitString state = inst.b0_bits;
  Rational objective = inst.km.vertex_objective(state);
  if (keep_states) out.states.push_back(state);
  out.visited_target = (state == inst.b_hat_bits);

  bool crashed = false;
  while (state != terminal) {
    if (out.steps >= cap) {
      out.verdict = RVerdict::Aborted;
      return out;
    }
    BitString next;
    try {
      next = rule_r_next(variant, inst.ctx, state, &out.diagnostics, out.steps);
    } catch (const Error& e) {
      RuleRDiagnostic d = RuleRDiagnostic::InvariantViolation;
      if (e.code() == ErrorCode::EndOfCode) d = RuleRDiagnostic::EndOfCode;
      if (e.code() == ErrorCode::PromiseViolation) d = RuleRDiagnostic::PromiseViolation;
      out.diagnostics.push_back({d, out.steps, state});
      crashed = true;
      break;
    }
    ++out.steps;
    Rational next_objective = inst.km.vertex_objective(next);
    if (!(objective < next_objective))
      out.diagnostics.push_back({RuleRDiagnostic::MonotonicityViolation, out.steps, next});
    state = next;
    objective = next_objective;
    if (keep_states) out.states.push_back(state);
    if (state == inst.b_hat_bits) out.visited_target = true;
  }

  if (!out.diagnostics.empty())
    out.verdict = RVerdict::Diagnostic;  // answer reported but not certified
  else if (out.visited_target)
    out.verdict = RVerdict::Yes;
  else
    out.verdict = crashed ? RVerdict::Diagnostic : RVerdict::No;
  return out;
}

PathTrace trace_rule_r(RuleRVariant variant, const ReductionInstance& inst, uint64_t cap) {
  RPathResult run = r_path_member(variant, inst, cap, /*keep_states=*/true);
  PathTrace out;
  out.bases.reserve(run.states.size());
  out.potentials.reserve(run.states.size());
  for (size_t i = 0; i < run.states.size(); ++i) {
    const BitString& s = run.states[i];
    out.bases.push_back(inst.km.vertex_basis(s));
    out.potentials.push_back(BigMScalar(inst.km.vertex_objective(s)));
    if (i > 0) {
      out.entering.push_back(basis_difference(out.bases[i], out.bases[i - 1]));
      out.leaving.push_back(basis_difference(out.bases[i - 1], out.bases[i]));
    }
  }
  switch (run.verdict) {
    case RVerdict::Yes:
    case RVerdict::No:
      out.verdict = Verdict::terminal(classify_basis(inst.km.lp, out.bases.back()));
      break;
    case RVerdict::Aborted:
      out.verdict = Verdict::cap();
      break;
    case RVerdict::Diagnostic: {
      ErrorCode code = ErrorCode::InvariantViolation;
      switch (run.diagnostics.front().kind) {
        case RuleRDiagnostic::EndOfCode: code = ErrorCode::EndOfCode; break;
        case RuleRDiagnostic::MonotonicityViolation: code = ErrorCode::MonotonicityViolation; break;
        case RuleRDiagnostic::ReductionEdge: code = ErrorCode::ReductionEdge; break;
        case RuleRDiagnostic::InvariantViolation: code = ErrorCode::InvariantViolation; break;
        case RuleRDiagnostic::PromiseViolation: code = ErrorCode::PromiseViolation; break;
      }
      out.verdict = Verdict::rule_error(code);
      break;
    }
  }
  return out;
}

}  // namespace pivotlab
