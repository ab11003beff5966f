#include "pivotlab/visit.hpp"

#include <cmath>
#include <set>

namespace pivotlab {

namespace {

std::vector<int> improving(const LinearProgram& lp, const BasisView& view) {
  const BigMScalar zero;
  std::vector<int> out;
  for (int j = 1; j <= lp.n; ++j)
    if (zero < view.reduced[static_cast<size_t>(j - 1)]) out.push_back(j);
  return out;
}

}  // namespace

VisitDag visit_probabilities(const LinearProgram& lp, const Basis& start, size_t state_cap) {
  VisitDag dag;
  // Process bases in increasing objective order: every predecessor of a
  // basis has strictly smaller objective, so its mass is complete when it
  // is popped.
  struct QueueKey {
    BigMScalar objective;
    std::vector<int> cols;
    bool operator<(const QueueKey& o) const {
      if (objective < o.objective) return true;
      if (o.objective < objective) return false;
      return cols < o.cols;
    }
  };
  std::set<QueueKey> queue;

  {
    BasisView v = make_view(lp, start);
    if (!v.feasible()) throw Error(ErrorCode::NeedsBigM, "start basis must be feasible");
    dag.probability[start.cols] = 1;
    queue.insert({v.objective(lp), start.cols});
  }

  while (!queue.empty()) {
    QueueKey key = *queue.begin();
    queue.erase(queue.begin());
    const Basis current{std::vector<int>(key.cols)};
    const Rational mass = dag.probability.at(key.cols);

    BasisView view = make_view(lp, current);
    Classification cls = classify_view(lp, view);
    if (cls.terminal()) {
      dag.terminals.push_back(current);
      continue;
    }
    std::vector<int> j_set = improving(lp, view);
    const Rational share = mass / Rational(static_cast<int>(j_set.size()));
    for (int j : j_set) {
      PivotResult res = pivot_view(lp, view, j);
      auto [it, fresh] = dag.probability.try_emplace(res.next.cols, Rational(0));
      if (fresh) {
        if (dag.probability.size() > state_cap)
          throw Error(ErrorCode::StateExplosion, "reachable basis count exceeded the cap");
        queue.insert({make_view(lp, res.next).objective(lp), res.next.cols});
      }
      it->second += share;
      dag.edges.push_back({current, res.next, share});
    }
  }
  return dag;
}

Rational exact_visit_probability(const LinearProgram& lp, const Basis& start, const Basis& query,
                                 size_t state_cap) {
  VisitDag dag = visit_probabilities(lp, start, state_cap);
  auto it = dag.probability.find(query.cols);
  return it == dag.probability.end() ? Rational(0) : it->second;
}

double VisitEstimate::hoeffding_radius(double delta) const {
  if (trials == 0) return 1.0;
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
}

namespace {

bool trial_visits(const LinearProgram& lp, const Basis& start, const Basis& query,
                  uint64_t stream_seed, uint64_t trace_cap) {
  Rule rule{RuleKind::RandomIndex, stream_seed};
  PathTrace t = trace(lp, start, rule, trace_cap);
  if (t.verdict.kind == Verdict::Kind::RuleError)
    throw Error(t.verdict.error, "random-index trial failed");
  for (const Basis& b : t.bases)
    if (b == query) return true;
  if (t.verdict.kind != Verdict::Kind::Terminal)
    throw Error(ErrorCode::TooLarge, "trial hit the trace cap");
  return false;
}

}  // namespace

VisitEstimate estimate_visit_serial(const LinearProgram& lp, const Basis& start,
                                    const Basis& query, uint64_t trials, uint64_t seed,
                                    uint64_t trace_cap) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  uint64_t visits = 0;
  for (uint64_t t = 0; t < trials; ++t)
    if (trial_visits(lp, start, query, mix_seed(seed, t), trace_cap)) ++visits;
  VisitEstimate est;
  est.trials = trials;
  est.visits = visits;
  est.p_hat = Rational(BigInt(visits), BigInt(trials));
  return est;
}

VisitEstimate estimate_visit(const LinearProgram& lp, const Basis& start, const Basis& query,
                             uint64_t trials, uint64_t seed, uint64_t trace_cap) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  uint64_t visits = 0;
  bool failed = false;
  ErrorCode fail_code = ErrorCode::BadInput;
#pragma omp parallel for schedule(static) reduction(+ : visits)
  for (long long t = 0; t < static_cast<long long>(trials); ++t) {
    bool hit = false;
    try {
      hit = trial_visits(lp, start, query, mix_seed(seed, static_cast<uint64_t>(t)), trace_cap);
    } catch (const Error& e) {
#pragma omp critical
      {
        failed = true;
        fail_code = e.code();
      }
    } catch (const std::exception&) {
#pragma omp critical
      {
        failed = true;
        fail_code = ErrorCode::BadInput;
      }
    }
    if (hit) ++visits;
  }
  if (failed) throw Error(fail_code, "a random-index trial failed");
  VisitEstimate est;
  est.trials = trials;
  est.visits = visits;
  est.p_hat = Rational(BigInt(visits), BigInt(trials));
  return est;
}

const char* fp_verdict_name(FpVerdict v) {
  switch (v) {
    case FpVerdict::Below: return "Below";
    case FpVerdict::Above: return "Above";
    case FpVerdict::Undecided: return "Undecided";
  }
  return "?";
}

FpVerdict decide_fp(const VisitEstimate& estimate, const Rational& f_value,
                    const Rational& p_value, double delta) {
  if (p_value <= 0) throw std::invalid_argument("p must be positive");
  const Rational gap = 1 / p_value;
  if (f_value < 0 || f_value > 1 - gap)
    throw std::invalid_argument("f must lie in [0, 1 - 1/p]");

  const Rational mid = f_value + gap / 2;
  Rational center = estimate.exact_p ? *estimate.exact_p : estimate.p_hat;
  // The double radius converts exactly (IEEE values are dyadic), keeping
  // the comparison itself exact.
  Rational radius = estimate.exact_p ? Rational(0) : Rational(estimate.hoeffding_radius(delta));
  if (center + radius <= mid) return FpVerdict::Below;
  if (center - radius >= mid) return FpVerdict::Above;
  return FpVerdict::Undecided;
}

}  // namespace pivotlab
