#include "pivotlab/circuit.hpp"

#include <map>

namespace pivotlab {

void Circuit::validate() const {
  if (n < 1) throw Error(ErrorCode::BadInput, "circuit width must be positive");
  if (static_cast<int>(gates.size()) < n)
    throw Error(ErrorCode::BadInput, "fewer gates than inputs");
  for (int g = 0; g < static_cast<int>(gates.size()); ++g) {
    const Gate& gate = gates[static_cast<size_t>(g)];
    const bool is_input = gate.op == Gate::Op::Input;
    if ((g < n) != is_input)
      throw Error(ErrorCode::BadInput, "gates must start with exactly the n inputs");
    if (is_input) continue;
    const int arity = gate.op == Gate::Op::Not ? 1 : 2;
    if (gate.a < 0 || gate.a >= g)
      throw Error(ErrorCode::BadInput, "gate argument must point backwards");
    if (arity == 2 && (gate.b < 0 || gate.b >= g))
      throw Error(ErrorCode::BadInput, "gate argument must point backwards");
  }
  if (static_cast<int>(outputs.size()) != n)
    throw Error(ErrorCode::BadInput, "output width differs from input width");
  for (int o : outputs)
    if (o < 0 || o >= static_cast<int>(gates.size()))
      throw Error(ErrorCode::BadInput, "output refers to a missing gate");
}

const char* gate_op_name(Gate::Op op) {
  switch (op) {
    case Gate::Op::Input: return "input";
    case Gate::Op::Not: return "not";
    case Gate::Op::And: return "and";
    case Gate::Op::Or: return "or";
  }
  return "?";
}

Gate::Op gate_op_from_name(const std::string& name) {
  if (name == "input") return Gate::Op::Input;
  if (name == "not") return Gate::Op::Not;
  if (name == "and") return Gate::Op::And;
  if (name == "or") return Gate::Op::Or;
  throw Error(ErrorCode::BadInput, "unknown gate op '" + name + "'");
}

BitString eval_circuit(const Circuit& c, const BitString& x) {
  if (x.size() != c.n) throw Error(ErrorCode::WidthMismatch, "input width differs from n");
  std::vector<uint8_t> val(c.gates.size(), 0);
  for (size_t g = 0; g < c.gates.size(); ++g) {
    const Gate& gate = c.gates[g];
    switch (gate.op) {
      case Gate::Op::Input:
        val[g] = x.bits[g];
        break;
      case Gate::Op::Not:
        val[g] = static_cast<uint8_t>(1 - val[static_cast<size_t>(gate.a)]);
        break;
      case Gate::Op::And:
        val[g] = static_cast<uint8_t>(val[static_cast<size_t>(gate.a)] & val[static_cast<size_t>(gate.b)]);
        break;
      case Gate::Op::Or:
        val[g] = static_cast<uint8_t>(val[static_cast<size_t>(gate.a)] | val[static_cast<size_t>(gate.b)]);
        break;
    }
  }
  BitString y(c.n);
  for (int i = 0; i < c.n; ++i) y.bits[static_cast<size_t>(i)] = val[static_cast<size_t>(c.outputs[static_cast<size_t>(i)])];
  return y;
}

CircuitStep c_step(const Circuit& c, const BitString& x) {
  CircuitStep step;
  step.y = eval_circuit(c, x);
  int flips = 0;
  for (int i = 1; i <= c.n; ++i)
    if (step.y.bit(i) != x.bit(i)) {
      step.flip_index = i;
      ++flips;
    }
  if (flips != 1)
    throw Error(ErrorCode::PromiseViolation,
                "C(" + x.to_string() + ") = " + step.y.to_string() + " is at Hamming distance " +
                    std::to_string(flips));
  return step;
}

PathVerdict c_path_member(const Circuit& c, const BitString& target, uint64_t cap) {
  if (target.size() != c.n) throw Error(ErrorCode::WidthMismatch, "target width differs from n");
  if (c.n > 20) throw Error(ErrorCode::TooLarge, "walk simulation is limited to n <= 20");
  if (cap == 0) cap = uint64_t{1} << c.n;
  BitString x = all_zero_string(c.n);
  if (x == target) return PathVerdict::Yes;
  for (uint64_t step = 0; step < cap; ++step) {
    x = c_step(c, x).y;
    if (x == target) return PathVerdict::Yes;
  }
  // 2^n steps exhaust the state space, so the walk is looping
  return PathVerdict::No;
}

namespace {

/// Incremental circuit builder; indices are gate ids.
struct Builder {
  Circuit c;

  explicit Builder(int n) {
    c.n = n;
    for (int i = 0; i < n; ++i) c.gates.push_back({Gate::Op::Input, -1, -1});
  }
  int input(int i) const { return i; }  // 0-based
  int mk(Gate::Op op, int a, int b = -1) {
    c.gates.push_back({op, a, b});
    return static_cast<int>(c.gates.size()) - 1;
  }
  int not_(int a) { return mk(Gate::Op::Not, a); }
  int and_(int a, int b) { return mk(Gate::Op::And, a, b); }
  int or_(int a, int b) { return mk(Gate::Op::Or, a, b); }
  int xor_(int a, int b) { return and_(or_(a, b), not_(and_(a, b))); }
};

}  // namespace

Circuit gray_successor_circuit(int n) {
  if (n < 2) throw Error(ErrorCode::Range, "gray successor circuit needs n >= 2");
  Builder b(n);
  // parity of the whole word
  int parity = b.input(0);
  for (int i = 1; i < n; ++i) parity = b.xor_(parity, b.input(i));
  // suffix-or: s[i] = x_{i+1} | ... | x_n  (s[n-1] = false is handled below)
  std::vector<int> suffix_or(static_cast<size_t>(n), -1);
  for (int i = n - 2; i >= 0; --i) {
    const int right = b.input(i + 1);
    suffix_or[static_cast<size_t>(i)] =
        (i == n - 2) ? right : b.or_(right, suffix_or[static_cast<size_t>(i + 1)]);
  }
  // rightmost-one flags
  std::vector<int> rightmost(static_cast<size_t>(n), -1);
  rightmost[static_cast<size_t>(n - 1)] = b.input(n - 1);
  for (int i = 0; i < n - 1; ++i)
    rightmost[static_cast<size_t>(i)] = b.and_(b.input(i), b.not_(suffix_or[static_cast<size_t>(i)]));
  const int odd = parity;
  const int even = b.not_(parity);
  // flip signals: even parity flips the last bit; odd parity flips left of
  // the rightmost one; the top word 1 0^{n-1} (rightmost one in front)
  // falls back to flipping the last bit, stepping to its predecessor.
  std::vector<int> flip(static_cast<size_t>(n), -1);
  for (int i = 0; i < n - 1; ++i)
    flip[static_cast<size_t>(i)] = b.and_(odd, rightmost[static_cast<size_t>(i + 1)]);
  flip[static_cast<size_t>(n - 1)] = b.or_(even, b.and_(odd, rightmost[0]));
  for (int i = 0; i < n; ++i) b.c.outputs.push_back(b.xor_(b.input(i), flip[static_cast<size_t>(i)]));
  b.c.validate();
  return b.c;
}

Circuit toggle_last_circuit(int n) {
  if (n < 1) throw Error(ErrorCode::Range, "width must be positive");
  Builder b(n);
  for (int i = 0; i < n - 1; ++i) b.c.outputs.push_back(b.input(i));
  b.c.outputs.push_back(b.not_(b.input(n - 1)));
  b.c.validate();
  return b.c;
}

Circuit lowest_zero_walker_circuit(int n) {
  if (n < 2) throw Error(ErrorCode::Range, "walker circuit needs n >= 2");
  Builder b(n);
  // suffix-and: t[i] = x_{i+1} & ... & x_n; t[n-1] plays "true"
  std::vector<int> suffix_and(static_cast<size_t>(n), -1);
  for (int i = n - 2; i >= 0; --i) {
    const int right = b.input(i + 1);
    suffix_and[static_cast<size_t>(i)] =
        (i == n - 2) ? right : b.and_(right, suffix_and[static_cast<size_t>(i + 1)]);
  }
  const int all_ones = b.and_(b.input(0), suffix_and[0]);
  // z[i]: bit i is the rightmost zero
  std::vector<int> flip(static_cast<size_t>(n), -1);
  for (int i = 0; i < n - 1; ++i)
    flip[static_cast<size_t>(i)] = b.and_(b.not_(b.input(i)), suffix_and[static_cast<size_t>(i)]);
  // rightmost zero at the last position, or the all-ones fallback
  flip[static_cast<size_t>(n - 1)] = b.or_(b.not_(b.input(n - 1)), all_ones);
  for (int i = 0; i < n; ++i) b.c.outputs.push_back(b.xor_(b.input(i), flip[static_cast<size_t>(i)]));
  b.c.validate();
  return b.c;
}

}  // namespace pivotlab
