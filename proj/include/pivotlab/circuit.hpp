#pragma once

#include <string>
#include <vector>

#include "pivotlab/gray.hpp"

namespace pivotlab {

/// Boolean-circuit DAG over gate kinds Input (in-degree 0), Not (1), And
/// and Or (2). Gates are stored in topological order; arguments refer to
/// earlier gates by index.
struct Gate {
  enum class Op { Input, Not, And, Or };
  Op op = Op::Input;
  int a = -1;
  int b = -1;
};

struct Circuit {
  int n = 0;                 // input width == output width
  std::vector<Gate> gates;   // the first n gates must be the inputs
  std::vector<int> outputs;  // n gate indices

  /// Checks arities, topological argument order, and widths.
  void validate() const;
};

const char* gate_op_name(Gate::Op op);
Gate::Op gate_op_from_name(const std::string& name);

/// Evaluates the circuit gate by gate. Throws WIDTH_MISMATCH when the
/// input width differs from n.
BitString eval_circuit(const Circuit& c, const BitString& x);

/// One step of the walk: y = C(x) plus the unique flipped index. The
/// distance-1 promise is checked, never assumed; PROMISE_VIOLATION
/// otherwise.
struct CircuitStep {
  BitString y;
  int flip_index = 0;  // 1-based
};
CircuitStep c_step(const Circuit& c, const BitString& x);

enum class PathVerdict { Yes, No };

/// Does iterating C from 0^n reach target? After 2^n steps the walk has
/// necessarily revisited a state, so the default cap decides exactly.
PathVerdict c_path_member(const Circuit& c, const BitString& target,
                          uint64_t cap = 0 /* 0 = 2^n */);

/// Bundled circuit families used by the tests and the CLI corpus. All
/// satisfy the distance-1 promise on every input.
///
/// gray_successor_circuit: steps through the reflected Gray order; at the
/// top word it steps back to the predecessor, so the walk visits every
/// string and then oscillates.
Circuit gray_successor_circuit(int n);
/// toggle_last_circuit: flips the last bit everywhere; the walk is the
/// 2-cycle 0^n <-> 0^{n-1}1.
Circuit toggle_last_circuit(int n);
/// lowest_zero_walker_circuit: sets the rightmost zero bit, falling back
/// to flipping the last bit from the all-ones word. The walk climbs
/// 0^n, 0^{n-1}1, ..., 1^n and then oscillates with 1^{n-1}0.
Circuit lowest_zero_walker_circuit(int n);

}  // namespace pivotlab
