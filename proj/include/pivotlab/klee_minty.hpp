#pragma once

#include "pivotlab/gray.hpp"
#include "pivotlab/lp.hpp"

namespace pivotlab {

/// The d-dimensional Klee-Minty cube in equality form:
///
///   maximize x_1
///   eps * x_{i+1} <= x_i <= 1 - eps * x_{i+1}   (i < d)
///   0 <= x_d <= 1
///
/// Every inequality is materialized as a row with its own slack, so the
/// program has m = 2d rows and n = 3d columns: structural x_1..x_d, then
/// per level i the lower slack (column d + 2i - 1) and the upper slack
/// (column d + 2i). Vertices are bit strings: bit i = 1 means the upper
/// constraint of level i is tight.
struct KleeMintyInstance {
  int d = 0;
  Rational eps;
  LinearProgram lp;

  /// Coordinates of the vertex for bits b: x_d = b_d, then going up
  /// x_i = b_i + (1 - 2 b_i) * eps * x_{i+1}.
  RatVector vertex_coords(const BitString& v) const;

  /// Objective x_1 at the vertex.
  Rational vertex_objective(const BitString& v) const;

  /// Canonical basis of a vertex: all structural columns plus, per level,
  /// the slack of the constraint that is not tight there.
  Basis vertex_basis(const BitString& v) const;

  /// Bits of a canonical vertex basis (inverse of vertex_basis); throws
  /// BAD_INPUT if the basis is not of the canonical vertex shape.
  BitString basis_vertex(const Basis& basis) const;
};

/// Flipping bit i of v raises the objective exactly when the prefix sum
/// b_1 + ... + b_i is even.
bool increasing(const BitString& v, int i);

/// Builds the instance; requires d >= 1 and 0 < eps < 1/2.
KleeMintyInstance km_instance(int d, const Rational& eps);

}  // namespace pivotlab
