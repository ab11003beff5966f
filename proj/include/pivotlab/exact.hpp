#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace pivotlab {

/// Exact rational scalar. All arithmetic in the library is exact; no
/// floating point enters any solve, pivot, or comparison.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class ErrorCode {
  Singular,
  SingularBasis,
  DivByZero,
  DegenerateTie,
  UnboundedDirection,
  NoStartBasis,
  NeedsBigM,
  MonotonicityViolation,
  Range,
  EndOfCode,
  WidthMismatch,
  PromiseViolation,
  TrivialQuery,
  ReductionEdge,
  InvariantViolation,
  StateExplosion,
  TooLarge,
  BigMProduct,
  NoExchange,
  BadInput,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a machine-readable code. Precondition violations
/// (caller bugs) use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parses "p/q" or "p" (q = 1). The result is canonical: positive
/// denominator, gcd(|p|, q) = 1, zero is 0/1.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Scalar of the form finite + m_coeff * M for a symbolically large M.
/// The order is lexicographic on (m_coeff, finite), which agrees with
/// evaluation at any sufficiently large numeric M.
struct BigMScalar {
  Rational finite{0};
  Rational m_coeff{0};

  BigMScalar() = default;
  explicit BigMScalar(Rational fin) : finite(std::move(fin)) {}
  BigMScalar(Rational fin, Rational m) : finite(std::move(fin)), m_coeff(std::move(m)) {}

  bool is_zero() const { return finite == 0 && m_coeff == 0; }

  BigMScalar operator-() const { return {-finite, -m_coeff}; }
  BigMScalar& operator+=(const BigMScalar& o) {
    finite += o.finite;
    m_coeff += o.m_coeff;
    return *this;
  }
  BigMScalar& operator-=(const BigMScalar& o) {
    finite -= o.finite;
    m_coeff -= o.m_coeff;
    return *this;
  }

  friend BigMScalar operator+(BigMScalar a, const BigMScalar& b) { return a += b; }
  friend BigMScalar operator-(BigMScalar a, const BigMScalar& b) { return a -= b; }

  friend BigMScalar operator*(const BigMScalar& a, const Rational& s) {
    return {a.finite * s, a.m_coeff * s};
  }
  friend BigMScalar operator*(const Rational& s, const BigMScalar& a) { return a * s; }

  /// Product of two big-M scalars is defined only when at least one has a
  /// zero M part; an M^2 term has no representation here.
  friend BigMScalar operator*(const BigMScalar& a, const BigMScalar& b) {
    if (a.m_coeff != 0 && b.m_coeff != 0)
      throw Error(ErrorCode::BigMProduct, "product would carry an M^2 term");
    if (b.m_coeff == 0) return a * b.finite;
    return b * a.finite;
  }

  friend bool operator==(const BigMScalar& a, const BigMScalar& b) {
    return a.m_coeff == b.m_coeff && a.finite == b.finite;
  }
  friend bool operator!=(const BigMScalar& a, const BigMScalar& b) { return !(a == b); }
  friend bool operator<(const BigMScalar& a, const BigMScalar& b) {
    if (a.m_coeff != b.m_coeff) return a.m_coeff < b.m_coeff;
    return a.finite < b.finite;
  }
  friend bool operator>(const BigMScalar& a, const BigMScalar& b) { return b < a; }
  friend bool operator<=(const BigMScalar& a, const BigMScalar& b) { return !(b < a); }
  friend bool operator>=(const BigMScalar& a, const BigMScalar& b) { return !(a < b); }
};

enum class Ordering { Less, Equal, Greater };

/// Three-way comparison, lexicographic on (m_coeff, finite).
Ordering bigm_compare(const BigMScalar& x, const BigMScalar& y);

/// Compares x^2 * s against y^2 * t exactly, where s, t >= 0 are plain
/// rationals. The squares are expanded into degree-2 coefficient vectors in
/// M and compared lexicographically from the M^2 term down, which matches
/// numeric evaluation at large M. Used by the steepest-edge rule, whose
/// ratio comparison cross-multiplies squared norms.
Ordering bigm_square_compare(const BigMScalar& x, const Rational& s,
                             const BigMScalar& y, const Rational& t);

std::string format_bigm(const BigMScalar& value);

}  // namespace pivotlab
