#include "pivotlab/exact.hpp"

namespace pivotlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::SingularBasis: return "SINGULAR_BASIS";
    case ErrorCode::DivByZero: return "DIV_BY_ZERO";
    case ErrorCode::DegenerateTie: return "DEGENERATE_TIE";
    case ErrorCode::UnboundedDirection: return "UNBOUNDED_DIRECTION";
    case ErrorCode::NoStartBasis: return "NO_START_BASIS";
    case ErrorCode::NeedsBigM: return "NEEDS_BIGM";
    case ErrorCode::MonotonicityViolation: return "MONOTONICITY_VIOLATION";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::EndOfCode: return "END_OF_CODE";
    case ErrorCode::WidthMismatch: return "WIDTH_MISMATCH";
    case ErrorCode::PromiseViolation: return "PROMISE_VIOLATION";
    case ErrorCode::TrivialQuery: return "TRIVIAL_QUERY";
    case ErrorCode::ReductionEdge: return "REDUCTION_EDGE";
    case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
    case ErrorCode::StateExplosion: return "STATE_EXPLOSION";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::BigMProduct: return "BIGM_PRODUCT";
    case ErrorCode::NoExchange: return "NO_EXCHANGE";
    case ErrorCode::BadInput: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::BadInput, "not a rational: '" + text + "'"); };
  std::string s = text;
  // trim
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw bad();
  s = s.substr(first, last - first + 1);

  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::DivByZero, "zero denominator in '" + text + "'");
    return Rational(num, den);  // the (num, den) ctor canonicalizes
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string format_rational(const Rational& value) {
  return value.str();  // gmp prints "p" or "p/q" in canonical form
}

Ordering bigm_compare(const BigMScalar& x, const BigMScalar& y) {
  if (x < y) return Ordering::Less;
  if (y < x) return Ordering::Greater;
  return Ordering::Equal;
}

Ordering bigm_square_compare(const BigMScalar& x, const Rational& s,
                             const BigMScalar& y, const Rational& t) {
  // x^2 s = (x.m^2 s) M^2 + (2 x.m x.f s) M + (x.f^2 s)
  Rational lhs[3] = {x.m_coeff * x.m_coeff * s, 2 * x.m_coeff * x.finite * s,
                     x.finite * x.finite * s};
  Rational rhs[3] = {y.m_coeff * y.m_coeff * t, 2 * y.m_coeff * y.finite * t,
                     y.finite * y.finite * t};
  for (int i = 0; i < 3; ++i) {
    if (lhs[i] < rhs[i]) return Ordering::Less;
    if (lhs[i] > rhs[i]) return Ordering::Greater;
  }
  return Ordering::Equal;
}

std::string format_bigm(const BigMScalar& value) {
  if (value.m_coeff == 0) return format_rational(value.finite);
  std::string out = format_rational(value.finite);
  out += (value.m_coeff > 0) ? " + " : " - ";
  out += format_rational(abs(value.m_coeff));
  out += "*M";
  return out;
}

}  // namespace pivotlab
