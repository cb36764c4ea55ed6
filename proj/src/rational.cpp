#include "torus/rational.hpp"

#include "torus/error.hpp"

namespace torus {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SIsSquare: return "SIsSquare";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorKind::DeltaDivisible: return "DeltaDivisible";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::PatternInvalid: return "PatternInvalid";
    case ErrorKind::DeltaResidue: return "DeltaResidue";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ReflectionCheckFailed: return "ReflectionCheckFailed";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw Error(ErrorKind::BadParameters, "not a rational: '" + text + "'");
  if (v.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace torus
