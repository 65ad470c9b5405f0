#include "gauss_forge/rational.hpp"

#include <cctype>
#include <cmath>

#include "gauss_forge/error.hpp"

namespace gauss_forge {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateHeight: return "DegenerateHeight";
    case ErrorCode::NonTransverse: return "NonTransverse";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ParamCollision: return "ParamCollision";
    case ErrorCode::NonIntegerInvariant: return "NonIntegerInvariant";
    case ErrorCode::NotATriple: return "NotATriple";
    case ErrorCode::NonGenericOffsets: return "NonGenericOffsets";
    case ErrorCode::ScaleOverflow: return "ScaleOverflow";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::SnapAmbiguity: return "SnapAmbiguity";
    case ErrorCode::IsotopyViolation: return "IsotopyViolation";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NonzeroPairwiseLinking: return "NonzeroPairwiseLinking";
    case ErrorCode::IntersectingInputs: return "IntersectingInputs";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IOError";
  }
  return "Error";
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

Rational exact(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::Validation, "non-finite number");
  return Rational(value);
}

bool is_integer(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_den() == 1;
}

}  // namespace gauss_forge
