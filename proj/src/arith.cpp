#include "brieskorn/arith.hpp"
#include "brieskorn/error.hpp"

#include <sstream>

namespace brieskorn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::ValueTooSmall: return "ValueTooSmall";
    case ErrorCode::InvalidSeifert: return "InvalidSeifert";
    case ErrorCode::NonIntegerOrder: return "NonIntegerOrder";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::InconsistentClassification: return "InconsistentClassification";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InjectivityViolation: return "InjectivityViolation";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "UnknownError";
}

Integer mod_inverse(const Integer& x, const Integer& m) {
  if (m == 1) return 0;
  // extended Euclid on (x mod m, m)
  Integer old_r = floor_mod(x, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
  return floor_mod(old_s, m);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

}  // namespace brieskorn
