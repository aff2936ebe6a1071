#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace brieskorn {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

/// Remainder in [0, m) for m > 0.
inline Integer floor_mod(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of x modulo m (m >= 1, gcd(x, m) = 1), returned in [0, m).
Integer mod_inverse(const Integer& x, const Integer& m);

inline bool is_even(const Integer& x) { return (x & 1) == 0; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q);

}  // namespace brieskorn
