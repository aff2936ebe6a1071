#include "brieskorn/seifert.hpp"
#include "brieskorn/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brieskorn {

BrieskornParams canonicalize_params(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  const std::array<std::int64_t, 3> in{a1, a2, a3};
  for (auto v : in) {
    if (v < 2) throw Error(ErrorCode::ValueTooSmall, "multiplicity " + std::to_string(v) + " < 2");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(in[i], in[j]) != 1) {
        throw Error(ErrorCode::NotPairwiseCoprime,
                    "gcd(" + std::to_string(in[i]) + ", " + std::to_string(in[j]) + ") = " +
                        std::to_string(std::gcd(in[i], in[j])));
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  // ascending, with the (at most one) even multiplicity moved to the front
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    const bool le = in[l] % 2 == 0, re = in[r] % 2 == 0;
    if (le != re) return le;
    return in[l] < in[r];
  });

  BrieskornParams p;
  p.a1 = in[order[0]];
  p.a2 = in[order[1]];
  p.a3 = in[order[2]];
  p.permutation = order;
  return p;
}

SeifertInvariant solve_seifert(const BrieskornParams& params) {
  const Integer a1 = params.a1, a2 = params.a2, a3 = params.a3;

  Integer b1 = mod_inverse(a2 * a3, a1);
  if (b1 == 0) b1 = a1;  // only reachable for a1 = 1, excluded by canonical params

  // a1 divides 1 - a2 a3 b1; remaining equation a3 b2 + a2 b3 = rhs
  const Integer rhs = (1 - a2 * a3 * b1) / a1;
  Integer b2 = floor_mod(rhs * mod_inverse(a3, a2), a2);
  Integer b3 = (rhs - a3 * b2) / a2;

  if (!is_even(b2)) {
    b1 += a1;
    b2 -= a2;
  }
  if (!is_even(b3)) {
    b1 += a1;
    b3 -= a3;
  }

  SeifertInvariant s;
  s.b = 0;
  s.fibers = {SingularFiber{params.a1, b1}, SingularFiber{params.a2, b2},
              SingularFiber{params.a3, b3}};
  return s;
}

Rational euler_number(const SeifertInvariant& s) {
  Rational sum(s.b);
  for (const auto& f : s.fibers) sum += Rational(f.b, Integer(f.a));
  return -sum;
}

Integer h1_order(const SeifertInvariant& s) {
  const Rational order = abs(euler_number(s)) * Rational(s.product());
  if (denominator(order) != 1) {
    throw Error(ErrorCode::NonIntegerOrder, "a|e| = " + to_string(order) + " for " + to_string(s));
  }
  return numerator(order);
}

GroupPresentation presentation(const SeifertInvariant& s) {
  GroupPresentation g;
  const char names[3] = {'x', 'y', 'z'};
  for (int i = 0; i < 3; ++i) {
    g.fiber_relators[i] = FiberRelator{names[i], s.fibers[i].a, -s.fibers[i].b};
  }
  g.product_h_exponent = s.b;
  return g;
}

int unimodular_sign(const BrieskornParams& params, const SeifertInvariant& s) {
  const auto m = params.multiplicities();
  for (int i = 0; i < 3; ++i) {
    if (s.fibers[i].a != m[i]) {
      throw Error(ErrorCode::InvalidSeifert,
                  "fiber multiplicities of " + to_string(s) + " do not match canonical (" +
                      std::to_string(params.a1) + "," + std::to_string(params.a2) + "," +
                      std::to_string(params.a3) + ")");
    }
  }
  const Rational v = -euler_number(s) * Rational(s.product());
  if (v == 1) return 1;
  if (v == -1) return -1;
  throw Error(ErrorCode::InvalidSeifert,
              "a(b + sum b_i/a_i) = " + to_string(v) + ", expected +1 or -1");
}

SeifertInvariant fold_central_exponent(const SeifertInvariant& s) {
  SeifertInvariant r = s;
  r.fibers[0].b += Integer(s.fibers[0].a) * s.b;
  r.b = 0;
  return r;
}

std::string to_string(const SeifertInvariant& s) {
  std::ostringstream os;
  os << "{0;(1," << s.b << ")";
  for (const auto& f : s.fibers) os << ",(" << f.a << "," << f.b << ")";
  os << "}";
  return os.str();
}

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << "<x,y,z," << central_generator << " | " << central_generator << " central";
  for (const auto& r : fiber_relators) {
    os << ", " << r.generator << "^" << r.power << "=" << central_generator << "^" << r.h_exponent;
  }
  os << ", xyz=";
  if (product_h_exponent == 0)
    os << "1";
  else
    os << central_generator << "^" << product_h_exponent;
  os << ">";
  return os.str();
}

}  // namespace brieskorn
