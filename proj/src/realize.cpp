#include "brieskorn/realize.hpp"
#include "brieskorn/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace brieskorn {

Mat2 operator*(const Mat2& l, const Mat2& r) {
  Mat2 p;
  p.real_form = l.real_form;
  p(0, 0) = l(0, 0) * r(0, 0) + l(0, 1) * r(1, 0);
  p(0, 1) = l(0, 0) * r(0, 1) + l(0, 1) * r(1, 1);
  p(1, 0) = l(1, 0) * r(0, 0) + l(1, 1) * r(1, 0);
  p(1, 1) = l(1, 0) * r(0, 1) + l(1, 1) * r(1, 1);
  return p;
}

Mat2 Mat2::inverse() const {
  const Complex d = det();
  Mat2 inv;
  inv.real_form = real_form;
  inv(0, 0) = m[3] / d;
  inv(0, 1) = -m[1] / d;
  inv(1, 0) = -m[2] / d;
  inv(1, 1) = m[0] / d;
  return inv;
}

Mat2 Mat2::scaled(Complex s) const {
  Mat2 r = *this;
  for (auto& e : r.m) e *= s;
  return r;
}

double frobenius_distance(const Mat2& l, const Mat2& r) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += std::norm(l.m[i] - r.m[i]);
  return std::sqrt(sum);
}

double form_residual(const Mat2& m) {
  double res = std::abs(m.det() - Complex(1.0));
  if (m.real_form == RealForm::SL2R) {
    for (const auto& e : m.m) res = std::max(res, std::abs(e.imag()));
  } else {
    Mat2 adj;
    adj(0, 0) = std::conj(m(0, 0));
    adj(0, 1) = std::conj(m(1, 0));
    adj(1, 0) = std::conj(m(0, 1));
    adj(1, 1) = std::conj(m(1, 1));
    res = std::max(res, frobenius_distance(m * adj, Mat2::identity()));
  }
  return res;
}

Mat2 power(const Mat2& m, std::int64_t n) {
  if (n < 0) return power(m.inverse(), -n);
  Mat2 result = Mat2::identity(m.real_form);
  Mat2 base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Mat2 power_closed_form(const Mat2& m, std::int64_t n) {
  const double c = std::clamp(m.trace().real() / 2.0, -1.0, 1.0);
  const double theta = std::acos(c);
  const double s = std::sin(theta);
  // U_{k-1}(cos theta) = sin(k theta) / sin theta
  const double un1 = std::sin(double(n) * theta) / s;
  const double un2 = std::sin(double(n - 1) * theta) / s;
  Mat2 r = m.scaled(un1);
  r(0, 0) -= un2;
  r(1, 1) -= un2;
  return r;
}

std::pair<Mat2, Mat2> realize_su2_angles(double theta1, double theta2, double target) {
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  if (std::abs(s1 * s2) < kFormTolerance) {
    throw Error(ErrorCode::NotRealizable, "central generator has no irreducible SU(2) realization");
  }
  // tr(XY) = 2(c1 c2 - s1 s2 cos phi), phi the angle between rotation axes
  const double cos_phi = (2.0 * c1 * c2 - target) / (2.0 * s1 * s2);
  if (!(std::abs(cos_phi) < 1.0 - kFormTolerance)) {
    throw Error(ErrorCode::NotRealizable, "target trace " + std::to_string(target) +
                                              " is outside the open SU(2) interval (cos phi = " +
                                              std::to_string(cos_phi) + ")");
  }
  const double sin_phi = std::sqrt(1.0 - cos_phi * cos_phi);
  const Complex i(0.0, 1.0);

  Mat2 X;
  X.real_form = RealForm::SU2;
  X(0, 0) = std::exp(i * theta1);
  X(0, 1) = 0.0;
  X(1, 0) = 0.0;
  X(1, 1) = std::exp(-i * theta1);

  // Y = cos(theta2) I + sin(theta2) (sin phi i sigma_x + cos phi i sigma_z)
  Mat2 Y;
  Y.real_form = RealForm::SU2;
  Y(0, 0) = Complex(c2, s2 * cos_phi);
  Y(0, 1) = Complex(0.0, s2 * sin_phi);
  Y(1, 0) = Complex(0.0, s2 * sin_phi);
  Y(1, 1) = Complex(c2, -s2 * cos_phi);
  return {X, Y};
}

namespace {

Mat2 rotation(double theta) {
  Mat2 r;
  r.real_form = RealForm::SL2R;
  r(0, 0) = std::cos(theta);
  r(0, 1) = -std::sin(theta);
  r(1, 0) = std::sin(theta);
  r(1, 1) = std::cos(theta);
  return r;
}

}  // namespace

std::pair<Mat2, Mat2> realize_sl2r_angles(double theta1, double theta2, double target) {
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  if (std::abs(s1 * s2) < kFormTolerance) {
    throw Error(ErrorCode::NotRealizable, "central generator has no irreducible SL(2;R) realization");
  }
  // tr(XY) = 2 c1 c2 - sign * (d^2 + d^-2) s1 s2; sign flips with theta2 -> -theta2
  const double excess = 2.0 * c1 * c2 - target;
  const double u = std::abs(excess) / std::abs(s1 * s2);
  if (!(u > 2.0 + kFormTolerance)) {
    throw Error(ErrorCode::NotRealizable, "target trace " + std::to_string(target) +
                                              " requires d^2 + d^-2 = " + std::to_string(u) + " <= 2");
  }
  const double second = (excess * s1 * s2 > 0.0) ? theta2 : -theta2;
  const double d2 = (u + std::sqrt(u * u - 4.0)) / 2.0;
  const double d = std::sqrt(d2);

  Mat2 stretch;
  stretch.real_form = RealForm::SL2R;
  stretch(0, 0) = d;
  stretch(0, 1) = 0.0;
  stretch(1, 0) = 0.0;
  stretch(1, 1) = 1.0 / d;

  const Mat2 X = rotation(theta1);
  const Mat2 Y = stretch * rotation(second) * stretch.inverse();
  return {X, Y};
}

std::pair<Mat2, Mat2> realize_su2(const CharacterTriple& c) {
  const double pi = std::numbers::pi;
  return realize_su2_angles(pi * to_double(c.tX().angle()), pi * to_double(c.tY().angle()), c.tZ().value());
}

std::pair<Mat2, Mat2> realize_sl2r(const CharacterTriple& c) {
  const double pi = std::numbers::pi;
  return realize_sl2r_angles(pi * to_double(c.tX().angle()), pi * to_double(c.tY().angle()), c.tZ().value());
}

double RealizationReport::max_residual() const {
  double r = 0.0;
  for (const auto& [name, v] : residuals) r = std::max(r, v);
  return r;
}

RealizationReport verify_relations(const Mat2& X, const Mat2& Y, const SeifertInvariant& sigma, int epsilon,
                                   double tol) {
  if (sigma.b != 0) throw Error(ErrorCode::InvalidSeifert, "verify_relations expects b = 0");
  if (!(tol > 0.0)) throw std::invalid_argument("verify_relations: tolerance must be positive");

  RealizationReport rep;
  rep.X = X;
  rep.Y = Y;
  rep.Z = (X * Y).inverse();
  rep.epsilon = epsilon;
  rep.tolerance = tol;

  const std::array<const Mat2*, 3> gens{&rep.X, &rep.Y, &rep.Z};
  const char* names[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    const Integer& b = sigma.fibers[i].b;
    // epsilon^{-b} is epsilon for odd b, 1 for even b
    const double central = (epsilon == -1 && !is_even(b)) ? -1.0 : 1.0;
    const Mat2 target = Mat2::identity().scaled(central);
    rep.residuals[names[i]] = frobenius_distance(power(*gens[i], sigma.fibers[i].a), target);
  }
  rep.residuals["xyz"] = frobenius_distance(rep.X * rep.Y * rep.Z, Mat2::identity());
  rep.residuals["form"] = std::max({form_residual(rep.X), form_residual(rep.Y), form_residual(rep.Z)});

  const Mat2 commutator = rep.X * rep.Y * rep.X.inverse() * rep.Y.inverse();
  rep.irreducibility_gap = std::abs(commutator.trace() - Complex(2.0));

  rep.passed = rep.max_residual() < tol && rep.irreducibility_gap > tol;
  return rep;
}

RealizationReport certify(const CharacterTriple& c, ClassLabel label, const SeifertInvariant& sigma, double tol) {
  std::pair<Mat2, Mat2> pair;
  switch (label) {
    case ClassLabel::SU2: pair = realize_su2(c); break;
    case ClassLabel::SL2R: pair = realize_sl2r(c); break;
    case ClassLabel::Reducible:
      throw Error(ErrorCode::NotRealizable, "reducible triple " + to_string(c) + " is not certified");
  }
  return verify_relations(pair.first, pair.second, sigma, c.epsilon, tol);
}

}  // namespace brieskorn
