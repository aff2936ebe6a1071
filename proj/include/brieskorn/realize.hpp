#pragma once

#include "brieskorn/character.hpp"
#include "brieskorn/seifert.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>
#include <utility>

namespace brieskorn {

enum class RealForm { SU2, SL2R };

using Complex = std::complex<double>;

/// 2x2 complex matrix tagged with the real form it is supposed to lie in.
struct Mat2 {
  std::array<Complex, 4> m{Complex(1), Complex(0), Complex(0), Complex(1)};  // row-major
  RealForm real_form = RealForm::SU2;

  static Mat2 identity(RealForm form = RealForm::SU2) { return Mat2{{1.0, 0.0, 0.0, 1.0}, form}; }

  const Complex& operator()(int r, int c) const { return m[2 * r + c]; }
  Complex& operator()(int r, int c) { return m[2 * r + c]; }

  Complex trace() const { return m[0] + m[3]; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
  Mat2 inverse() const;
  Mat2 scaled(Complex s) const;

  friend Mat2 operator*(const Mat2& l, const Mat2& r);
};

inline constexpr double kFormTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kRelationTolerance = 1e-9;

double frobenius_distance(const Mat2& l, const Mat2& r);

/// |det - 1| plus, for SL2R, the largest imaginary part or, for SU2, ||M M* - I||.
double form_residual(const Mat2& m);

/// M^n by repeated squaring (n >= 0).
Mat2 power(const Mat2& m, std::int64_t n);

/// M^n from the Chebyshev recursion M^n = U_{n-1}(c) M - U_{n-2}(c) I,
/// c = tr(M)/2 = cos(theta); valid for elliptic M.
Mat2 power_closed_form(const Mat2& m, std::int64_t n);

/// Unitary pair with traces 2cos(theta1), 2cos(theta2) and tr(XY) = target.
std::pair<Mat2, Mat2> realize_su2_angles(double theta1, double theta2, double target);
/// Real pair X = R(theta1), Y = A R(±theta2) A^-1, tr(XY) = target.
std::pair<Mat2, Mat2> realize_sl2r_angles(double theta1, double theta2, double target);

/// Throws NotRealizable if tr Z lies outside the open SU(2) interval.
std::pair<Mat2, Mat2> realize_su2(const CharacterTriple& c);
/// Throws NotRealizable if tr Z is not beyond the SU(2) interval.
std::pair<Mat2, Mat2> realize_sl2r(const CharacterTriple& c);

struct RealizationReport {
  Mat2 X, Y, Z;
  int epsilon = 1;
  std::map<std::string, double> residuals;
  double irreducibility_gap = 0.0;  // |tr(X Y X^-1 Y^-1) - 2|
  double tolerance = kRelationTolerance;
  bool passed = false;

  double max_residual() const;
};

/// Checks x^{a_i} = h^{-b_i} with h -> epsilon I and xyz = 1 for Z = (XY)^-1.
RealizationReport verify_relations(const Mat2& X, const Mat2& Y, const SeifertInvariant& sigma, int epsilon,
                                   double tol = kRelationTolerance);

/// Picks the realizer matching the classification and verifies.
RealizationReport certify(const CharacterTriple& c, ClassLabel label, const SeifertInvariant& sigma,
                          double tol = kRelationTolerance);

}  // namespace brieskorn
