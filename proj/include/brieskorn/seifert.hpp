#pragma once

#include "brieskorn/arith.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace brieskorn {

/// Multiplicities of the three singular fibers of a Brieskorn homology sphere,
/// in canonical order: pairwise coprime, each >= 2, any even value first and
/// the odd values ascending.
struct BrieskornParams {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t a3 = 0;
  /// permutation[i] is the position in the caller's input of canonical entry i.
  std::array<int, 3> permutation{0, 1, 2};

  std::array<std::int64_t, 3> multiplicities() const { return {a1, a2, a3}; }
  Integer product() const { return Integer(a1) * a2 * a3; }
  bool identity_permutation() const { return permutation == std::array<int, 3>{0, 1, 2}; }

  friend bool operator==(const BrieskornParams& l, const BrieskornParams& r) {
    return l.a1 == r.a1 && l.a2 == r.a2 && l.a3 == r.a3;
  }
};

struct SingularFiber {
  std::int64_t a = 1;
  Integer b;

  friend bool operator==(const SingularFiber&, const SingularFiber&) = default;
};

/// {0; (1,b), (a1,b1), (a2,b2), (a3,b3)} over the 2-sphere.
struct SeifertInvariant {
  Integer b;
  std::array<SingularFiber, 3> fibers;

  Integer product() const { return Integer(fibers[0].a) * fibers[1].a * fibers[2].a; }
  const Integer& b_i(int i) const { return fibers[i].b; }

  friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;
};

std::string to_string(const SeifertInvariant& s);

struct FiberRelator {
  char generator;        // x, y or z
  std::int64_t power;    // generator^power
  Integer h_exponent;    // = h^h_exponent, i.e. -b_i
};

/// <x,y,z,h | h central, x^a1 = h^-b1, y^a2 = h^-b2, z^a3 = h^-b3, xyz = h^b>
struct GroupPresentation {
  std::array<FiberRelator, 3> fiber_relators;
  Integer product_h_exponent;
  char central_generator = 'h';

  std::string to_string() const;
};

/// Throws NotPairwiseCoprime / ValueTooSmall.
BrieskornParams canonicalize_params(std::int64_t a1, std::int64_t a2, std::int64_t a3);

/// Seifert data of the homology sphere with b = 0, b2 and b3 even and
/// a(b1/a1 + b2/a2 + b3/a3) = +1.
SeifertInvariant solve_seifert(const BrieskornParams& params);

Rational euler_number(const SeifertInvariant& s);

/// a|e(M)|, the order of H1(M; Z). Throws NonIntegerOrder if it is not an integer.
Integer h1_order(const SeifertInvariant& s);

GroupPresentation presentation(const SeifertInvariant& s);

/// Returns +1 or -1 according to a(b + sum b_i/a_i) = ±1, throwing
/// InvalidSeifert if the data does not describe the homology sphere of params.
int unimodular_sign(const BrieskornParams& params, const SeifertInvariant& s);

/// Same manifold with b folded into b1 (generator x replaced by x h^-b).
SeifertInvariant fold_central_exponent(const SeifertInvariant& s);

}  // namespace brieskorn
