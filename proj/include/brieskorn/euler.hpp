#pragma once

#include "brieskorn/seifert.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace brieskorn {

/// beta x0 + beta1 x1 + beta2 x2 + beta3 x3 in H^2(Gamma(a1,a2,a3); Z),
/// normalized so that 0 < beta_i < a_i.
struct EulerClass {
  std::int64_t beta = 0;
  std::array<std::int64_t, 3> betas{};

  friend auto operator<=>(const EulerClass&, const EulerClass&) = default;
};

std::string to_string(const EulerClass& eu);

/// (k, l, m) with 0 < k < a1, 0 < l < a2, 0 < m < a3 and k/a1 + l/a2 + m/a3 < 1.
struct X0Triple {
  std::int64_t k = 0, l = 0, m = 0;

  friend auto operator<=>(const X0Triple&, const X0Triple&) = default;
};

/// sum beta_i / a_i, exactly.
Rational fiber_fraction_sum(const std::array<std::int64_t, 3>& betas, const BrieskornParams& params);

bool satisfies_condition_a(const EulerClass& eu, const BrieskornParams& params);
bool satisfies_condition_b(const EulerClass& eu, const BrieskornParams& params);

/// Lexicographic order.
std::vector<X0Triple> enumerate_X0(const BrieskornParams& params);

/// beta = -1 classes, in bijection with X0.
std::vector<EulerClass> enumerate_E(const BrieskornParams& params);

/// beta = -2 classes with sum beta_i/a_i > 2, found by brute force.
std::vector<EulerClass> enumerate_condition_b(const BrieskornParams& params);

/// Orientation reversal (a) <-> (b): (-1; b_i) <-> (-2; a_i - b_i).
/// Throws NotRealizable if eu satisfies neither condition.
EulerClass reverse_orientation(const EulerClass& eu, const BrieskornParams& params);

SeifertInvariant seifert_from_euler(const EulerClass& eu, const BrieskornParams& params);

}  // namespace brieskorn
