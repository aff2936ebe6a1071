#include "brieskorn/euler.hpp"
#include "brieskorn/error.hpp"

#include <sstream>

namespace brieskorn {

namespace {

// beta1 a2 a3 + beta2 a1 a3 + beta3 a1 a2, i.e. a * sum beta_i/a_i
Integer scaled_sum(std::int64_t b1, std::int64_t b2, std::int64_t b3, const BrieskornParams& p) {
  return Integer(b1) * p.a2 * p.a3 + Integer(b2) * p.a1 * p.a3 + Integer(b3) * p.a1 * p.a2;
}

bool normalized(const EulerClass& eu, const BrieskornParams& p) {
  const auto m = p.multiplicities();
  for (int i = 0; i < 3; ++i) {
    if (eu.betas[i] <= 0 || eu.betas[i] >= m[i]) return false;
  }
  return true;
}

}  // namespace

Rational fiber_fraction_sum(const std::array<std::int64_t, 3>& betas, const BrieskornParams& params) {
  return Rational(scaled_sum(betas[0], betas[1], betas[2], params), params.product());
}

bool satisfies_condition_a(const EulerClass& eu, const BrieskornParams& params) {
  return eu.beta == -1 && normalized(eu, params) &&
         scaled_sum(eu.betas[0], eu.betas[1], eu.betas[2], params) < params.product();
}

bool satisfies_condition_b(const EulerClass& eu, const BrieskornParams& params) {
  return eu.beta == -2 && normalized(eu, params) &&
         scaled_sum(eu.betas[0], eu.betas[1], eu.betas[2], params) > 2 * params.product();
}

std::vector<X0Triple> enumerate_X0(const BrieskornParams& params) {
  std::vector<X0Triple> out;
  const Integer a = params.product();
  for (std::int64_t k = 1; k < params.a1; ++k) {
    for (std::int64_t l = 1; l < params.a2; ++l) {
      // the sum is increasing in m; stop at the first failure
      for (std::int64_t m = 1; m < params.a3; ++m) {
        if (scaled_sum(k, l, m, params) >= a) break;
        out.push_back({k, l, m});
      }
    }
  }
  return out;
}

std::vector<EulerClass> enumerate_E(const BrieskornParams& params) {
  const auto x0 = enumerate_X0(params);
  std::vector<EulerClass> out;
  out.reserve(x0.size());
  for (const auto& t : x0) out.push_back(EulerClass{-1, {t.k, t.l, t.m}});
  return out;
}

std::vector<EulerClass> enumerate_condition_b(const BrieskornParams& params) {
  std::vector<EulerClass> out;
  for (std::int64_t b1 = 1; b1 < params.a1; ++b1) {
    for (std::int64_t b2 = 1; b2 < params.a2; ++b2) {
      for (std::int64_t b3 = 1; b3 < params.a3; ++b3) {
        EulerClass eu{-2, {b1, b2, b3}};
        if (satisfies_condition_b(eu, params)) out.push_back(eu);
      }
    }
  }
  return out;
}

EulerClass reverse_orientation(const EulerClass& eu, const BrieskornParams& params) {
  const auto m = params.multiplicities();
  EulerClass r;
  if (satisfies_condition_a(eu, params)) {
    r.beta = -2;
  } else if (satisfies_condition_b(eu, params)) {
    r.beta = -1;
  } else {
    throw Error(ErrorCode::NotRealizable, to_string(eu) + " satisfies neither realizability condition");
  }
  for (int i = 0; i < 3; ++i) r.betas[i] = m[i] - eu.betas[i];
  return r;
}

SeifertInvariant seifert_from_euler(const EulerClass& eu, const BrieskornParams& params) {
  const auto m = params.multiplicities();
  SeifertInvariant s;
  s.b = eu.beta;
  for (int i = 0; i < 3; ++i) s.fibers[i] = SingularFiber{m[i], Integer(eu.betas[i])};
  return s;
}

std::string to_string(const EulerClass& eu) {
  std::ostringstream os;
  os << "(" << eu.beta << ";" << eu.betas[0] << "," << eu.betas[1] << "," << eu.betas[2] << ")";
  return os.str();
}

}  // namespace brieskorn
