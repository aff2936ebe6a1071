#include "brieskorn/error.hpp"
#include "brieskorn/euler.hpp"
#include "brieskorn/seifert.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace brieskorn;

namespace {

// Plain 64-bit fraction arithmetic, independent of the library's Rational.
struct Frac {
  long long num, den;
};
Frac add(Frac x, Frac y) {
  Frac r{x.num * y.den + y.num * x.den, x.den * y.den};
  const long long g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

SeifertInvariant data(long long b, std::array<std::pair<long long, long long>, 3> f) {
  SeifertInvariant s;
  s.b = b;
  for (int i = 0; i < 3; ++i) s.fibers[i] = SingularFiber{f[i].first, Integer(f[i].second)};
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::CountMismatch;
}

}  // namespace

TEST_CASE("canonicalize moves the even multiplicity first") {
  const auto p = canonicalize_params(7, 2, 3);
  CHECK(p.a1 == 2);
  CHECK(p.a2 == 3);
  CHECK(p.a3 == 7);
  CHECK(p.permutation == std::array<int, 3>{1, 2, 0});
  CHECK_FALSE(p.identity_permutation());

  const auto q = canonicalize_params(3, 5, 7);
  CHECK(q.multiplicities() == std::array<std::int64_t, 3>{3, 5, 7});
  CHECK(q.identity_permutation());
}

TEST_CASE("canonicalize rejects bad input") {
  CHECK(code_of([] { canonicalize_params(4, 6, 9); }) == ErrorCode::NotPairwiseCoprime);
  CHECK(code_of([] { canonicalize_params(1, 3, 5); }) == ErrorCode::ValueTooSmall);
  CHECK(code_of([] { canonicalize_params(2, 3, 9); }) == ErrorCode::NotPairwiseCoprime);
}

TEST_CASE("solve_seifert reproduces the worked solutions") {
  // oracle: 15*3 + 10*(-2) + 6*(-4) = 1 and 21*1 + 14*2 + 6*(-8) = 1
  CHECK(15 * 3 + 10 * (-2) + 6 * (-4) == 1);
  CHECK(21 * 1 + 14 * 2 + 6 * (-8) == 1);

  const auto s235 = solve_seifert(canonicalize_params(2, 3, 5));
  CHECK(s235 == data(0, {{{2, 3}, {3, -2}, {5, -4}}}));

  const auto s237 = solve_seifert(canonicalize_params(2, 3, 7));
  CHECK(s237 == data(0, {{{2, 1}, {3, 2}, {7, -8}}}));
}

TEST_CASE("parity repair preserves the unimodular identity") {
  // (b1, b2) -> (b1 + a1, b2 - a2) leaves a2a3 b1 + a1a3 b2 + a1a2 b3 unchanged
  const long long a1 = 2, a2 = 3, a3 = 5;
  const long long b1 = 1, b2 = 1, b3 = -4;
  CHECK(a2 * a3 * b1 + a1 * a3 * b2 + a1 * a2 * b3 == 1);
  CHECK(a2 * a3 * (b1 + a1) + a1 * a3 * (b2 - a2) + a1 * a2 * b3 == 1);
  CHECK((b2 - a2) % 2 == 0);
}

TEST_CASE("solve_seifert invariants over many coprime triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(2, 60);
  int checked = 0;
  while (checked < 300) {
    const long long x = dist(rng), y = dist(rng), z = dist(rng);
    if (std::gcd(x, y) != 1 || std::gcd(x, z) != 1 || std::gcd(y, z) != 1) continue;
    const auto p = canonicalize_params(x, y, z);
    const auto s = solve_seifert(p);
    CAPTURE(to_string(s));
    CHECK(s.b == 0);
    CHECK(Integer(p.a2) * p.a3 * s.b_i(0) + Integer(p.a1) * p.a3 * s.b_i(1) + Integer(p.a1) * p.a2 * s.b_i(2) == 1);
    CHECK(is_even(s.b_i(1)));
    CHECK(is_even(s.b_i(2)));
    CHECK_FALSE((is_even(s.b_i(0)) && is_even(s.b_i(1)) && is_even(s.b_i(2))));
    CHECK(floor_mod(Integer(p.a2) * p.a3 * s.b_i(0), Integer(p.a1)) == 1 % p.a1);
    CHECK(h1_order(s) == 1);
    CHECK(unimodular_sign(p, s) == 1);
    ++checked;
  }
}

TEST_CASE("solve_seifert is deterministic") {
  const auto p = canonicalize_params(5, 7, 11);
  CHECK(solve_seifert(p) == solve_seifert(p));
  CHECK(solve_seifert(canonicalize_params(11, 5, 7)) == solve_seifert(p));
}

TEST_CASE("euler_number") {
  const auto s = data(0, {{{2, 1}, {3, 2}, {7, -8}}});
  // oracle: 1/2 + 2/3 - 8/7 = 1/42, so e = -1/42 and a(b + sum) = +1
  const Frac sum = add(add({1, 2}, {2, 3}), {-8, 7});
  CHECK(sum.num == 1);
  CHECK(sum.den == 42);
  CHECK(euler_number(s) == Rational(-1, 42));
  CHECK(-euler_number(s) * 42 == 1);

  CHECK(euler_number(data(-1, {{{2, 1}, {3, 1}, {7, 1}}})) == Rational(1, 42));
  CHECK(euler_number(data(0, {{{1, 0}, {1, 0}, {1, 0}}})) == 0);
}

TEST_CASE("h1_order") {
  CHECK(h1_order(solve_seifert(canonicalize_params(2, 3, 7))) == 1);

  // M_k for (2,3,6n+1) with eu = (-1;1,1,k) has |H1| = 6(n-k)+1
  for (int n = 1; n <= 6; ++n) {
    const auto p = canonicalize_params(2, 3, 6 * n + 1);
    for (int k = 1; k <= n; ++k) {
      CHECK(h1_order(seifert_from_euler(EulerClass{-1, {1, 1, k}}, p)) == 6 * (n - k) + 1);
    }
  }

  // oracle: -1 + 2/3 + 1/5 + 1/7 = 1/105, times 105
  const Frac sum = add(add(add({-1, 1}, {2, 3}), {1, 5}), {1, 7});
  CHECK(sum.num * 105 % sum.den == 0);
  const long long expected = std::llabs(sum.num * 105 / sum.den);
  CHECK(expected == 1);
  CHECK(h1_order(data(-1, {{{3, 2}, {5, 1}, {7, 1}}})) == expected);

  // a(b + sum b_i/a_i) = ab + sum b_i a/a_i is integral for any integer data
  CHECK(h1_order(data(0, {{{2, 1}, {3, 0}, {5, 0}}})) == 15);
}

TEST_CASE("euler_number is odd under orientation reversal") {
  const auto p = canonicalize_params(3, 5, 7);
  for (const auto& eu : enumerate_E(p)) {
    const auto forward = seifert_from_euler(eu, p);
    const auto reversed = seifert_from_euler(reverse_orientation(eu, p), p);
    CHECK(euler_number(reversed) == -euler_number(forward));
  }
}

TEST_CASE("presentation transcribes the Seifert data") {
  const auto g = presentation(solve_seifert(canonicalize_params(2, 3, 7)));
  CHECK(g.fiber_relators[0].power == 2);
  CHECK(g.fiber_relators[0].h_exponent == -1);
  CHECK(g.fiber_relators[1].power == 3);
  CHECK(g.fiber_relators[1].h_exponent == -2);
  CHECK(g.fiber_relators[2].power == 7);
  CHECK(g.fiber_relators[2].h_exponent == 8);
  CHECK(g.product_h_exponent == 0);

  for (int n = 1; n <= 3; ++n) {
    const auto paper = data(0, {{{2, 1}, {3, -2}, {6 * n + 1, n}}});
    const std::string expected = "<x,y,z,h | h central, x^2=h^-1, y^3=h^2, z^" + std::to_string(6 * n + 1) + "=h^" +
                                 std::to_string(-n) + ", xyz=1>";
    CHECK(presentation(paper).to_string() == expected);
  }

  const auto shifted = presentation(data(-1, {{{2, 1}, {3, 1}, {7, 1}}}));
  CHECK(shifted.product_h_exponent == -1);
  CHECK(shifted.to_string().find("xyz=h^-1") != std::string::npos);
}

TEST_CASE("unimodular_sign and folding b") {
  const auto p = canonicalize_params(2, 3, 7);
  CHECK(unimodular_sign(p, data(0, {{{2, 1}, {3, -2}, {7, 1}}})) == -1);
  CHECK(unimodular_sign(p, data(-1, {{{2, 1}, {3, 1}, {7, 1}}})) == -1);
  CHECK(code_of([&] { unimodular_sign(p, data(0, {{{2, 1}, {3, 1}, {7, 1}}})); }) == ErrorCode::InvalidSeifert);
  CHECK(code_of([&] { unimodular_sign(p, data(0, {{{3, 1}, {2, 1}, {7, 1}}})); }) == ErrorCode::InvalidSeifert);

  const auto folded = fold_central_exponent(data(-1, {{{2, 1}, {3, 1}, {7, 1}}}));
  CHECK(folded == data(0, {{{2, -1}, {3, 1}, {7, 1}}}));
  CHECK(euler_number(folded) == Rational(1, 42));
}
