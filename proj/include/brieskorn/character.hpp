#pragma once

#include "brieskorn/euler.hpp"
#include "brieskorn/seifert.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brieskorn {

/// The real number 2cos(pi t), stored through its angle t in [0, 1] in
/// lowest terms. Two values are equal exactly when their angles are.
class TraceValue {
 public:
  TraceValue() = default;

  /// 2cos(pi x) for any rational x, folded into the canonical range.
  static TraceValue from_angle(const Rational& x);

  const Rational& angle() const { return t_; }
  double value() const;
  bool is_central() const { return t_ == 0 || t_ == 1; }

  /// "2cos(3π/7)"
  std::string exact_string() const;
  /// 12 fractional digits.
  std::string decimal_string() const;

  friend bool operator==(const TraceValue&, const TraceValue&) = default;
  friend bool operator<(const TraceValue& l, const TraceValue& r) { return l.t_ < r.t_; }

 private:
  explicit TraceValue(Rational t) : t_(std::move(t)) {}
  Rational t_{0};
};

/// (tr X, tr Y, tr Z) of an irreducible class plus the central sign
/// epsilon with rho(h) = epsilon * I.
struct CharacterTriple {
  std::array<TraceValue, 3> traces;
  int epsilon = 1;
  /// Recorded at construction: every a_i t_i is an integer l_i with
  /// (-1)^{l_i} = epsilon^{b_i}, i.e. the fiber relations hold for the
  /// Seifert data the triple was built from.
  bool central_consistent = false;

  const TraceValue& tX() const { return traces[0]; }
  const TraceValue& tY() const { return traces[1]; }
  const TraceValue& tZ() const { return traces[2]; }

  /// Same conjugacy class: the traces agree (epsilon is implied by them).
  bool same_traces(const CharacterTriple& o) const { return traces == o.traces; }
};

CharacterTriple make_triple(const Rational& t1, const Rational& t2, const Rational& t3, int epsilon = 1);

std::string to_string(const CharacterTriple& c);

enum class ClassLabel { Reducible, SU2, SL2R };

std::string_view to_string(ClassLabel label);

struct CountReport {
  Integer total;        // (a1-1)(a2-1)(a3-1)/4
  Integer su2;          // |R_SU(2)|
  Integer sl2r;         // |R_SL(2;R)| = |E|
  Integer casson_abs;   // |lambda|
  Integer casson_sl2c;  // lambda_SL(2;C)
};

/// 2cos(-order * b_i * pi / a_i). Throws DegenerateAngle when the trace is ±2.
TraceValue trace_of_generator(std::int64_t beta_i, std::int64_t a_i, const Integer& order,
                              const Integer& b_i);

/// Trace triple of the SL(2;R) representation pulled back from the Seifert
/// space of eu. sigma must be homology-sphere data with b = 0.
CharacterTriple trace_triple_of(const EulerClass& eu, const SeifertInvariant& sigma);

bool is_reducible_triple(const CharacterTriple& c);

/// t1^2 + t2^2 + t3^2 - t1 t2 t3 - 4 = tr[X,Y] - 2.
double kappa(const CharacterTriple& c);

inline constexpr double kKappaTolerance = 1e-9;

/// Exact classification by rational angles, cross-checked against the sign
/// of kappa. Throws InconsistentClassification on disagreement.
ClassLabel classify(const CharacterTriple& c);

/// Rotation numbers l_i = a_i t_i of a triple, when they are integers.
bool central_relations_hold(const CharacterTriple& c, const SeifertInvariant& sigma);

/// Irreducible SU(2) classes, ordered by (l1, l2, l3, epsilon). Throws
/// CountMismatch if the count disagrees with (a1-1)(a2-1)(a3-1)/4 - |X0|.
std::vector<CharacterTriple> enumerate_su2(const BrieskornParams& params, const SeifertInvariant& sigma);

/// Rotation numbers (l1, l2, l3) of an enumerated SU(2) triple.
std::array<Integer, 3> rotation_numbers(const CharacterTriple& c, const BrieskornParams& params);

Integer total_irreducible_count(const BrieskornParams& params);

CountReport count_report(const BrieskornParams& params);
CountReport count_report(const BrieskornParams& params, const SeifertInvariant& sigma);

/// Throws CountMismatch if any CountReport identity fails.
void check_count_report(const CountReport& r);

/// (eu, trace_triple_of(eu)) over E. Throws InjectivityViolation on repeated triples.
std::vector<std::pair<EulerClass, CharacterTriple>> phi_map(const BrieskornParams& params,
                                                            const SeifertInvariant& sigma);

/// Recomputes the triple from the orientation-reversed class and compares.
bool reversed_trace_check(const EulerClass& eu, const SeifertInvariant& sigma);
/// As above with the forward triple already computed.
bool reversed_trace_check(const EulerClass& eu, const CharacterTriple& forward, const SeifertInvariant& sigma);

/// Canonical params read off the fibers of sigma (no reordering).
BrieskornParams params_of(const SeifertInvariant& sigma);

}  // namespace brieskorn
