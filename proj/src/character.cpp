#include "brieskorn/character.hpp"
#include "brieskorn/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <tuple>

namespace brieskorn {

namespace {

Rational mod2(const Rational& x) {
  const Integer& q = denominator(x);
  return Rational(floor_mod(numerator(x), 2 * q), q);
}

// Angles of a triple as integers over their least common denominator.
struct CommonAngles {
  std::array<Integer, 3> T;
  Integer den;
};

CommonAngles common_angles(const CharacterTriple& c) {
  CommonAngles a;
  a.den = 1;
  for (const auto& t : c.traces) a.den = boost::multiprecision::lcm(a.den, denominator(t.angle()));
  for (int i = 0; i < 3; ++i) {
    const Rational& t = c.traces[i].angle();
    a.T[i] = numerator(t) * (a.den / denominator(t));
  }
  return a;
}

int sign_power(int epsilon, const Integer& exponent) { return (epsilon == -1 && !is_even(exponent)) ? -1 : 1; }

void require_homology_sphere(const SeifertInvariant& sigma) {
  if (sigma.b != 0) throw Error(ErrorCode::InvalidSeifert, "expected b = 0 in " + to_string(sigma));
  if (h1_order(sigma) != 1) throw Error(ErrorCode::InvalidSeifert, to_string(sigma) + " is not a homology sphere");
}

}  // namespace

TraceValue TraceValue::from_angle(const Rational& x) {
  Rational t = mod2(x);
  if (t > 1) t = 2 - t;
  return TraceValue(t);
}

double TraceValue::value() const { return 2.0 * std::cos(std::numbers::pi * to_double(t_)); }

std::string TraceValue::exact_string() const {
  if (t_ == 0) return "2cos(0)";
  const Integer& p = numerator(t_);
  const Integer& q = denominator(t_);
  std::ostringstream os;
  os << "2cos(";
  if (p != 1) os << p;
  os << "π";
  if (q != 1) os << "/" << q;
  os << ")";
  return os.str();
}

std::string TraceValue::decimal_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value());
  std::string s(buf);
  if (s == "-0.000000000000") s.erase(0, 1);
  return s;
}

CharacterTriple make_triple(const Rational& t1, const Rational& t2, const Rational& t3, int epsilon) {
  CharacterTriple c;
  c.traces = {TraceValue::from_angle(t1), TraceValue::from_angle(t2), TraceValue::from_angle(t3)};
  c.epsilon = epsilon;
  return c;
}

std::string to_string(const CharacterTriple& c) {
  std::ostringstream os;
  os << "(" << c.tX().exact_string() << ", " << c.tY().exact_string() << ", " << c.tZ().exact_string()
     << "; eps=" << (c.epsilon > 0 ? "+1" : "-1") << ")";
  return os.str();
}

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::Reducible: return "Reducible";
    case ClassLabel::SU2: return "SU2";
    case ClassLabel::SL2R: return "SL2R";
  }
  return "?";
}

BrieskornParams params_of(const SeifertInvariant& sigma) {
  BrieskornParams p;
  p.a1 = sigma.fibers[0].a;
  p.a2 = sigma.fibers[1].a;
  p.a3 = sigma.fibers[2].a;
  return p;
}

TraceValue trace_of_generator(std::int64_t beta_i, std::int64_t a_i, const Integer& order, const Integer& b_i) {
  if (beta_i <= 0 || beta_i >= a_i) {
    throw std::invalid_argument("trace_of_generator: beta_i outside (0, a_i)");
  }
  if (order < 1) throw std::invalid_argument("trace_of_generator: order must be positive");
  const TraceValue t = TraceValue::from_angle(Rational(-order * b_i, Integer(a_i)));
  if (t.is_central()) {
    throw Error(ErrorCode::DegenerateAngle, "2cos(" + to_string(Rational(-order * b_i, Integer(a_i))) +
                                                "π) is central");
  }
  return t;
}

bool central_relations_hold(const CharacterTriple& c, const SeifertInvariant& sigma) {
  for (int i = 0; i < 3; ++i) {
    const Rational l = c.traces[i].angle() * Rational(Integer(sigma.fibers[i].a));
    if (denominator(l) != 1) return false;
    // X^{a_i} has eigenvalue e^{i pi l}; it must equal epsilon^{-b_i}
    const int power_sign = is_even(numerator(l)) ? 1 : -1;
    if (power_sign != sign_power(c.epsilon, sigma.fibers[i].b)) return false;
  }
  return true;
}

namespace {

// sigma already validated; convention = a(b + sum b_i/a_i)
CharacterTriple triple_of_class(const EulerClass& eu, const SeifertInvariant& sigma, const BrieskornParams& params,
                                int convention) {
  if (!satisfies_condition_a(eu, params)) {
    throw Error(ErrorCode::NotRealizable, to_string(eu) + " is not in E");
  }
  const Integer order = h1_order(seifert_from_euler(eu, params));

  CharacterTriple c;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t a_i = sigma.fibers[i].a;
    c.traces[i] = trace_of_generator(eu.betas[i], a_i, order, sigma.fibers[i].b);
    // -a|e|b_i reduces to beta_i (or a_i - beta_i for the opposite convention) mod a_i
    const Integer r = floor_mod(-order * sigma.fibers[i].b, Integer(a_i));
    const Integer expected = convention > 0 ? Integer(eu.betas[i]) : Integer(a_i - eu.betas[i]);
    if (r != expected) {
      throw std::logic_error("trace_triple_of: residue " + r.str() + " != " + expected.str() + " for " +
                             to_string(eu));
    }
  }
  c.epsilon = is_even(order) ? 1 : -1;
  c.central_consistent = central_relations_hold(c, sigma);
  return c;
}

bool reversed_traces_equal(const EulerClass& eu, const CharacterTriple& forward, const SeifertInvariant& sigma,
                           const BrieskornParams& params) {
  const EulerClass reversed = reverse_orientation(eu, params);
  // h goes to sh(-a|e(-M)|) on the reversed side, flipping the sign of the angle
  const Integer order = h1_order(seifert_from_euler(reversed, params));
  for (int i = 0; i < 3; ++i) {
    const TraceValue t = TraceValue::from_angle(Rational(order * sigma.fibers[i].b, Integer(sigma.fibers[i].a)));
    if (!(t == forward.traces[i])) return false;
  }
  return true;
}

}  // namespace

CharacterTriple trace_triple_of(const EulerClass& eu, const SeifertInvariant& sigma) {
  require_homology_sphere(sigma);
  const BrieskornParams params = params_of(sigma);
  return triple_of_class(eu, sigma, params, unimodular_sign(params, sigma));
}

bool is_reducible_triple(const CharacterTriple& c) {
  const CommonAngles a = common_angles(c);
  const Integer period = 2 * a.den;
  const Integer t3 = floor_mod(a.T[2], period);
  for (const Integer& s : {Integer(a.T[0] + a.T[1]), Integer(a.T[0] - a.T[1])}) {
    if (t3 == floor_mod(s, period) || t3 == floor_mod(-s, period)) return true;
  }
  return false;
}

double kappa(const CharacterTriple& c) {
  const double x = c.tX().value(), y = c.tY().value(), z = c.tZ().value();
  return x * x + y * y + z * z - x * y * z - 4.0;
}

ClassLabel classify(const CharacterTriple& c) {
  const double k = kappa(c);
  if (is_reducible_triple(c)) {
    if (std::abs(k) > kKappaTolerance) {
      throw Error(ErrorCode::InconsistentClassification,
                  "reducible triple " + to_string(c) + " has kappa " + std::to_string(k));
    }
    return ClassLabel::Reducible;
  }
  for (const auto& t : c.traces) {
    if (t.is_central()) throw Error(ErrorCode::DegenerateAngle, "central generator in " + to_string(c));
  }

  // spherical triangle: |t1 - t2| < t3 < min(t1 + t2, 2 - t1 - t2)
  const CommonAngles a = common_angles(c);
  const Integer gap = abs(Integer(a.T[0] - a.T[1]));
  const Integer upper = std::min(Integer(a.T[0] + a.T[1]), Integer(2 * a.den - a.T[0] - a.T[1]));
  const ClassLabel label = (gap < a.T[2] && a.T[2] < upper) ? ClassLabel::SU2 : ClassLabel::SL2R;

  const bool agrees = label == ClassLabel::SU2 ? k < -kKappaTolerance : k > kKappaTolerance;
  if (!agrees) {
    throw Error(ErrorCode::InconsistentClassification, to_string(c) + " classified " +
                                                           std::string(to_string(label)) + " but kappa = " +
                                                           std::to_string(k));
  }
  return label;
}

Integer total_irreducible_count(const BrieskornParams& params) {
  const Integer prod = Integer(params.a1 - 1) * (params.a2 - 1) * (params.a3 - 1);
  if (prod % 4 != 0) throw Error(ErrorCode::CountMismatch, "(a1-1)(a2-1)(a3-1) not divisible by 4");
  return prod / 4;
}

std::array<Integer, 3> rotation_numbers(const CharacterTriple& c, const BrieskornParams& params) {
  const auto m = params.multiplicities();
  std::array<Integer, 3> l;
  for (int i = 0; i < 3; ++i) {
    const Rational v = c.traces[i].angle() * Rational(Integer(m[i]));
    if (denominator(v) != 1) throw std::invalid_argument("rotation_numbers: non-integral rotation number");
    l[i] = numerator(v);
  }
  return l;
}

std::vector<CharacterTriple> enumerate_su2(const BrieskornParams& params, const SeifertInvariant& sigma) {
  require_homology_sphere(sigma);
  const auto m = params.multiplicities();
  for (int i = 0; i < 3; ++i) {
    if (sigma.fibers[i].a != m[i]) throw Error(ErrorCode::InvalidSeifert, "fibers do not match params");
  }

  struct Entry {
    std::array<std::int64_t, 3> l;
    int epsilon;
    CharacterTriple triple;
  };
  std::vector<Entry> found;

  for (int epsilon : {1, -1}) {
    // rho(x)^{a_i} = (-1)^{l_i} I must equal epsilon^{-b_i} I
    std::array<std::int64_t, 3> first{};
    for (int i = 0; i < 3; ++i) {
      const bool odd = epsilon == -1 && !is_even(sigma.fibers[i].b);
      first[i] = odd ? 1 : 2;
    }
    for (std::int64_t l1 = first[0]; l1 < m[0]; l1 += 2) {
      for (std::int64_t l2 = first[1]; l2 < m[1]; l2 += 2) {
        for (std::int64_t l3 = first[2]; l3 < m[2]; l3 += 2) {
          CharacterTriple c = make_triple(Rational(l1, m[0]), Rational(l2, m[1]), Rational(l3, m[2]), epsilon);
          if (classify(c) != ClassLabel::SU2) continue;
          c.central_consistent = central_relations_hold(c, sigma);
          found.push_back({{l1, l2, l3}, epsilon, std::move(c)});
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const Entry& l, const Entry& r) {
    return std::tie(l.l, l.epsilon) < std::tie(r.l, r.epsilon);
  });
  std::vector<CharacterTriple> out;
  out.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i > 0 && found[i].l == found[i - 1].l) {
      // the same rotation numbers cannot satisfy both parity patterns
      throw Error(ErrorCode::CountMismatch, "rotation numbers repeated across central signs");
    }
    out.push_back(std::move(found[i].triple));
  }

  const Integer expected = total_irreducible_count(params) - enumerate_X0(params).size();
  if (Integer(out.size()) != expected) {
    throw Error(ErrorCode::CountMismatch, "found " + std::to_string(out.size()) + " SU(2) classes, expected " +
                                              expected.str());
  }
  return out;
}

void check_count_report(const CountReport& r) {
  auto fail = [&](const std::string& what) { throw Error(ErrorCode::CountMismatch, what); };
  if (r.total != r.su2 + r.sl2r) fail("total != su2 + sl2r");
  if (!is_even(r.su2)) fail("su2 count is odd");
  if (r.casson_abs * 2 != r.su2) fail("|lambda| != su2/2");
  if (r.casson_sl2c != r.total) fail("lambda_SL2C != total");
  if (r.casson_sl2c - 2 * r.casson_abs != r.sl2r) fail("lambda_SL2C - 2|lambda| != sl2r");
}

CountReport count_report(const BrieskornParams& params, const SeifertInvariant& sigma) {
  CountReport r;
  r.total = total_irreducible_count(params);
  r.su2 = enumerate_su2(params, sigma).size();
  r.sl2r = enumerate_E(params).size();
  r.casson_abs = r.su2 / 2;
  r.casson_sl2c = r.total;
  check_count_report(r);
  return r;
}

CountReport count_report(const BrieskornParams& params) { return count_report(params, solve_seifert(params)); }

std::vector<std::pair<EulerClass, CharacterTriple>> phi_map(const BrieskornParams& params,
                                                            const SeifertInvariant& sigma) {
  require_homology_sphere(sigma);
  const int convention = unimodular_sign(params, sigma);
  std::vector<std::pair<EulerClass, CharacterTriple>> out;
  for (const auto& eu : enumerate_E(params)) out.emplace_back(eu, triple_of_class(eu, sigma, params, convention));

  std::vector<std::size_t> idx(out.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t l, std::size_t r) { return out[l].second.traces < out[r].second.traces; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const auto& prev = out[idx[i - 1]];
    const auto& cur = out[idx[i]];
    if (prev.second.same_traces(cur.second)) {
      throw Error(ErrorCode::InjectivityViolation,
                  to_string(prev.first) + " and " + to_string(cur.first) + " share " + to_string(cur.second));
    }
  }
  return out;
}

bool reversed_trace_check(const EulerClass& eu, const SeifertInvariant& sigma) {
  const BrieskornParams params = params_of(sigma);
  return reversed_traces_equal(eu, trace_triple_of(eu, sigma), sigma, params);
}

bool reversed_trace_check(const EulerClass& eu, const CharacterTriple& forward, const SeifertInvariant& sigma) {
  return reversed_traces_equal(eu, forward, sigma, params_of(sigma));
}

}  // namespace brieskorn
