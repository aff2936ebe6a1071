// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "brieskorn/analysis.hpp"
#include "brieskorn/character.hpp"
#include "brieskorn/error.hpp"
#include "brieskorn/euler.hpp"
#include "brieskorn/realize.hpp"
#include "brieskorn/seifert.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace brieskorn;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kSweepBound = 3000;
constexpr std::int64_t kVerifyBound = 1000;
constexpr double kResidualTol = 1e-9;
constexpr double kGapTol = 1e-9;
constexpr double kGapKappaTol = 1e-8;

// Shared between criteria 6/8 and 9.
int g_inconsistent_events = 0;
std::size_t g_triples_classified = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& detail) {
    if (out_.pass) out_.detail = detail;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

std::string params_name(const BrieskornParams& p) {
  return "Σ(" + std::to_string(p.a1) + "," + std::to_string(p.a2) + "," + std::to_string(p.a3) + ")";
}

SeifertInvariant paper_data(int n) {
  SeifertInvariant s;
  s.fibers = {SingularFiber{2, 1}, SingularFiber{3, -2}, SingularFiber{6 * n + 1, n}};
  return s;
}

ClassLabel classify_counted(const CharacterTriple& c) {
  ++g_triples_classified;
  try {
    return classify(c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InconsistentClassification) ++g_inconsistent_events;
    throw;
  }
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome criterion1() {
  Checker ck;
  const auto t0 = Clock::now();
  const auto r = count_report(canonicalize_params(2, 3, 5));
  const auto rec = analyze(2, 3, 5);
  const double dt = seconds_since(t0);
  ck.expect(r.total == 2 && r.su2 == 2 && r.sl2r == 0, "count_report for Σ(2,3,5)");
  ck.expect(rec.counts.total == 2 && rec.su2.size() == 2 && rec.sl2r.empty(), "analyze for Σ(2,3,5)");
  ck.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  ck.note("total=2 su2=2 sl2r=0 in " + std::to_string(dt) + " s");
  return ck.result();
}

Outcome criterion2() {
  Checker ck;
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto t0 = Clock::now();
    const auto r = count_report(canonicalize_params(2, 3, 6 * n + 1));
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    ck.expect(r.casson_abs == n, "|λ| != n for n=" + std::to_string(n));
    ck.expect(r.casson_sl2c == 3 * n, "λ_SL2C != 3n for n=" + std::to_string(n));
    ck.expect(r.sl2r == n, "|R_SL2R| != n for n=" + std::to_string(n));
    ck.expect(dt < 1.0, "runtime for n=" + std::to_string(n));
  }
  ck.note("n=1..5, slowest " + std::to_string(worst) + " s");
  return ck.result();
}

Outcome criterion3() {
  Checker ck;
  int rows = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto sigma = paper_data(n);
    const auto p = canonicalize_params(2, 3, 6 * n + 1);
    const auto phi = phi_map(p, sigma);
    ck.expect(phi.size() == static_cast<std::size_t>(n), "|Φ(E)| for n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
      const auto c = trace_triple_of(EulerClass{-1, {1, 1, k}}, sigma);
      const Rational base(k, 6 * n + 1);
      const Rational expected_z = (n - k) % 2 == 0 ? base : Rational(1 - base);
      const std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      ck.expect(c.tX() == TraceValue::from_angle(Rational(1, 2)), "tr X != 0" + at);
      ck.expect(c.tY() == TraceValue::from_angle(Rational(2, 3)), "tr Y != -1" + at);
      ck.expect(c.tZ() == TraceValue::from_angle(expected_z), "tr Z" + at);
      ck.expect(phi[k - 1].second.same_traces(c), "Φ order" + at);
      ++rows;
    }
  }
  ck.note(std::to_string(rows) + " (n,k) rows exact");
  return ck.result();
}

Outcome criterion4() {
  Checker ck;
  int values = 0;
  for (int n = 1; n <= 5; ++n) {
    const int d = 6 * n + 1;
    const auto su2 = enumerate_su2(canonicalize_params(2, 3, d), paper_data(n));
    std::set<Rational> got, expected;
    for (const auto& c : su2) {
      got.insert(c.tZ().angle());
      ck.expect(c.tX().angle() == Rational(1, 2) && c.tY().angle() == Rational(2, 3), "SU(2) tr X / tr Y");
    }
    for (int l = n + 2; l <= 5 * n; l += 2) {
      const Rational t(l, d);
      ck.expect(Rational(1, 6) < t && t < Rational(5, 6), "1/6 < l/(6n+1) < 5/6 for l=" + std::to_string(l));
      expected.insert(t);
    }
    ck.expect(su2.size() == expected.size(), "SU(2) count for n=" + std::to_string(n));
    ck.expect(got == expected, "SU(2) tr Z set for n=" + std::to_string(n));
    values += static_cast<int>(got.size());
  }
  ck.note(std::to_string(values) + " SU(2) traces exact");
  return ck.result();
}

Outcome criterion5() {
  Checker ck;
  const auto p = canonicalize_params(3, 5, 7);
  const std::vector<EulerClass> listed{{-1, {1, 1, 1}}, {-1, {1, 1, 2}}, {-1, {1, 1, 3}}, {-1, {1, 2, 1}}};
  const auto e = enumerate_E(p);
  ck.expect(e == listed, "E differs from the four listed classes");
  std::ostringstream orders;
  for (const auto& eu : e) {
    const Integer h = h1_order(seifert_from_euler(eu, p));
    ck.expect(h != 1, to_string(eu) + " has trivial homology");
    orders << h << " ";
  }
  ck.note("|E|=4, |H1(M)| = " + orders.str());
  return ck.result();
}

Outcome criterion6() {
  Checker ck;
  const auto t0 = Clock::now();
  const auto all = census_params(kSweepBound);
  for (const auto& p : all) {
    const std::string name = params_name(p);
    try {
      const auto sigma = solve_seifert(p);
      const auto su2 = enumerate_su2(p, sigma);
      const auto phi = phi_map(p, sigma);  // throws InjectivityViolation
      ck.expect(Integer(su2.size() + phi.size()) == total_irreducible_count(p), "partition count at " + name);

      std::set<std::array<TraceValue, 3>> su2_set, phi_set;
      for (const auto& c : su2) {
        ck.expect(classify_counted(c) == ClassLabel::SU2, "SU(2) label at " + name);
        su2_set.insert(c.traces);
      }
      for (const auto& [eu, c] : phi) {
        ck.expect(classify_counted(c) == ClassLabel::SL2R, "SL(2;R) label at " + name);
        phi_set.insert(c.traces);
      }
      ck.expect(phi_set.size() == phi.size(), "Φ not injective at " + name);
      ck.expect(su2_set.size() == su2.size(), "duplicate SU(2) triple at " + name);
      for (const auto& t : phi_set) ck.expect(su2_set.count(t) == 0, "SU(2) ∩ Φ(E) nonempty at " + name);
    } catch (const std::exception& ex) {
      ck.expect(false, name + ": " + ex.what());
    }
  }
  const double dt = seconds_since(t0);
  ck.expect(dt < 60.0, "sweep took " + std::to_string(dt) + " s");
  ck.note(std::to_string(all.size()) + " manifolds with a <= " + std::to_string(kSweepBound) + " in " +
          std::to_string(dt) + " s");
  return ck.result();
}

Outcome criterion7() {
  Checker ck;
  std::size_t classes = 0;
  for (const auto& p : census_params(kSweepBound)) {
    const std::string name = params_name(p);
    try {
      const auto sigma = solve_seifert(p);
      const auto e = enumerate_E(p);
      const auto b = enumerate_condition_b(p);
      ck.expect(e.size() == b.size(), "|E| != |condition (b)| at " + name);
      std::vector<EulerClass> images;
      for (const auto& eu : e) {
        const EulerClass r = reverse_orientation(eu, p);
        ck.expect(satisfies_condition_b(r, p), "image not in condition (b) at " + name);
        ck.expect(reverse_orientation(r, p) == eu, "reversal not involutive at " + name);
        ck.expect(reversed_trace_check(eu, sigma), "reversed traces differ for " + to_string(eu) + " at " + name);
        images.push_back(r);
        ++classes;
      }
      std::sort(images.begin(), images.end());
      ck.expect(images == b, "reversal not onto condition (b) at " + name);
    } catch (const std::exception& ex) {
      ck.expect(false, name + ": " + ex.what());
    }
  }
  ck.note(std::to_string(classes) + " euler classes reversed");
  return ck.result();
}

Outcome criterion8() {
  Checker ck;
  const auto t0 = Clock::now();
  std::size_t certified = 0;
  double worst_residual = 0.0, worst_gap_error = 0.0, smallest_gap = 1e300;
  for (const auto& p : census_params(kVerifyBound)) {
    const std::string name = params_name(p);
    try {
      const auto sigma = solve_seifert(p);
      std::vector<std::pair<CharacterTriple, ClassLabel>> triples;
      for (auto& c : enumerate_su2(p, sigma)) triples.emplace_back(std::move(c), ClassLabel::SU2);
      for (auto& [eu, c] : phi_map(p, sigma)) triples.emplace_back(std::move(c), ClassLabel::SL2R);
      for (const auto& [c, expected] : triples) {
        const ClassLabel label = classify_counted(c);
        ck.expect(label == expected, "label mismatch at " + name);
        const auto rep = certify(c, label, sigma, kResidualTol);
        const double gap_error = std::abs(rep.irreducibility_gap - std::abs(kappa(c)));
        ck.expect(rep.max_residual() < kResidualTol, "residual " + std::to_string(rep.max_residual()) + " at " + name);
        ck.expect(rep.irreducibility_gap > kGapTol, "irreducibility gap at " + name);
        ck.expect(gap_error < kGapKappaTol, "gap vs |κ| at " + name);
        worst_residual = std::max(worst_residual, rep.max_residual());
        worst_gap_error = std::max(worst_gap_error, gap_error);
        smallest_gap = std::min(smallest_gap, rep.irreducibility_gap);
        ++certified;
      }
    } catch (const std::exception& ex) {
      ck.expect(false, name + ": " + ex.what());
    }
  }
  const double dt = seconds_since(t0);
  ck.expect(dt < 120.0, "certification took " + std::to_string(dt) + " s");
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu classes, max residual %.2e, min gap %.2e, max |gap-|κ|| %.2e, %.1f s", certified,
                worst_residual, smallest_gap, worst_gap_error, dt);
  ck.note(buf);
  return ck.result();
}

Outcome criterion9() {
  Checker ck;
  ck.expect(g_triples_classified > 0, "criteria 6 and 8 classified nothing");
  ck.expect(g_inconsistent_events == 0, std::to_string(g_inconsistent_events) + " InconsistentClassification events");
  ck.note(std::to_string(g_triples_classified) + " classifications, 0 inconsistent");
  return ck.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Σ(2,3,5) counts", criterion1},
      {"2 Σ(2,3,6n+1) Casson counts, n=1..5", criterion2},
      {"3 Σ(2,3,6n+1) SL(2;R) trace table", criterion3},
      {"4 Σ(2,3,6n+1) SU(2) traces", criterion4},
      {"5 Σ(3,5,7) euler classes", criterion5},
      {"6 partition/disjointness/injectivity sweep", criterion6},
      {"7 orientation reversal sweep", criterion7},
      {"8 realization certification", criterion8},
      {"9 classifier consistency", criterion9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " — " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
