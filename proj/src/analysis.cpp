#include "brieskorn/analysis.hpp"
#include "brieskorn/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace brieskorn {

namespace {

constexpr double kGapAgreement = 1e-8;

[[noreturn]] void fail(ErrorCode code, const BrieskornParams& p, const std::string& what) {
  std::ostringstream os;
  os << "Σ(" << p.a1 << "," << p.a2 << "," << p.a3 << "): " << what;
  throw Error(code, os.str());
}

RealizationSummary run_certification(ClassEntry& entry, const SeifertInvariant& sigma, double tol,
                                     const BrieskornParams& p) {
  const RealizationReport rep = certify(entry.triple, entry.label, sigma, tol);
  if (!rep.passed) {
    fail(ErrorCode::VerificationFailed, p,
         to_string(entry.triple) + " max residual " + std::to_string(rep.max_residual()) +
             ", irreducibility gap " + std::to_string(rep.irreducibility_gap));
  }
  if (std::abs(rep.irreducibility_gap - std::abs(entry.kappa)) > kGapAgreement) {
    fail(ErrorCode::VerificationFailed, p,
         to_string(entry.triple) + " irreducibility gap " + std::to_string(rep.irreducibility_gap) +
             " differs from |kappa| " + std::to_string(std::abs(entry.kappa)));
  }
  return {rep.passed, rep.max_residual(), rep.irreducibility_gap};
}

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

nlohmann::ordered_json trace_json(const TraceValue& t) {
  nlohmann::ordered_json j;
  j["t"] = to_string(t.angle());
  j["exact"] = t.exact_string();
  j["decimal"] = t.decimal_string();
  return j;
}

nlohmann::ordered_json euler_json(const EulerClass& eu) {
  return nlohmann::ordered_json{{"beta", eu.beta}, {"betas", eu.betas}};
}

nlohmann::ordered_json seifert_json(const SeifertInvariant& s) {
  nlohmann::ordered_json j;
  j["b"] = integer_json(s.b);
  j["fibers"] = nlohmann::ordered_json::array();
  for (const auto& f : s.fibers) j["fibers"].push_back({f.a, integer_json(f.b)});
  return j;
}

nlohmann::ordered_json entry_json(const ClassEntry& e) {
  nlohmann::ordered_json j;
  j["label"] = std::string(to_string(e.label));
  if (e.euler) j["euler"] = euler_json(*e.euler);
  if (e.cover_order) j["cover_order"] = integer_json(*e.cover_order);
  if (e.rotation_numbers) {
    j["rotation_numbers"] = nlohmann::ordered_json::array();
    for (const auto& l : *e.rotation_numbers) j["rotation_numbers"].push_back(integer_json(l));
  }
  j["traces"] = nlohmann::ordered_json::array();
  for (const auto& t : e.triple.traces) j["traces"].push_back(trace_json(t));
  j["epsilon"] = e.triple.epsilon;
  j["kappa"] = e.kappa;
  if (e.realization) {
    j["realization"] = {{"passed", e.realization->passed},
                        {"max_residual", e.realization->max_residual},
                        {"irreducibility_gap", e.realization->irreducibility_gap}};
  }
  return j;
}

std::string triple_text(const CharacterTriple& c) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 3; ++i) {
    if (i) os << ", ";
    os << c.traces[i].exact_string() << " ≈ " << c.traces[i].decimal_string();
  }
  os << ")  ε=" << (c.epsilon > 0 ? "+1" : "-1");
  return os.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

double AnalysisRecord::max_residual() const {
  double r = 0.0;
  for (const auto* list : {&sl2r, &su2}) {
    for (const auto& e : *list) {
      if (e.realization) r = std::max(r, e.realization->max_residual);
    }
  }
  return r;
}

SeifertInvariant parse_seifert_override(const std::string& text, const BrieskornParams& params) {
  std::vector<Integer> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.emplace_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidSeifert, "cannot parse '" + item + "' in --seifert " + text);
    }
  }
  if (values.size() != 4) throw Error(ErrorCode::InvalidSeifert, "--seifert expects b,b1,b2,b3");
  const auto m = params.multiplicities();
  SeifertInvariant s;
  s.b = values[0];
  for (int i = 0; i < 3; ++i) s.fibers[i] = SingularFiber{m[i], values[i + 1]};
  unimodular_sign(params, s);
  return s;
}

AnalysisRecord analyze(std::int64_t a1, std::int64_t a2, std::int64_t a3, const AnalysisOptions& options) {
  AnalysisRecord r;
  r.input = {a1, a2, a3};
  r.params = canonicalize_params(a1, a2, a3);
  const BrieskornParams& p = r.params;
  r.verified = options.verify;
  r.tol = options.tol;
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidSeifert, "tolerance must be positive");

  if (options.seifert_override) {
    r.seifert_source = "override";
    r.seifert_input = *options.seifert_override;
    unimodular_sign(p, *r.seifert_input);
    r.seifert = fold_central_exponent(*r.seifert_input);
  } else {
    r.seifert_source = "canonical";
    r.seifert = solve_seifert(p);
  }
  r.convention = unimodular_sign(p, r.seifert);
  const SeifertInvariant& sigma = r.seifert;

  // SL(2;R) classes through the euler classes of condition (a)
  std::set<std::array<TraceValue, 3>> sl2r_traces;
  for (auto& [eu, triple] : phi_map(p, sigma)) {
    ClassEntry e;
    e.triple = triple;
    e.kappa = kappa(triple);
    e.label = classify(triple);
    if (e.label != ClassLabel::SL2R) {
      fail(ErrorCode::InconsistentClassification, p, to_string(eu) + " gives a non-SL(2;R) triple");
    }
    if (!triple.central_consistent) {
      fail(ErrorCode::InconsistentClassification, p, to_string(eu) + " violates the fiber relations");
    }
    if (!reversed_trace_check(eu, triple, sigma)) {
      fail(ErrorCode::InconsistentClassification, p, "orientation reversal changes the traces of " + to_string(eu));
    }
    e.euler = eu;
    e.cover_order = h1_order(seifert_from_euler(eu, p));
    sl2r_traces.insert(triple.traces);
    r.sl2r.push_back(std::move(e));
  }

  for (auto& triple : enumerate_su2(p, sigma)) {
    ClassEntry e;
    e.label = ClassLabel::SU2;
    e.kappa = kappa(triple);
    e.rotation_numbers = rotation_numbers(triple, p);
    if (!triple.central_consistent) fail(ErrorCode::InconsistentClassification, p, "SU(2) triple violates relations");
    if (sl2r_traces.count(triple.traces)) {
      fail(ErrorCode::InconsistentClassification, p, to_string(triple) + " is both SU(2) and SL(2;R)");
    }
    e.triple = std::move(triple);
    r.su2.push_back(std::move(e));
  }

  r.counts.total = total_irreducible_count(p);
  r.counts.su2 = r.su2.size();
  r.counts.sl2r = r.sl2r.size();
  r.counts.casson_abs = r.counts.su2 / 2;
  r.counts.casson_sl2c = r.counts.total;
  check_count_report(r.counts);

  if (options.condition_b) {
    const auto e_list = enumerate_E(p);
    const auto b_list = enumerate_condition_b(p);
    if (e_list.size() != b_list.size()) fail(ErrorCode::CountMismatch, p, "|E| != |condition (b)|");
    std::vector<ReversalEntry> rev;
    for (const auto& eu : e_list) {
      ReversalEntry entry{eu, reverse_orientation(eu, p), reversed_trace_check(eu, sigma)};
      if (!std::binary_search(b_list.begin(), b_list.end(), entry.condition_b)) {
        fail(ErrorCode::CountMismatch, p, to_string(entry.condition_b) + " missing from condition (b) list");
      }
      rev.push_back(entry);
    }
    r.condition_b = std::move(rev);
  }

  if (options.verify) {
    for (auto* list : {&r.sl2r, &r.su2}) {
      for (auto& e : *list) e.realization = run_certification(e, sigma, options.tol, p);
    }
  }
  return r;
}

std::vector<BrieskornParams> census_params(std::int64_t max_a) {
  std::vector<BrieskornParams> out;
  for (std::int64_t x = 2; x * (x + 1) * (x + 2) <= max_a; ++x) {
    for (std::int64_t y = x + 1; x * y * (y + 1) <= max_a; ++y) {
      if (std::gcd(x, y) != 1) continue;
      for (std::int64_t z = y + 1; x * y * z <= max_a; ++z) {
        if (std::gcd(x, z) != 1 || std::gcd(y, z) != 1) continue;
        out.push_back(canonicalize_params(x, y, z));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BrieskornParams& l, const BrieskornParams& r) {
    return std::make_tuple(l.a1 * l.a2 * l.a3, l.a1, l.a2, l.a3) <
           std::make_tuple(r.a1 * r.a2 * r.a3, r.a1, r.a2, r.a3);
  });
  return out;
}

nlohmann::ordered_json to_json(const AnalysisRecord& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["params"] = {{"a1", r.params.a1},
                 {"a2", r.params.a2},
                 {"a3", r.params.a3},
                 {"a", integer_json(r.params.product())},
                 {"permutation", r.params.permutation}};
  nlohmann::ordered_json s;
  s["source"] = r.seifert_source;
  if (r.seifert_input) s["input"] = seifert_json(*r.seifert_input);
  s["used"] = seifert_json(r.seifert);
  s["convention"] = r.convention;
  s["presentation"] = presentation(r.seifert).to_string();
  j["seifert"] = s;
  j["counts"] = {{"total", integer_json(r.counts.total)},
                 {"su2", integer_json(r.counts.su2)},
                 {"sl2r", integer_json(r.counts.sl2r)},
                 {"casson_abs", integer_json(r.counts.casson_abs)},
                 {"casson_sl2c", integer_json(r.counts.casson_sl2c)}};
  j["sl2r_classes"] = nlohmann::ordered_json::array();
  for (const auto& e : r.sl2r) j["sl2r_classes"].push_back(entry_json(e));
  j["su2_classes"] = nlohmann::ordered_json::array();
  for (const auto& e : r.su2) j["su2_classes"].push_back(entry_json(e));
  if (r.condition_b) {
    j["condition_b"] = nlohmann::ordered_json::array();
    for (const auto& c : *r.condition_b) {
      j["condition_b"].push_back({{"condition_a", euler_json(c.condition_a)},
                                  {"condition_b", euler_json(c.condition_b)},
                                  {"traces_equal", c.traces_equal}});
    }
  }
  j["verified"] = r.verified;
  if (r.verified) {
    j["tol"] = r.tol;
    j["max_residual"] = r.max_residual();
  }
  return j;
}

std::string render_text(const AnalysisRecord& r) {
  const auto& p = r.params;
  std::ostringstream os;
  os << "Σ(" << p.a1 << "," << p.a2 << "," << p.a3 << ")  a = " << p.product();
  if (!p.identity_permutation()) os << "  (reordered from " << r.input[0] << "," << r.input[1] << "," << r.input[2] << ")";
  os << "\n";
  os << "Seifert data (" << r.seifert_source << "): " << to_string(r.seifert);
  if (r.seifert_input && !(*r.seifert_input == r.seifert)) os << "  [from " << to_string(*r.seifert_input) << "]";
  os << "  a(b+Σb_i/a_i) = " << (r.convention > 0 ? "+1" : "-1") << "\n";
  os << "π1: " << presentation(r.seifert).to_string() << "\n\n";

  os << "irreducible classes  total=" << r.counts.total << "  su2=" << r.counts.su2 << "  sl2r=" << r.counts.sl2r
     << "\n";
  os << "Casson |λ| = " << r.counts.casson_abs << "   λ_SL(2;C) = " << r.counts.casson_sl2c
     << "   λ_SL(2;C) - 2|λ| = " << r.counts.casson_sl2c - 2 * r.counts.casson_abs << "\n\n";

  if (r.sl2r.empty()) {
    os << "no irreducible SL(2;R) classes\n";
  } else {
    os << "SL(2;R) classes (euler class -> trace triple):\n";
    for (const auto& e : r.sl2r) {
      os << "  " << to_string(*e.euler) << "  |H1| = " << *e.cover_order << "  " << triple_text(e.triple)
         << "  κ=" << sci(e.kappa);
      if (e.realization) os << "  residual " << sci(e.realization->max_residual) << (e.realization->passed ? " ok" : " FAIL");
      os << "\n";
    }
  }
  os << "SU(2) classes (rotation numbers -> trace triple):\n";
  for (const auto& e : r.su2) {
    const auto& l = *e.rotation_numbers;
    os << "  [" << l[0] << "," << l[1] << "," << l[2] << "]  " << triple_text(e.triple) << "  κ=" << sci(e.kappa);
    if (e.realization) os << "  residual " << sci(e.realization->max_residual) << (e.realization->passed ? " ok" : " FAIL");
    os << "\n";
  }
  if (r.condition_b) {
    os << "orientation reversal (condition (a) -> condition (b)):\n";
    for (const auto& c : *r.condition_b) {
      os << "  " << to_string(c.condition_a) << " -> " << to_string(c.condition_b)
         << (c.traces_equal ? "  traces equal" : "  TRACES DIFFER") << "\n";
    }
  }
  if (r.verified) os << "\nverified: all relations within " << sci(r.tol) << ", max residual " << sci(r.max_residual()) << "\n";
  return os.str();
}

std::string csv_header() { return "a1,a2,a3,a,total,su2,sl2r,casson_abs,casson_sl2c,identity_ok,max_residual"; }

std::string csv_row(const AnalysisRecord& r) {
  const auto& c = r.counts;
  std::ostringstream os;
  os << r.params.a1 << "," << r.params.a2 << "," << r.params.a3 << "," << r.params.product() << "," << c.total << ","
     << c.su2 << "," << c.sl2r << "," << c.casson_abs << "," << c.casson_sl2c << ","
     << (c.casson_sl2c - 2 * c.casson_abs == c.sl2r ? "true" : "false") << ",";
  if (r.verified) os << sci(r.max_residual());
  return os.str();
}

}  // namespace brieskorn
