// brieskorn: SL(2;C) character varieties of Brieskorn homology spheres.
//
//   brieskorn analyze 2 3 7 --verify --seifert 0,1,-2,1
//   brieskorn census 210 --format csv
//
// Exit codes: 0 success, 1 a checked invariant failed, 2 invalid input.

#include "brieskorn/analysis.hpp"
#include "brieskorn/error.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace brieskorn;

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

std::string render(const AnalysisRecord& r, Format f) {
  switch (f) {
    case Format::Json: return to_json(r).dump() + "\n";
    case Format::Csv: return csv_header() + "\n" + csv_row(r) + "\n";
    case Format::Text: break;
  }
  return render_text(r);
}

int report_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return e.is_input_error() ? kExitInvalid : kExitFailure;
}

struct AnalyzeArgs {
  std::int64_t a1 = 0, a2 = 0, a3 = 0;
  std::string seifert;
  bool verify = false;
  double tol = kRelationTolerance;
  std::string format = "text";
  bool condition_b = false;
  std::string output;
};

int run_analyze(const AnalyzeArgs& args) {
  try {
    AnalysisOptions opts;
    opts.verify = args.verify;
    opts.tol = args.tol;
    opts.condition_b = args.condition_b;
    if (!args.seifert.empty()) {
      opts.seifert_override = parse_seifert_override(args.seifert, canonicalize_params(args.a1, args.a2, args.a3));
    }
    const AnalysisRecord record = analyze(args.a1, args.a2, args.a3, opts);
    const std::string text = render(record, parse_format(args.format));
    if (args.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(args.output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open " << args.output << "\n";
        return kExitInvalid;
      }
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

struct CensusArgs {
  std::int64_t max_a = 0;
  bool verify = false;
  double tol = kRelationTolerance;
  std::string format = "text";
  bool condition_b = false;
};

int run_census(const CensusArgs& args) {
  if (args.max_a < 30) {
    std::cerr << "error: census bound must be at least 30\n";
    return kExitInvalid;
  }
  const Format format = parse_format(args.format);
  AnalysisOptions opts;
  opts.verify = args.verify;
  opts.tol = args.tol;
  opts.condition_b = args.condition_b;

  if (format == Format::Csv) std::cout << csv_header() << "\n";
  if (format == Format::Text) {
    std::cout << "      a   a1   a2   a3  total   su2  sl2r  |λ|  λ_SL2C" << (args.verify ? "  max_residual" : "") << "\n";
  }

  std::size_t rows = 0;
  Integer total = 0, su2 = 0, sl2r = 0;
  double worst = 0.0;
  for (const auto& p : census_params(args.max_a)) {
    AnalysisRecord r;
    try {
      r = analyze(p.a1, p.a2, p.a3, opts);
    } catch (const std::exception& e) {
      std::cout.flush();
      std::cerr << "error: census aborted at Σ(" << p.a1 << "," << p.a2 << "," << p.a3 << "): " << e.what() << "\n";
      return kExitFailure;
    }
    ++rows;
    total += r.counts.total;
    su2 += r.counts.su2;
    sl2r += r.counts.sl2r;
    worst = std::max(worst, r.max_residual());

    switch (format) {
      case Format::Json: std::cout << to_json(r).dump() << "\n"; break;
      case Format::Csv: std::cout << csv_row(r) << "\n"; break;
      case Format::Text: {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%7s %4lld %4lld %4lld %6s %5s %5s %4s %7s", p.product().str().c_str(),
                      static_cast<long long>(p.a1), static_cast<long long>(p.a2), static_cast<long long>(p.a3),
                      r.counts.total.str().c_str(), r.counts.su2.str().c_str(), r.counts.sl2r.str().c_str(),
                      r.counts.casson_abs.str().c_str(), r.counts.casson_sl2c.str().c_str());
        std::cout << buf;
        if (args.verify) {
          std::snprintf(buf, sizeof buf, "  %.3e", r.max_residual());
          std::cout << buf;
        }
        std::cout << "\n";
        break;
      }
    }
  }

  // every row already satisfied λ_SL2C - 2|λ| = |R_SL2R|; the sums must as well
  const bool identity = total - su2 == sl2r;
  std::ostream& summary = format == Format::Text ? std::cout : std::cerr;
  summary << "census: " << rows << " manifolds, Σtotal=" << total << " Σsu2=" << su2 << " Σsl2r=" << sl2r
          << "  λ_SL2C - 2|λ| = |R_SL2R|: " << (identity ? "holds" : "FAILS");
  if (args.verify) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", worst);
    summary << "  max residual " << buf;
  }
  summary << "\n";
  return identity ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible SL(2;C) classes of Brieskorn homology spheres"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify the irreducible classes of one Σ(a1,a2,a3)");
  analyze_cmd->add_option("a1", analyze_args.a1)->required();
  analyze_cmd->add_option("a2", analyze_args.a2)->required();
  analyze_cmd->add_option("a3", analyze_args.a3)->required();
  analyze_cmd->add_option("--seifert", analyze_args.seifert,
                          "Seifert data b,b1,b2,b3 in canonical fiber order; a(b+Σb_i/a_i) must be ±1");
  analyze_cmd->add_flag("--verify", analyze_args.verify, "Realize every class by matrices and check the relations");
  analyze_cmd->add_option("--tol", analyze_args.tol, "Relation residual tolerance")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--format", analyze_args.format)->check(CLI::IsMember({"text", "json", "csv"}));
  analyze_cmd->add_flag("--condition-b", analyze_args.condition_b, "Also list the orientation-reversed classes");
  analyze_cmd->add_option("-o,--output", analyze_args.output, "Write the report to a file");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "Sweep all Σ(a1,a2,a3) with a1 a2 a3 <= MAX_A");
  census_cmd->add_option("max_a", census_args.max_a)->required();
  census_cmd->add_flag("--verify", census_args.verify);
  census_cmd->add_option("--tol", census_args.tol)->check(CLI::PositiveNumber);
  census_cmd->add_option("--format", census_args.format)->check(CLI::IsMember({"text", "json", "csv"}));
  census_cmd->add_flag("--condition-b", census_args.condition_b);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (*analyze_cmd) return run_analyze(analyze_args);
  return run_census(census_args);
}
