#pragma once

#include "brieskorn/character.hpp"
#include "brieskorn/euler.hpp"
#include "brieskorn/realize.hpp"
#include "brieskorn/seifert.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

struct AnalysisOptions {
  /// Seifert data in canonical fiber order; validated and normalized to b = 0.
  std::optional<SeifertInvariant> seifert_override;
  bool verify = false;
  double tol = kRelationTolerance;
  bool condition_b = false;
};

struct RealizationSummary {
  bool passed = false;
  double max_residual = 0.0;
  double irreducibility_gap = 0.0;
};

struct ClassEntry {
  ClassLabel label = ClassLabel::SU2;
  CharacterTriple triple;
  double kappa = 0.0;
  std::optional<EulerClass> euler;                      // SL(2;R) classes
  std::optional<Integer> cover_order;                   // a|e(M)| of the Seifert space of euler
  std::optional<std::array<Integer, 3>> rotation_numbers;  // SU(2) classes
  std::optional<RealizationSummary> realization;
};

struct ReversalEntry {
  EulerClass condition_a;
  EulerClass condition_b;
  bool traces_equal = false;
};

struct AnalysisRecord {
  std::array<std::int64_t, 3> input{};
  BrieskornParams params;
  std::string seifert_source;  // "canonical" or "override"
  std::optional<SeifertInvariant> seifert_input;
  SeifertInvariant seifert;    // data actually used, b = 0
  int convention = 1;          // a(b + sum b_i/a_i)
  CountReport counts;
  std::vector<ClassEntry> sl2r;
  std::vector<ClassEntry> su2;
  std::optional<std::vector<ReversalEntry>> condition_b;
  bool verified = false;
  double tol = kRelationTolerance;

  double max_residual() const;
};

/// Full pipeline for one manifold. Throws Error on invalid input or on any
/// violated invariant; the returned record has passed every check.
AnalysisRecord analyze(std::int64_t a1, std::int64_t a2, std::int64_t a3, const AnalysisOptions& options = {});

/// Canonical pairwise-coprime triples with a1 a2 a3 <= max_a, ordered by the
/// product and then lexicographically.
std::vector<BrieskornParams> census_params(std::int64_t max_a);

/// Parses "b,b1,b2,b3" against the canonical multiplicities.
SeifertInvariant parse_seifert_override(const std::string& text, const BrieskornParams& params);

nlohmann::ordered_json to_json(const AnalysisRecord& r);
std::string render_text(const AnalysisRecord& r);
std::string csv_header();
std::string csv_row(const AnalysisRecord& r);

}  // namespace brieskorn
