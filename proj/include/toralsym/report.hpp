#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "toralsym/dynamics.hpp"
#include "toralsym/invariants.hpp"
#include "toralsym/polyring.hpp"
#include "toralsym/reversibility.hpp"
#include "toralsym/symmetry.hpp"

namespace toralsym {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchema = "toralsym/1";

struct AnalyzeOptions {
  int torsion_radius = 3;
  int reversor_radius = 5;
  int orbit_depth = 0;  // 0 = omit the orbit section
  bool projective = false;
  bool allow_nonunimodular = false;
};

struct AnalysisReport {
  AnalyzeOptions options;
  IntMatrix input;
  Int determinant;
  bool unimodular = false;
  IntPolynomial char_poly;
  Factorization factorization;
  std::optional<InvariantFactors> invariants;
  bool cyclic = false, simple = false, semisimple = false;
  int commutant_rank = 0;
  std::optional<GroupStructure> group;
  std::optional<TorsionSearchResult> torsion;
  std::optional<ReversibilityReport> reversibility;
  std::vector<OrbitRow> orbits;
};

/// Full analysis pipeline. Non-unimodular input requires
/// allow_nonunimodular (then only the commutant and weak-reversibility
/// sections are produced).
AnalysisReport analyze(const IntMatrix& m, const AnalyzeOptions& opt);

nlohmann::ordered_json report_to_json(const AnalysisReport& rep);
std::string report_to_human(const AnalysisReport& rep);

enum class VerifyMode { symmetry, reversor, pgl_reversor, weak, affine };

struct VerifyResult {
  VerifyMode mode;
  bool ok = false;
  std::string detail;
  std::optional<IntMatrix> residual;
  std::optional<Int> candidate_det;
};

VerifyResult verify_candidate(const IntMatrix& m, const IntMatrix& g, VerifyMode mode,
                              const std::optional<TorusPoint>& translation);

nlohmann::ordered_json verify_to_json(const VerifyResult& r);
std::string verify_to_human(const VerifyResult& r);

nlohmann::ordered_json orbits_to_json(const IntMatrix& m, const std::vector<OrbitRow>& rows,
                                      int depth);
std::string orbits_to_human(const std::vector<OrbitRow>& rows, const IntMatrix& m, int depth);

/// Matrix input: either "n  a11 a12 ... ann" whitespace-separated, or JSON
/// {"n": ..., "rows": [[...], ...]} with integer or string entries.
IntMatrix parse_matrix(const std::string& content);

/// Rational vector "a/b,c,d/e" with exactly n components.
TorusPoint parse_translation(const std::string& text, int n);

nlohmann::ordered_json matrix_to_json(const IntMatrix& m);
nlohmann::ordered_json rat_matrix_to_json(const RatMatrix& m);

}  // namespace toralsym
