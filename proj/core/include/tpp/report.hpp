#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpp/bounds.hpp"
#include "tpp/certificate.hpp"
#include "tpp/chardeg.hpp"
#include "tpp/embed.hpp"

namespace tpp {

/// Certificate file schema ("schema": 1): group descriptor, element
/// encodings per subset, shape, alpha, verified flag, subgroup flags, note.
std::string certificate_to_json(const RealizationCertificate& cert,
                                int indent = 2);
RealizationCertificate certificate_from_json(const std::string& text);
void write_certificate(const std::string& path,
                       const RealizationCertificate& cert);
RealizationCertificate read_certificate(const std::string& path);

/// CSV with one row per line, integer entries.
ExactMatrix matrix_from_csv(const std::string& text);
std::string matrix_to_csv(const ExactMatrix& m);

/// One line of the end-to-end pipeline: construction -> degrees -> bounds.
struct ReportRow {
  std::string family;
  std::string params;
  std::optional<RealizationCertificate> cert;
  double alpha = 3.0;
  std::string degrees_method;  // "formula" | "numeric" | "max-only" | "none"
  std::optional<CharacterDegrees> degrees;
  double gamma = 0.0;  // infinity for abelian; 0 = unknown
  bool gamma_known = false;
  std::optional<Question1Report> q1;
  std::optional<OmegaBound> omega;
  std::optional<double> corollary;  // empty = inapplicable or unknown
  uint64_t seed = 0;
  double verify_ms = 0.0;  // human output only; excluded from JSON
  std::string error;       // nonempty if the row failed
};

/// Runs every catalog construction, re-verifies, computes degrees (closed
/// form where available, the spectral method otherwise, within caps) and
/// evaluates the bound pipeline per row.  Row failures are recorded inline
/// and never abort the report.  Deterministic given seed.
std::vector<ReportRow> full_report(uint64_t seed,
                                   const VerifyOptions& opt = {});

/// Machine output.  Excludes timings so reports are byte-identical across
/// runs with the same seed and flags.
std::string report_to_json(const std::vector<ReportRow>& rows);
/// Human-readable table (includes verification timings).
std::string report_to_text(const std::vector<ReportRow>& rows);

}  // namespace tpp
