#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tpp/certificate.hpp"
#include "tpp/chardeg.hpp"

namespace tpp {

/// Outcome of solving |G|^(w/alpha) <= sum d_i^w for the matrix
/// multiplication exponent w over [2,3].  Either the inequality already
/// holds at w = 3 (it then gives nothing: "trivial"), or the crossing point
/// w* with w <= w* is reported.
struct OmegaBound {
  uint64_t order = 1;
  double alpha = 3.0;
  std::vector<uint32_t> degrees;
  bool trivial = true;
  double omega_star = 3.0;  // meaningful iff !trivial
  double tol = 1e-9;
};

/// Solves the inequality.  alpha must be at least 2; values in [2, 2+eps)
/// only arise from synthetic inputs (every realization has alpha > 2), and
/// alpha = 2 yields omega_star = 2.
OmegaBound omega_bound_solve(uint64_t order, double alpha,
                             const CharacterDegrees& deg, double tol = 1e-9);

/// alpha * (gamma - 2) / (gamma - alpha) when alpha < gamma, otherwise
/// nothing (the reduction then contains an instance as large as the
/// original).  gamma may be infinite (abelian), giving alpha back.
std::optional<double> corollary_bound(double alpha, double gamma);

/// The strict inequality nmp > sum d_i^3 for a certificate; satisfied means
/// the certificate's group would give a nontrivial omega bound.
struct Question1Report {
  uint64_t nmp = 0;
  uint64_t sum_d3 = 0;
  bool satisfied = false;
};
Question1Report question1_check(const RealizationCertificate& cert,
                                const CharacterDegrees& deg);

/// Diagnostic ratios (alpha_i - 2)/(gamma_i - 2) for a family; a sequence
/// tending to 0 would witness the hypothesis under which the exponent is 2.
/// Rejects gamma <= 2 (impossible); gamma may be infinite.
std::vector<double> race_report(const std::vector<double>& alphas,
                                const std::vector<double>& gammas);

}  // namespace tpp
