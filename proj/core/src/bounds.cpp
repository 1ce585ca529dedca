#include "tpp/bounds.hpp"

#include <cmath>

namespace tpp {

OmegaBound omega_bound_solve(uint64_t order, double alpha,
                             const CharacterDegrees& deg, double tol) {
  if (alpha < 2.0)
    throw Error("omega: alpha below 2 signals a corrupted certificate");
  if (deg.order != order)
    throw Error("omega: degrees belong to a different order");
  validate_degrees(deg);
  if (tol <= 0) throw Error("omega: tolerance must be positive");

  const long double log_order = logl((long double)order);
  auto f = [&](long double w) -> long double {
    return logl(power_sum(deg, double(w))) - (w / (long double)alpha) * log_order;
  };

  OmegaBound out;
  out.order = order;
  out.alpha = alpha;
  out.degrees = deg.degrees;
  out.tol = tol;

  // The w = 3 pretest: if the inequality holds there, the convex right side
  // dominates on all of [2,3] past the crossing and the theorem says
  // nothing below 3.
  if (f(3.0L) >= 0.0L) {
    out.trivial = true;
    return out;
  }
  // f(2) = (1 - 2/alpha) log|G| >= 0, f(3) < 0: bisect the sign change.
  long double lo = 2.0L, hi = 3.0L;
  if (f(lo) < 0.0L)
    throw Error("omega: f(2) negative; degree data inconsistent");
  while (hi - lo > tol) {
    long double mid = (lo + hi) / 2;
    if (f(mid) >= 0.0L)
      lo = mid;
    else
      hi = mid;
  }
  out.trivial = false;
  out.omega_star = double(lo);
  return out;
}

std::optional<double> corollary_bound(double alpha, double gamma) {
  if (!(alpha < gamma)) return std::nullopt;
  if (std::isinf(gamma)) return alpha;  // limit of (gamma-2)/(gamma-alpha)
  return alpha * (gamma - 2.0) / (gamma - alpha);
}

Question1Report question1_check(const RealizationCertificate& cert,
                                const CharacterDegrees& deg) {
  if (!cert.verified) throw Error("question1: certificate is not verified");
  if (deg.order != cert.group_order)
    throw Error("question1: degrees belong to a different group order");
  validate_degrees(deg);
  Question1Report r;
  r.nmp = cert.shape.nmp();
  r.sum_d3 = 0;
  for (uint32_t d : deg.degrees) r.sum_d3 += uint64_t(d) * d * d;
  r.satisfied = r.nmp > r.sum_d3;
  return r;
}

std::vector<double> race_report(const std::vector<double>& alphas,
                                const std::vector<double>& gammas) {
  if (alphas.size() != gammas.size())
    throw Error("race: sequences must be paired");
  std::vector<double> ratios;
  ratios.reserve(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(gammas[i] > 2.0))
      throw Error("race: gamma <= 2 is impossible for a finite group");
    ratios.push_back((alphas[i] - 2.0) / (gammas[i] - 2.0));
  }
  return ratios;
}

}  // namespace tpp
