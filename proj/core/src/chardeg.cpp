#include "tpp/chardeg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>

namespace tpp {

void validate_degrees(const CharacterDegrees& d) {
  if (d.degrees.empty()) throw Error("degrees: empty multiset");
  if (!std::is_sorted(d.degrees.begin(), d.degrees.end()))
    throw Error("degrees: multiset must be sorted");
  uint64_t sum2 = 0;
  for (uint32_t di : d.degrees) {
    if (di == 0) throw Error("degrees: zero degree");
    sum2 += uint64_t(di) * di;
  }
  if (sum2 != d.order)
    throw Error("degrees: sum d_i^2 != |G| (" + std::to_string(sum2) + " vs " +
                std::to_string(d.order) + ")");
  if (d.degrees.front() != 1) throw Error("degrees: no trivial degree 1");
  if (d.order > 1) {
    uint64_t dm = d.d_max();
    if (dm * dm > d.order - 1)
      throw Error("degrees: d_max exceeds sqrt(|G|-1)");
  }
}

CharacterDegrees degrees_abelian(uint64_t order) {
  if (order == 0) throw Error("degrees: order must be positive");
  CharacterDegrees d;
  d.order = order;
  d.degrees.assign(order, 1);
  validate_degrees(d);
  return d;
}

CharacterDegrees degrees_sl2(uint32_t q) {
  if (q < 2) throw Error("degrees: q must be at least 2");
  CharacterDegrees d;
  d.order = uint64_t(q) * q * q - q;
  auto push = [&](uint32_t deg, uint32_t mult) {
    for (uint32_t i = 0; i < mult; ++i) d.degrees.push_back(deg);
  };
  push(1, 1);
  push(q, 1);
  if (q % 2 == 1) {
    push(q + 1, (q - 3) / 2);
    push(q - 1, (q - 1) / 2);
    push((q + 1) / 2, 2);
    push((q - 1) / 2, 2);
  } else {
    push(q + 1, (q - 2) / 2);
    push(q - 1, q / 2);
  }
  std::sort(d.degrees.begin(), d.degrees.end());
  validate_degrees(d);
  return d;
}

CharacterDegrees degrees_dihedral(uint32_t m) {
  if (m < 2 || m % 2 != 0)
    throw Error("degrees: dihedral formula covers even m >= 2 only");
  CharacterDegrees d;
  d.order = 2ull * m;
  d.degrees.assign(4, 1);
  d.degrees.insert(d.degrees.end(), m / 2 - 1, 2);
  validate_degrees(d);
  return d;
}

MaxDegreeOnly wreath_max_degree(uint32_t n) {
  if (n == 0) throw Error("degrees: wreath index must be positive");
  double log_fact = std::lgamma(double(n) + 1.0);
  return MaxDegreeOnly{log_fact + n * std::log(2.0 * n), log_fact};
}

namespace {

bool is_perfect_square(size_t n, uint32_t* root) {
  uint32_t r = uint32_t(std::lround(std::sqrt(double(n))));
  for (uint32_t c : {r, r > 0 ? r - 1 : r, r + 1}) {
    if (uint64_t(c) * c == n) {
      *root = c;
      return true;
    }
  }
  return false;
}

}  // namespace

CharacterDegrees degrees_numeric(const Group& g, uint64_t seed) {
  if (g.order() > 2000)
    throw Error("degrees: numeric method capped at order 2000");
  const auto classes = conjugacy_classes(g);
  DenseTable tbl(g);
  const uint32_t n = tbl.size();

  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return double(rng() >> 11) * 0x1.0p-53 + 0.5; };

  std::string last_failure;
  for (int attempt = 0; attempt < 5; ++attempt) {
    // z = sum over classes of c_C * (class sum) is exactly central, so it
    // acts as a scalar on each irreducible block of the regular
    // representation: eigenvalue multiplicities are the d_i^2.
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
    for (const auto& cls : classes) {
      double c = uniform();
      for (uint32_t gi : cls)
        for (uint32_t h = 0; h < n; ++h)
          mat(tbl.mul(uint16_t(gi), uint16_t(h)), h) += c;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(mat, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
      last_failure = "eigensolver did not converge";
      continue;
    }
    std::vector<std::complex<double>> vals(n);
    for (uint32_t i = 0; i < n; ++i) vals[i] = es.eigenvalues()(i);
    std::sort(vals.begin(), vals.end(), [](auto a, auto b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });

    double scale = 1.0;
    for (const auto& v : vals) scale = std::max(scale, std::abs(v));

    // Single-linkage clustering in the plane.  High-multiplicity
    // eigenvalues come back from the nonsymmetric solver with scatter well
    // above machine precision, so the merge radius walks a ladder from
    // tight to loose; a rung is accepted only if the clusters pass the
    // full validation (count = #classes, perfect squares, sum = |G|).
    for (double rel : {1e-12, 1e-10, 1e-8, 1e-6, 1e-5, 1e-4, 1e-3}) {
      const double tol = rel * scale;
      std::vector<uint32_t> parent(n);
      for (uint32_t i = 0; i < n; ++i) parent[i] = i;
      std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
          if (vals[j].real() - vals[i].real() > tol) break;
          if (std::abs(vals[j] - vals[i]) <= tol)
            parent[find(j)] = find(i);
        }
      }
      std::vector<size_t> cluster_sizes;
      {
        std::vector<size_t> count(n, 0);
        for (uint32_t i = 0; i < n; ++i) ++count[find(i)];
        for (uint32_t i = 0; i < n; ++i)
          if (count[i]) cluster_sizes.push_back(count[i]);
      }
      if (cluster_sizes.size() != classes.size()) {
        last_failure = "cluster count disagrees with conjugacy class count";
        continue;
      }
      CharacterDegrees d;
      d.order = g.order();
      d.source = CharacterDegrees::Source::kNumeric;
      bool ok = true;
      for (size_t s : cluster_sizes) {
        uint32_t root = 0;
        if (!is_perfect_square(s, &root)) {
          ok = false;
          last_failure = "cluster size " + std::to_string(s) +
                         " is not a perfect square";
          break;
        }
        d.degrees.push_back(root);
      }
      if (!ok) continue;
      std::sort(d.degrees.begin(), d.degrees.end());
      validate_degrees(d);
      return d;
    }
  }
  throw Error("degrees: spectral method failed after 5 attempts (" +
              last_failure + ")");
}

double gamma_of(const CharacterDegrees& d) {
  if (d.d_max() <= 1) return std::numeric_limits<double>::infinity();
  return std::log(double(d.order)) / std::log(double(d.d_max()));
}

double gamma_of(const MaxDegreeOnly& d) {
  if (d.log_dmax <= 0.0) return std::numeric_limits<double>::infinity();
  return d.log_order / d.log_dmax;
}

long double power_sum(const CharacterDegrees& d, double k) {
  if (k < 0) throw Error("degrees: power sum exponent must be nonnegative");
  long double s = 0;
  for (uint32_t di : d.degrees) s += powl((long double)di, (long double)k);
  return s;
}

}  // namespace tpp
