#include <doctest.h>

#include <cmath>

#include "tpp/bounds.hpp"
#include "tpp/constructions.hpp"

using namespace tpp;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("order-80 certificate gives a trivial outcome") {
  RealizationCertificate cert = construct_frobenius80();
  CharacterDegrees deg = degrees_numeric(cert.group(), 0);
  OmegaBound ob = omega_bound_solve(80, cert.alpha_upper, deg);
  CHECK(ob.trivial);
  // The pretest quantity: |G|^(3/alpha) = nmp = 200 <= 380 = sum d^3.
  CHECK(std::pow(80.0, 3.0 / cert.alpha_upper) == doctest::Approx(200.0));
  CHECK(double(power_sum(deg, 3.0)) == doctest::Approx(380.0));
}

TEST_CASE("synthetic alpha = 2 pins omega at 2") {
  std::vector<CharacterDegrees> multisets = {
      degrees_sl2(3), degrees_sl2(5), degrees_dihedral(6),
      degrees_numeric(Group::frobenius80(), 0)};
  for (const CharacterDegrees& deg : multisets) {
    OmegaBound ob = omega_bound_solve(deg.order, 2.0, deg);
    REQUIRE_FALSE(ob.trivial);
    CHECK(ob.omega_star == doctest::Approx(2.0).epsilon(1e-6));
  }
}

TEST_CASE("abelian degrees are always trivial at alpha 3") {
  for (uint64_t n : {4ull, 30ull, 64ull}) {
    OmegaBound ob = omega_bound_solve(n, 3.0, degrees_abelian(n));
    CHECK(ob.trivial);
  }
}

TEST_CASE("pretest and bisection agree") {
  CharacterDegrees deg = degrees_sl2(5);  // |G| = 120
  for (double alpha = 2.0; alpha <= 3.0; alpha += 0.01) {
    OmegaBound ob = omega_bound_solve(120, alpha, deg);
    const bool pretest =
        std::pow(120.0, 3.0 / alpha) > double(power_sum(deg, 3.0));
    CHECK(ob.trivial == !pretest);
    if (!ob.trivial) {
      // At the crossing the two sides agree to tolerance.
      long double lhs = (ob.omega_star / alpha) * std::log(120.0);
      long double rhs = logl(power_sum(deg, ob.omega_star));
      CHECK(double(std::abs(lhs - rhs)) < 1e-6);
      CHECK(ob.omega_star >= 2.0);
      CHECK(ob.omega_star < 3.0);
    }
  }
}

TEST_CASE("reported bound never decreases in alpha") {
  CharacterDegrees deg = degrees_sl2(5);
  double prev = 2.0;
  for (double alpha = 2.0; alpha <= 2.4; alpha += 0.02) {
    OmegaBound ob = omega_bound_solve(120, alpha, deg);
    if (ob.trivial) break;
    CHECK(ob.omega_star >= prev - 1e-9);
    prev = ob.omega_star;
  }
}

TEST_CASE("alpha at or above gamma is always trivial") {
  CharacterDegrees deg = degrees_sl2(3);
  const double gamma = gamma_of(deg);
  for (double alpha : {gamma, gamma + 0.05, 3.0}) {
    OmegaBound ob = omega_bound_solve(24, alpha, deg);
    CHECK(ob.trivial);
  }
}

TEST_CASE("solver guards") {
  CharacterDegrees deg = degrees_sl2(3);
  CHECK_THROWS_AS(omega_bound_solve(24, 1.9, deg), Error);
  CHECK_THROWS_AS(omega_bound_solve(25, 2.5, deg), Error);  // order mismatch
}

TEST_CASE("corollary bound") {
  // (gamma-2)/(gamma-2) = 1 at alpha = 2.
  for (double gamma : {2.5, 3.0, 10.0}) {
    auto b = corollary_bound(2.0, gamma);
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(2.0).epsilon(1e-12));
  }
  // The order-80 group: applicable but useless (>= 3).
  RealizationCertificate cert = construct_frobenius80();
  double alpha = cert.alpha_upper;
  double gamma = gamma_of(degrees_numeric(cert.group(), 0));
  auto b = corollary_bound(alpha, gamma);
  REQUIRE(b.has_value());
  CHECK(*b ==
        doctest::Approx(alpha * (gamma - 2.0) / (gamma - alpha)).epsilon(1e-9));
  CHECK(*b >= 3.0);
  // alpha >= gamma: inapplicable.
  CHECK_FALSE(corollary_bound(2.9, 2.9).has_value());
  CHECK_FALSE(corollary_bound(3.0, 2.5).has_value());
  // Infinite gamma (abelian) returns alpha.
  auto inf = corollary_bound(3.0, std::numeric_limits<double>::infinity());
  REQUIRE(inf.has_value());
  CHECK(*inf == doctest::Approx(3.0));
}

TEST_CASE("question 1 reports") {
  RealizationCertificate frob = construct_frobenius80();
  Question1Report q80 =
      question1_check(frob, degrees_numeric(frob.group(), 0));
  CHECK(q80.nmp == 200);
  CHECK(q80.sum_d3 == 380);
  CHECK_FALSE(q80.satisfied);

  RealizationCertificate sl23 = construct_sl2_parabolic(3);
  Question1Report q24 = question1_check(sl23, degrees_sl2(3));
  CHECK(q24.nmp == 27);
  CHECK(q24.sum_d3 == 54);
  CHECK_FALSE(q24.satisfied);

  // Trivial certificate on an abelian group: equality, not strict.
  Group c6 = Group::cyclic(6);
  std::vector<Elem> all;
  c6.for_each([&](const Elem& e) { all.push_back(e); });
  TppResult r = verify_tpp(c6, make_subset(c6, {{0}}), make_subset(c6, {{0}}),
                           make_subset(c6, all));
  REQUIRE(r.verified());
  Question1Report qt = question1_check(*r.certificate, degrees_abelian(6));
  CHECK(qt.nmp == 6);
  CHECK(qt.sum_d3 == 6);
  CHECK_FALSE(qt.satisfied);

  CHECK_THROWS_AS(question1_check(frob, degrees_abelian(6)), Error);
}

TEST_CASE("race ratios") {
  // The wreath family has alpha formula equal to gamma: ratio exactly 1.
  std::vector<double> alphas, gammas;
  for (uint32_t n = 2; n <= 8; ++n) {
    alphas.push_back(wreath_alpha_formula(n));
    gammas.push_back(gamma_of(wreath_max_degree(n)));
  }
  for (double r : race_report(alphas, gammas)) CHECK(r == 1.0);

  // Synthetic family with alpha - 2 = o(gamma - 2); the ratio log(n)/n
  // decreases from n = 3 on and tends to zero.
  std::vector<double> sa, sg;
  for (int n = 3; n <= 60; ++n) {
    sa.push_back(2.0 + 1.0 / n);
    sg.push_back(2.0 + 1.0 / std::log(double(n)));
  }
  auto ratios = race_report(sa, sg);
  for (size_t i = 1; i < ratios.size(); ++i) CHECK(ratios[i] < ratios[i - 1]);
  CHECK(ratios.back() < 0.1);

  // Singleton: the order-80 group.
  RealizationCertificate frob = construct_frobenius80();
  double a = frob.alpha_upper;
  double g = gamma_of(degrees_numeric(frob.group(), 0));
  auto one = race_report({a}, {g});
  CHECK(one[0] == doctest::Approx((a - 2.0) / (g - 2.0)).epsilon(1e-12));
  CHECK(one[0] == doctest::Approx(0.666).epsilon(2e-3));

  CHECK_THROWS_AS(race_report({2.5}, {2.0}), Error);
  CHECK_THROWS_AS(race_report({2.5, 2.5}, {2.5}), Error);
}

TEST_SUITE_END();
