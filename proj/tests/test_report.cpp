#include <doctest.h>

#include <cmath>

#include "tpp/constructions.hpp"
#include "tpp/report.hpp"

using namespace tpp;

TEST_SUITE_BEGIN("report");

TEST_CASE("certificate JSON round trip re-verifies") {
  for (const RealizationCertificate& cert :
       {construct_frobenius80(), construct_dihedral(7),
        construct_sl2_unitary(2)}) {
    std::string text = certificate_to_json(cert);
    RealizationCertificate back = certificate_from_json(text);
    CHECK(back.group_descriptor == cert.group_descriptor);
    CHECK(back.shape == cert.shape);
    CHECK(back.subgroup_flags == cert.subgroup_flags);
    TppResult rv = reverify(back);
    REQUIRE(rv.verified());
    // Byte-identical after the round trip.
    CHECK(certificate_to_json(*rv.certificate) == text);
  }
}

TEST_CASE("tampered certificates fail re-verification") {
  RealizationCertificate cert = construct_frobenius80();
  Group g = cert.group();
  // Swap one trace-zero element of the third subgroup for a trace-one one.
  RealizationCertificate bad = cert;
  std::vector<Elem> elems = bad.subsets[2].elems;
  Elem substitute = g.identity();
  substitute.back() ^= 1;  // flip a coefficient of the additive part
  REQUIRE(g.contains(substitute));
  bool replaced = false;
  for (Elem& e : elems) {
    if (e != substitute && !replaced && e != g.identity()) {
      e = substitute;
      replaced = true;
    }
  }
  REQUIRE(replaced);
  bad.subsets[2] = make_subset(g, elems, false);
  bad.subgroup_flags[2] = false;
  TppResult rv = reverify(bad);
  CHECK_FALSE(rv.verified());
  CHECK(rv.witness.has_value());
}

TEST_CASE("certificate JSON rejects corrupted input") {
  RealizationCertificate cert = construct_dihedral5();
  std::string text = certificate_to_json(cert);
  CHECK_THROWS_AS(certificate_from_json("{}"), Error);
  // Damage the shape.
  std::string bad = text;
  auto pos = bad.find("\"shape\"");
  REQUIRE(pos != std::string::npos);
  bad.replace(bad.find('2', pos), 1, "4");
  CHECK_THROWS_AS(certificate_from_json(bad), Error);
}

TEST_CASE("matrix CSV round trip") {
  ExactMatrix m(2, 3);
  m.data = {Coeff(1), Coeff(-2), Coeff(3), Coeff(400000000000),
            Coeff(5), Coeff(-6)};
  ExactMatrix back = matrix_from_csv(matrix_to_csv(m));
  CHECK(back == m);
  CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), Error);
  CHECK_THROWS_AS(matrix_from_csv(""), Error);
}

TEST_CASE("full report rows carry the expected pipeline values") {
  auto rows = full_report(0);
  REQUIRE(!rows.empty());
  for (const ReportRow& row : rows) {
    INFO(row.family << " " << row.params);
    CHECK(row.error.empty());
  }

  auto find = [&](const std::string& fam,
                  const std::string& params) -> const ReportRow& {
    for (const ReportRow& row : rows)
      if (row.family == fam && row.params == params) return row;
    throw Error("row not found: " + fam);
  };

  const ReportRow& frob = find("frob80", "");
  CHECK(frob.alpha == doctest::Approx(2.4811).epsilon(1e-3));
  CHECK(frob.gamma ==
        doctest::Approx(std::log(80.0) / std::log(5.0)).epsilon(1e-9));
  REQUIRE(frob.q1.has_value());
  CHECK_FALSE(frob.q1->satisfied);
  REQUIRE(frob.omega.has_value());
  CHECK(frob.omega->trivial);

  // alpha = gamma for the parabolic SL2(F_3) row: corollary inapplicable.
  const ReportRow& sl23 = find("sl2-parabolic", "3");
  CHECK(sl23.alpha == doctest::Approx(sl23.gamma).epsilon(1e-9));
  CHECK_FALSE(sl23.corollary.has_value());

  // Abelian row: gamma infinite, the corollary limit returns alpha.
  const ReportRow& axes = find("cyclic-axes", "2,3,5");
  CHECK(std::isinf(axes.gamma));
  REQUIRE(axes.corollary.has_value());
  CHECK(*axes.corollary == doctest::Approx(axes.alpha));

  // Question 1 is false on every row that has degrees.
  for (const ReportRow& row : rows)
    if (row.q1) CHECK_FALSE(row.q1->satisfied);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  auto a = full_report(0);
  auto b = full_report(0);
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_text(a).size() > 0);
}

TEST_SUITE_END();
