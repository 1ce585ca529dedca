#include <doctest.h>

#include <cmath>
#include <set>

#include "tpp/constructions.hpp"

using namespace tpp;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("cyclic axes") {
  RealizationCertificate c = construct_cyclic_axes(2, 3, 5);
  CHECK(c.shape == Shape{2, 3, 5});
  CHECK(c.group_order == 30);
  CHECK(c.alpha_upper == doctest::Approx(3.0).epsilon(1e-12));

  RealizationCertificate t = construct_cyclic_axes(1, 1, 7);
  CHECK(t.shape == Shape{1, 1, 7});
  CHECK(t.alpha_upper == doctest::Approx(3.0));

  RealizationCertificate e = construct_cyclic_axes(2, 2, 2);
  CHECK(e.group_order == 8);
  CHECK(e.alpha_upper == doctest::Approx(3.0));
}

TEST_CASE("triangle construction") {
  RealizationCertificate t2 = construct_triangle(2);
  CHECK(t2.group_descriptor == "sym:3");
  CHECK(t2.shape == Shape{2, 2, 2});

  RealizationCertificate t3 = construct_triangle(3);
  CHECK(t3.group_descriptor == "sym:6");
  CHECK(t3.shape == Shape{12, 12, 12});
  CHECK(t3.alpha_upper ==
        doctest::Approx(std::log(720.0) / std::log(12.0)).epsilon(1e-9));

  RealizationCertificate t4 = construct_triangle(4);
  CHECK(t4.group_descriptor == "sym:10");
  CHECK(t4.shape == Shape{288, 288, 288});  // 1!2!3!4!

  CHECK_THROWS_AS(construct_triangle(1), Error);
  CHECK_THROWS_AS(construct_triangle(6), Error);
}

TEST_CASE("sl2 parabolic") {
  RealizationCertificate q3 = construct_sl2_parabolic(3);
  CHECK(q3.group_order == 24);
  CHECK(q3.shape == Shape{3, 3, 3});

  RealizationCertificate q2 = construct_sl2_parabolic(2);
  CHECK(q2.group_order == 6);
  CHECK(q2.shape == Shape{2, 2, 2});

  RealizationCertificate q5 = construct_sl2_parabolic(5);
  CHECK(q5.group_order == 120);
  CHECK(q5.alpha_upper ==
        doctest::Approx(3.0 * std::log(120.0) / std::log(125.0))
            .epsilon(1e-9));

  CHECK_THROWS_AS(construct_sl2_parabolic(6), Error);
  CHECK_THROWS_AS(construct_sl2_parabolic(11), Error);
}

TEST_CASE("sl2 unitary") {
  RealizationCertificate q2 = construct_sl2_unitary(2);
  CHECK(q2.group_order == 60);
  CHECK(q2.shape == Shape{4, 4, 6});

  RealizationCertificate q3 = construct_sl2_unitary(3);
  CHECK(q3.group_order == 720);  // |SL2(F_9)| = 9^3 - 9
  CHECK(q3.shape == Shape{9, 9, 24});

  CHECK_THROWS_AS(construct_sl2_unitary(4), Error);
}

TEST_CASE("bilinear group construction") {
  RealizationCertificate b3 = construct_bilinear(3);
  CHECK(b3.group_order == 243);
  CHECK(b3.shape == Shape{9, 9, 9});
  CHECK(b3.alpha_upper == doctest::Approx(2.5).epsilon(1e-12));

  RealizationCertificate b5 = construct_bilinear(5);
  CHECK(b5.group_order == 3125);
  CHECK(b5.shape == Shape{25, 25, 25});
  CHECK(b5.alpha_upper == doctest::Approx(2.5).epsilon(1e-12));

  // A square w makes the form isotropic; rejected with a witness.
  CHECK_THROWS_WITH_AS(construct_bilinear(3, 1), doctest::Contains("witness"),
                       Error);
  CHECK_THROWS_AS(construct_bilinear(4), Error);  // even q
}

TEST_CASE("anisotropy agrees with the square test") {
  for (uint32_t q : {3u, 5u, 7u}) {
    FieldCtx f = field_for_order(q);
    for (uint32_t w = 0; w < q; ++w) {
      // diag(1, -w) is anisotropic iff z1^2 = w z2^2 has no nonzero
      // solution iff w is a non-square.
      bool anisotropic = true;
      for (uint32_t z1 = 0; z1 < q && anisotropic; ++z1)
        for (uint32_t z2 = 0; z2 < q; ++z2) {
          if (z1 == 0 && z2 == 0) continue;
          FieldElem lhs = f.mul({z1}, {z1});
          FieldElem rhs = f.mul({w}, f.mul({z2}, {z2}));
          if (lhs == rhs) {
            anisotropic = false;
            break;
          }
        }
      CHECK(anisotropic == !f.is_square(f.element(w)));
    }
  }
}

TEST_CASE("order-80 construction") {
  RealizationCertificate c = construct_frobenius80();
  CHECK(c.group_order == 80);
  CHECK(c.shape == Shape{5, 5, 8});
  CHECK(c.alpha_upper == doctest::Approx(2.4811).epsilon(1e-3));
  CHECK(c.alpha_upper ==
        doctest::Approx(3.0 * std::log(80.0) / std::log(200.0))
            .epsilon(1e-9));
  CHECK(c.subgroup_flags == std::array<bool, 3>{true, true, true});

  // The trace obstruction behind the proof: Tr(b - 1) = Tr(b) = 1 for the
  // four nontrivial elements of the order-5 unit subgroup.
  FieldCtx f = field_make(2, 4);
  Group c5 = Group::unit_subgroup(f, 5);
  uint32_t nontrivial = 0;
  c5.for_each([&](const Elem& e) {
    FieldElem v = f.from_coeffs(std::vector<uint32_t>(e.begin(), e.end()));
    if (v == f.one()) return;
    ++nontrivial;
    CHECK(f.trace_to_prime(v) == 1);
    CHECK(f.trace_to_prime(f.sub(v, f.one())) == 1);
  });
  CHECK(nontrivial == 4);
}

TEST_CASE("cocycle route reproduces the order-80 certificate") {
  FieldCtx f = field_make(2, 4);
  Group c5 = Group::unit_subgroup(f, 5);
  Group add = Group::field_additive(f);
  Group::Action act = [f](const Elem& h, const Elem& a) {
    FieldElem hv = f.from_coeffs(std::vector<uint32_t>(h.begin(), h.end()));
    FieldElem av = f.from_coeffs(std::vector<uint32_t>(a.begin(), a.end()));
    auto co = f.coeffs(f.mul(hv, av));
    return Elem(co.begin(), co.end());
  };
  auto theta = [f](const Elem& h) {
    FieldElem hv = f.from_coeffs(std::vector<uint32_t>(h.begin(), h.end()));
    auto co = f.coeffs(f.sub(hv, f.one()));
    return Elem(co.begin(), co.end());
  };
  std::vector<Elem> b;
  for (uint32_t x = 0; x < 16; ++x)
    if (f.trace_to_prime(FieldElem{x}) == 0) {
      auto co = f.coeffs(FieldElem{x});
      b.emplace_back(co.begin(), co.end());
    }
  RealizationCertificate via_cocycle =
      construct_cocycle(c5, add, act, theta, b, "frob80");
  RealizationCertificate direct = construct_frobenius80();
  for (int i = 0; i < 3; ++i)
    CHECK(via_cocycle.subsets[i].elems == direct.subsets[i].elems);

  // theta == 0 always lands in B (a subgroup contains 0), so the
  // hypothesis only holds for the trivial H; shape <1,1,1>.
  Group h1 = Group::cyclic(1);
  Group a = Group::cyclic(4);
  Group::Action trivial = [](const Elem&, const Elem& v) { return v; };
  auto zero = [&](const Elem&) { return a.identity(); };
  RealizationCertificate t = construct_cocycle(
      h1, a, trivial, zero, {a.identity()}, "prod(cyclic:1,cyclic:4)");
  CHECK(t.shape == Shape{1, 1, 1});

  // theta == 0 with a nontrivial H: the hypothesis fails with a witness,
  // whatever B is.
  Group h3 = Group::cyclic(3);
  CHECK_THROWS_WITH_AS(
      construct_cocycle(h3, a, trivial, zero, {a.identity()},
                        "prod(cyclic:3,cyclic:4)"),
      doctest::Contains("witness"), Error);
  CHECK_THROWS_WITH_AS(
      construct_cocycle(h3, a, trivial, zero, {{0}, {2}},
                        "prod(cyclic:3,cyclic:4)"),
      doctest::Contains("witness"), Error);
}

TEST_CASE("cocycle route on a sign action over F_9") {
  // C_2 = {1, -1} inside F_9^x acting multiplicatively on (F_9, +), with
  // the coboundary theta(h) = h - 1.  theta(-1) = -2 = 1 has trace 2, so
  // the trace-zero subgroup works as B and the shape is <2, 2, 3>.
  FieldCtx f = field_make(3, 2);
  Group c2 = Group::unit_subgroup(f, 2);
  Group add = Group::field_additive(f);
  Group::Action act = [f](const Elem& h, const Elem& a) {
    FieldElem hv = f.from_coeffs(std::vector<uint32_t>(h.begin(), h.end()));
    FieldElem av = f.from_coeffs(std::vector<uint32_t>(a.begin(), a.end()));
    auto co = f.coeffs(f.mul(hv, av));
    return Elem(co.begin(), co.end());
  };
  auto theta = [f](const Elem& h) {
    FieldElem hv = f.from_coeffs(std::vector<uint32_t>(h.begin(), h.end()));
    auto co = f.coeffs(f.sub(hv, f.one()));
    return Elem(co.begin(), co.end());
  };
  std::vector<Elem> b;
  for (uint32_t x = 0; x < 9; ++x)
    if (f.trace_to_prime(FieldElem{x}) == 0) {
      auto co = f.coeffs(FieldElem{x});
      b.emplace_back(co.begin(), co.end());
    }
  REQUIRE(b.size() == 3);
  RealizationCertificate c =
      construct_cocycle(c2, add, act, theta, b, "sd-c2-f9");
  CHECK(c.shape == Shape{2, 2, 3});
  CHECK(c.group_order == 18);
}

TEST_CASE("wreath constructions and formula") {
  RealizationCertificate w2 = construct_wreath(2);
  CHECK(w2.group_order == 32);
  CHECK(w2.shape == Shape{2, 2, 2});

  RealizationCertificate w3 = construct_wreath(3);
  CHECK(w3.group_order == 1296);
  CHECK(w3.shape == Shape{6, 6, 6});

  // Formula agrees with the certificate alpha where both exist.
  for (uint32_t n : {2u, 3u}) {
    RealizationCertificate c = construct_wreath(n);
    CHECK(c.alpha_upper ==
          doctest::Approx(wreath_alpha_formula(n)).epsilon(1e-9));
  }

  // The formula value crosses 3 exactly where (2n)^n < (n!)^2 starts.
  CHECK(wreath_alpha_formula(9) > 3.0);
  CHECK(wreath_alpha_formula(10) < 3.0);
  CHECK_THROWS_AS(construct_wreath(1), Error);
  CHECK_THROWS_AS(construct_wreath(7), Error);
}

TEST_CASE("dihedral family") {
  RealizationCertificate m9 = construct_dihedral(9);
  CHECK(m9.shape == Shape{2, 2, 6});
  CHECK(m9.alpha_upper ==
        doctest::Approx(3.0 * std::log(18.0) / std::log(24.0)).epsilon(1e-9));
  CHECK(m9.alpha_upper < 3.0);

  RealizationCertificate m4 = construct_dihedral(4);
  CHECK(m4.shape == Shape{2, 2, 2});

  for (uint32_t m = 3; m <= 30; ++m) {
    RealizationCertificate c = construct_dihedral(m);
    CHECK(c.shape == Shape{2, 2, 2 * (m / 3)});
    // The third subset is a subgroup exactly when 3 divides m, except that
    // for m in {4, 5} it degenerates to the two-element subgroup {1, yx}.
    const bool expect_subgroup = (m % 3 == 0) || m < 6;
    CHECK(c.subgroup_flags[2] == expect_subgroup);
    if (m >= 9) CHECK(c.alpha_upper < 3.0);
  }

  RealizationCertificate d5 = construct_dihedral5();
  CHECK(d5.shape == Shape{2, 2, 3});
  CHECK(d5.group_order == 10);
}

TEST_CASE("balanced vector sets") {
  auto s43 = sperner_set(4, 3);
  CHECK(s43.size() == 6);  // permutations of (0,1,2)
  std::set<std::vector<uint32_t>> asSet(s43.begin(), s43.end());
  CHECK(asSet.count({0, 1, 2}) == 1);
  CHECK(asSet.count({2, 1, 0}) == 1);

  auto s21 = sperner_set(2, 1);
  CHECK(s21 == std::vector<std::vector<uint32_t>>{{0}});

  auto s46 = sperner_set(4, 6);
  CHECK(s46.size() == 90);  // 6!/(2!)^3

  CHECK_THROWS_AS(sperner_set(4, 4), Error);  // 3 does not divide 4
  // Capacity bound |S| <= (m-1)^k.
  CHECK(s43.size() <= 27);
  CHECK(s46.size() <= 729);
}

TEST_CASE("dihedral power with balanced third set") {
  RealizationCertificate k3 = construct_sperner_power(4, 3);
  CHECK(k3.group_order == 512);
  CHECK(k3.shape == Shape{8, 8, 6});

  RealizationCertificate k6 = construct_sperner_power(4, 6);
  CHECK(k6.group_order == 262144);
  CHECK(k6.shape == Shape{64, 64, 90});
  CHECK(k6.alpha_upper ==
        doctest::Approx(3.0 * std::log(262144.0) /
                        std::log(64.0 * 64.0 * 90.0))
            .epsilon(1e-9));
  CHECK(k6.alpha_upper < 3.0);
}

TEST_CASE("power bound values decrease toward the limit") {
  // alpha(D_4^k) upper bounds from the balanced sets approach
  // 3 log 8 / log 12 from above.
  auto bound = [](uint32_t k) {
    auto s = sperner_set(4, k);
    return 3.0 * (k * std::log(8.0)) /
           (k * std::log(4.0) + std::log(double(s.size())));
  };
  const double limit = 3.0 * std::log(8.0) / std::log(12.0);
  double b3 = bound(3), b6 = bound(6), b9 = bound(9);
  CHECK(b3 > b6);
  CHECK(b6 > b9);
  CHECK(b9 > limit);
  CHECK(limit == doctest::Approx(2.5105).epsilon(1e-4));
}

TEST_CASE("every catalog entry builds and verifies") {
  for (const CatalogEntry& entry : construction_catalog()) {
    RealizationCertificate cert = entry.build({});
    CHECK(cert.verified);
    CHECK(cert.shape.nmp() > 0);
  }
}

TEST_SUITE_END();
