#include <doctest.h>

#include <cmath>

#include "tpp/chardeg.hpp"
#include "tpp/constructions.hpp"

using namespace tpp;

namespace {

std::vector<uint32_t> multiset(const CharacterDegrees& d) { return d.degrees; }

}  // namespace

TEST_SUITE_BEGIN("chardeg");

TEST_CASE("sl2 degree tables") {
  CHECK(multiset(degrees_sl2(2)) == std::vector<uint32_t>{1, 1, 2});
  CHECK(multiset(degrees_sl2(3)) == std::vector<uint32_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(multiset(degrees_sl2(4)) == std::vector<uint32_t>{1, 3, 3, 4, 5});
  CHECK(multiset(degrees_sl2(5)) ==
        std::vector<uint32_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CharacterDegrees d = degrees_sl2(q);
    uint64_t sum2 = 0;
    for (uint32_t di : d.degrees) sum2 += uint64_t(di) * di;
    CHECK(sum2 == uint64_t(q) * q * q - q);
  }
}

TEST_CASE("abelian and dihedral tables") {
  CHECK(multiset(degrees_abelian(4)) == std::vector<uint32_t>{1, 1, 1, 1});
  CHECK(multiset(degrees_dihedral(4)) == std::vector<uint32_t>{1, 1, 1, 1, 2});
  CHECK(multiset(degrees_dihedral(8)) ==
        std::vector<uint32_t>{1, 1, 1, 1, 2, 2, 2});
  CHECK_THROWS_AS(degrees_dihedral(5), Error);  // odd m has no table here
}

TEST_CASE("numeric spectral method on tiny groups") {
  CHECK(multiset(degrees_numeric(Group::cyclic(2), 0)) ==
        std::vector<uint32_t>{1, 1});
  CHECK(multiset(degrees_numeric(Group::symmetric(3), 0)) ==
        std::vector<uint32_t>{1, 1, 2});
}

TEST_CASE("numeric matches the closed forms") {
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    Group g = Group::sl2(field_for_order(q));
    CHECK(multiset(degrees_numeric(g, 1)) == multiset(degrees_sl2(q)));
  }
  for (uint32_t m : {4u, 6u, 8u, 10u, 12u}) {
    CHECK(multiset(degrees_numeric(Group::dihedral(m), 1)) ==
          multiset(degrees_dihedral(m)));
  }
  for (const Group& g :
       {Group::cyclic(12), Group::cyclic(64),
        Group::direct_product({Group::cyclic(2), Group::cyclic(4)}),
        Group::power(Group::cyclic(2), 5)}) {
    CHECK(multiset(degrees_numeric(g, 1)) ==
          multiset(degrees_abelian(g.order())));
  }
}

TEST_CASE("order-80 group degrees, two independent routes") {
  Group g = Group::frobenius80();
  CharacterDegrees d = degrees_numeric(g, 0);
  CHECK(multiset(d) == std::vector<uint32_t>{1, 1, 1, 1, 1, 5, 5, 5});
  // Forced independently: 5 linear characters from the order-5 quotient,
  // and 5 + k*25 = 80 has the unique solution k = 3.
  size_t linear = 0;
  for (uint32_t di : d.degrees)
    if (di == 1) ++linear;
  CHECK(linear == 5);
}

TEST_CASE("degree count equals class count") {
  for (const Group& g :
       {Group::sl2(field_for_order(3)), Group::frobenius80(),
        Group::dihedral(4), Group::bilinear_default(3)}) {
    CHECK(degrees_numeric(g, 2).degrees.size() == conjugacy_classes(g).size());
  }
}

TEST_CASE("gamma") {
  CHECK(std::isinf(gamma_of(degrees_abelian(30))));
  Group frob = Group::frobenius80();
  CHECK(gamma_of(degrees_numeric(frob, 0)) ==
        doctest::Approx(std::log(80.0) / std::log(5.0)).epsilon(1e-12));
  // Dihedral with 8 rotations: order 16, top degree 2.
  CHECK(gamma_of(degrees_dihedral(8)) == doctest::Approx(4.0));
}

TEST_CASE("power sums") {
  for (uint32_t q : {2u, 3u, 5u}) {
    CharacterDegrees d = degrees_sl2(q);
    CHECK(double(power_sum(d, 2.0)) == doctest::Approx(double(d.order)));
  }
  CharacterDegrees frob = degrees_numeric(Group::frobenius80(), 0);
  CHECK(double(power_sum(frob, 3.0)) == doctest::Approx(380.0));
  CHECK(double(power_sum(degrees_sl2(3), 3.0)) == doctest::Approx(54.0));
  CHECK_THROWS_AS(power_sum(frob, -1.0), Error);
}

TEST_CASE("gamma is invariant under direct powers") {
  Group d4 = Group::dihedral(4);
  Group d4sq = Group::power(d4, 2);
  double g1 = gamma_of(degrees_numeric(d4, 3));
  double g2 = gamma_of(degrees_numeric(d4sq, 3));
  CHECK(g1 == doctest::Approx(g2).epsilon(1e-9));
  CHECK(g1 == doctest::Approx(3.0));
}

TEST_CASE("the multiset does not depend on the seed") {
  for (uint64_t seed : {1ull, 2ull, 99ull}) {
    CHECK(multiset(degrees_numeric(Group::symmetric(4), seed)) ==
          multiset(degrees_numeric(Group::symmetric(4), 0)));
    CHECK(multiset(degrees_numeric(Group::frobenius80(), seed)) ==
          multiset(degrees_numeric(Group::frobenius80(), 0)));
  }
}

TEST_CASE("wreath max degree and validation") {
  // gamma from the max degree coincides with the family alpha value.
  for (uint32_t n : {2u, 3u, 4u, 8u}) {
    CHECK(gamma_of(wreath_max_degree(n)) ==
          doctest::Approx(wreath_alpha_formula(n)).epsilon(1e-12));
  }
  CharacterDegrees bad;
  bad.order = 5;
  bad.degrees = {1, 1};
  CHECK_THROWS_AS(validate_degrees(bad), Error);  // sum of squares off
  bad.order = 8;
  bad.degrees = {2, 2};
  CHECK_THROWS_AS(validate_degrees(bad), Error);  // no trivial degree
  bad.order = 5;
  bad.degrees = {2, 1};
  CHECK_THROWS_AS(validate_degrees(bad), Error);  // not sorted
  CHECK_THROWS_AS(degrees_numeric(Group::wreath(12, 6), 0), Error);  // cap
}

TEST_SUITE_END();
