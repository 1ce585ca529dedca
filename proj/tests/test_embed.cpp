#include <doctest.h>

#include <random>
#include <set>

#include "tpp/constructions.hpp"
#include "tpp/embed.hpp"

using namespace tpp;

namespace {

ExactMatrix random_matrix(size_t r, size_t c, std::mt19937_64& rng,
                          int64_t lo = -100, int64_t hi = 100) {
  ExactMatrix m(r, c);
  for (size_t i = 0; i < r * c; ++i)
    m.data[i] = Coeff(int64_t(rng() % uint64_t(hi - lo + 1)) + lo);
  return m;
}

ExactMatrix identity_matrix(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("embed");

TEST_CASE("order-2 convolution formula") {
  Group c2 = Group::cyclic(2);
  auto x = ga_make(c2, {{{0}, 1}, {{1}, 2}});
  auto y = ga_make(c2, {{{0}, 3}, {{1}, 4}});
  auto xy = ga_multiply(c2, x, y);
  CHECK(xy.coefficient({0}) == 1 * 3 + 2 * 4);
  CHECK(xy.coefficient({1}) == 1 * 4 + 2 * 3);
}

TEST_CASE("identity basis element is a two-sided unit") {
  Group s4 = Group::symmetric(4);
  auto one = ga_make(s4, {{s4.identity(), 1}});
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<Elem, Coeff>> terms;
    for (int i = 0; i < 10; ++i)
      terms.push_back({s4.element_at(rng() % s4.order()),
                       Coeff(int64_t(rng() % 21) - 10)});
    auto x = ga_make(s4, std::move(terms));
    CHECK(ga_multiply(s4, one, x).terms == x.terms);
    CHECK(ga_multiply(s4, x, one).terms == x.terms);
  }
}

TEST_CASE("single-term products multiply in the group") {
  Group s3 = Group::symmetric(3);
  Elem t01 = {1, 0, 2}, t12 = {0, 2, 1};
  auto a = ga_make(s3, {{t01, 1}});
  auto b = ga_make(s3, {{t12, 1}});
  auto ab = ga_multiply(s3, a, b);
  CHECK(ab.support_size() == 1);
  CHECK(ab.coefficient(s3.mul(t01, t12)) == 1);
}

TEST_CASE("convolution is associative on random sparse elements") {
  std::mt19937_64 rng(41);
  for (const Group& g :
       {Group::symmetric(4), Group::dihedral(12), Group::frobenius80(),
        Group::symmetric(6)}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto rand_elem = [&] {
        std::vector<std::pair<Elem, Coeff>> terms;
        for (int i = 0; i < 15; ++i)
          terms.push_back({g.element_at(rng() % g.order()),
                           Coeff(int64_t(rng() % 21) - 10)});
        return ga_make(g, std::move(terms));
      };
      auto x = rand_elem(), y = rand_elem(), z = rand_elem();
      CHECK(ga_multiply(g, ga_multiply(g, x, y), z).terms ==
            ga_multiply(g, x, ga_multiply(g, y, z)).terms);
    }
  }
}

TEST_CASE("convolution guards") {
  Group c2 = Group::cyclic(2), c3 = Group::cyclic(3);
  auto x = ga_make(c2, {{{0}, 1}});
  auto y = ga_make(c3, {{{0}, 1}});
  CHECK_THROWS_AS(ga_multiply(c2, x, y), Error);  // group mismatch
  CHECK_THROWS_AS(ga_make(c2, {{{5}, 1}}), Error);
  auto big1 = ga_make(c2, {{{0}, 1}, {{1}, 1}});
  CHECK_THROWS_AS(ga_multiply(c2, big1, big1, /*work_cap=*/1), Error);
}

TEST_CASE("naive matmul basics") {
  ExactMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = 2;
  b.at(0, 0) = 3;
  CHECK(naive_matmul(a, b).at(0, 0) == 6);

  std::mt19937_64 rng(43);
  ExactMatrix m = random_matrix(3, 4, rng);
  CHECK(naive_matmul(identity_matrix(3), m) == m);

  ExactMatrix swap(2, 2), n = random_matrix(2, 2, rng);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  ExactMatrix swapped = naive_matmul(swap, n);
  CHECK(swapped.at(0, 0) == n.at(1, 0));
  CHECK(swapped.at(0, 1) == n.at(1, 1));
  CHECK(swapped.at(1, 0) == n.at(0, 0));

  CHECK_THROWS_AS(naive_matmul(random_matrix(2, 3, rng),
                               random_matrix(2, 3, rng)),
                  Error);
}

TEST_CASE("embedding a zero matrix gives the zero element") {
  RealizationCertificate cert = construct_triangle(2);
  Group g = cert.group();
  ExactMatrix za(2, 2), zb(2, 2);
  auto [abar, bbar] = embed_matrices(g, cert, za, zb);
  CHECK(abar.is_zero());
  CHECK(bbar.is_zero());
}

TEST_CASE("embedding the all-ones matrix has full distinct support") {
  RealizationCertificate cert = construct_triangle(2);  // S_3, <2,2,2>
  Group g = cert.group();
  ExactMatrix ones(2, 2);
  for (auto& c : ones.data) c = 1;
  auto [abar, bbar] = embed_matrices(g, cert, ones, ones);
  CHECK(abar.support_size() == 4);
  CHECK(bbar.support_size() == 4);
}

TEST_CASE("trivial certificate embeds a 1x1 product") {
  Group c2 = Group::cyclic(2);
  TppResult r = verify_tpp(c2, make_subset(c2, {{0}}), make_subset(c2, {{0}}),
                           make_subset(c2, {{0}}));
  REQUIRE(r.verified());
  ExactMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = 7;
  b.at(0, 0) = -3;
  ExactMatrix p = matmul_via_group(c2, *r.certificate, a, b);
  CHECK(p.at(0, 0) == -21);
}

TEST_CASE("2x2 product through S_3") {
  RealizationCertificate cert = construct_triangle(2);
  Group g = cert.group();
  ExactMatrix a(2, 2), b(2, 2);
  a.data = {Coeff(1), Coeff(2), Coeff(3), Coeff(4)};
  b.data = {Coeff(5), Coeff(6), Coeff(7), Coeff(8)};
  ExactMatrix p = matmul_via_group(g, cert, a, b);
  CHECK(p.data == std::vector<Coeff>{Coeff(19), Coeff(22), Coeff(43),
                                     Coeff(50)});
}

TEST_CASE("products through certificates match the oracle") {
  std::mt19937_64 rng(47);
  for (const RealizationCertificate& cert :
       {construct_sl2_parabolic(3), construct_frobenius80(),
        construct_dihedral5()}) {
    Group g = cert.group();
    const auto [n, m, p] = cert.shape;
    ExactMatrix id = identity_matrix(m);
    for (int trial = 0; trial < 100; ++trial) {
      ExactMatrix a = random_matrix(n, m, rng);
      ExactMatrix b = random_matrix(m, p, rng);
      CHECK(matmul_via_group(g, cert, a, b) == naive_matmul(a, b));
    }
    if (n == m) {
      ExactMatrix b = random_matrix(m, p, rng);
      CHECK(matmul_via_group(g, cert, id, b) == b);
    }
  }
}

TEST_CASE("embedding injectivity for verified certificates") {
  for (const RealizationCertificate& cert :
       {construct_triangle(2), construct_frobenius80(),
        construct_dihedral(7)}) {
    Group g = cert.group();
    auto distinct_products = [&](const SubsetSpec& rows,
                                 const SubsetSpec& cols) {
      std::set<Elem> seen;
      for (const Elem& s : rows.elems)
        for (const Elem& t : cols.elems) seen.insert(g.mul(g.inv(s), t));
      return seen.size() == rows.size() * cols.size();
    };
    CHECK(distinct_products(cert.subsets[0], cert.subsets[1]));
    CHECK(distinct_products(cert.subsets[1], cert.subsets[2]));
    CHECK(distinct_products(cert.subsets[0], cert.subsets[2]));
  }
}

TEST_CASE("unverified and colliding certificates are rejected") {
  // Forged certificate over C_4 whose subsets break the TPP.
  Group c4 = Group::cyclic(4);
  RealizationCertificate fake;
  fake.group_descriptor = c4.descriptor();
  fake.group_order = 4;
  fake.subsets = {make_subset(c4, {{0}, {1}}), make_subset(c4, {{0}, {1}}),
                  make_subset(c4, {{0}})};
  fake.shape = {2, 2, 1};
  fake.verified = false;

  ExactMatrix a(2, 2), b(2, 1);
  for (auto& c : a.data) c = 1;
  for (auto& c : b.data) c = 1;
  CHECK_THROWS_AS(matmul_via_group(c4, fake, a, b), Error);

  fake.verified = true;  // forged flag; the collision check still fires
  CHECK_THROWS_AS(matmul_via_group(c4, fake, a, b), Error);
}

TEST_CASE("dimension guards") {
  RealizationCertificate cert = construct_triangle(2);
  Group g = cert.group();
  ExactMatrix bad(3, 2), b(2, 2);
  CHECK_THROWS_AS(embed_matrices(g, cert, bad, b), Error);
  CHECK_THROWS_AS(embed_matrices(g, cert, b, bad), Error);
}

TEST_SUITE_END();
