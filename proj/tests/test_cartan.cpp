#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellq/cartan.hpp"

using namespace ellq;

TEST_CASE("B3 table row") {
  CartanDatum d = build_cartan(LieType::B, 3);
  CHECK(d.eta.twice == -5);  // eta = -5/2
  CHECK(d.g == 5);
  CHECK(d.t == 1);
  CHECK(d.d[0] == Half{2});
  CHECK(d.d[1] == Half{2});
  CHECK(d.d[2] == Half{1});  // d_l = 1/2
}

TEST_CASE("A1 basics") {
  CartanDatum d = build_cartan('A', 1);
  CHECK(d.a[0][0] == 2);
  CHECK(d.b[0][0] == Half{4});  // b_11 = 2
  CHECK(d.g == 2);
  CHECK(d.eta.twice == -2);  // eta = -1
  CHECK(d.root_pairing(0, 0) == 2);
}

TEST_CASE("rank restrictions and unknown types") {
  CHECK_THROWS_WITH_AS(build_cartan(LieType::D, 2), doctest::Contains("RankTooSmall"), err);
  CHECK_THROWS_AS(build_cartan(LieType::B, 1), err);
  CHECK_THROWS_AS(build_cartan('E', 6), err);
}

TEST_CASE("Gram matrix reproduces b_ij for all supported ranks") {
  for (char T : {'A', 'B', 'C', 'D'}) {
    int lo = T == 'A' ? 1 : T == 'D' ? 3 : 2;
    for (int l = lo; l <= 6; ++l) {
      CartanDatum d = build_cartan(T, l);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
          CHECK(d.root_pairing(i, j) == d.b[static_cast<size_t>(i)][static_cast<size_t>(j)].as_mpq());
          CHECK(d.b[static_cast<size_t>(i)][static_cast<size_t>(j)].twice ==
                d.b[static_cast<size_t>(j)][static_cast<size_t>(i)].twice);
        }
      // <alpha_i, h_j> = a_ji
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          CHECK(d.pair_hvee(d.simple_roots[static_cast<size_t>(i)], j) ==
                d.a[static_cast<size_t>(j)][static_cast<size_t>(i)]);
      // <bar-Lambda_i, h_j> = delta_ij
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          CHECK(d.pair_hvee(d.fundamental_weights[static_cast<size_t>(i)], j) ==
                (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("weight_pairing examples") {
  CartanDatum a1 = build_cartan('A', 1);
  CHECK(weight_pairing(a1, a1.simple_roots[0], a1.simple_roots[0]) == 2);
  CartanDatum b3 = build_cartan('B', 3);
  CHECK(weight_pairing(b3, b3.simple_roots[2], b3.simple_roots[2]) == 1);
  CartanDatum d4 = build_cartan('D', 4);
  CHECK(weight_pairing(d4, d4.fundamental_weights[0], d4.simple_roots[0]) == 1);
  CHECK_THROWS_AS(weight_pairing(d4, QVec{1, 0}, d4.simple_roots[0]), err);
}

TEST_CASE("cocycle commutator exponents") {
  CartanDatum a2 = build_cartan('A', 2);
  // eps(a1,a2)/eps(a2,a1) = (-1)^{(a1,a2)} = -1
  std::vector<int> e1{1, 0}, e2{0, 1};
  CHECK(a2.cocycle_sign(e1, e2) * a2.cocycle_sign(e2, e1) == -1);
  std::vector<int> zero{0, 0};
  CHECK(a2.cocycle_sign(zero, zero) == 1);
  // B2 short root: exponent (a2,a2) + (a2,a2)^2 = 2, commutator +1
  CartanDatum b2 = build_cartan('B', 2);
  CHECK(b2.cocycle_sign(e2, e2) * b2.cocycle_sign(e2, e2) == 1);
}

TEST_CASE("cocycle bimultiplicativity on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (char T : {'A', 'B', 'D'}) {
    CartanDatum d = build_cartan(T, 3);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> a(3), ap(3), b(3);
      for (int i = 0; i < 3; ++i) {
        a[static_cast<size_t>(i)] = c(rng);
        ap[static_cast<size_t>(i)] = c(rng);
        b[static_cast<size_t>(i)] = c(rng);
      }
      std::vector<int> sum(3);
      for (int i = 0; i < 3; ++i) sum[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + ap[static_cast<size_t>(i)];
      CHECK(d.cocycle_sign(sum, b) == d.cocycle_sign(a, b) * d.cocycle_sign(ap, b));
      CHECK(d.cocycle_sign(b, sum) == d.cocycle_sign(b, a) * d.cocycle_sign(b, ap));
    }
  }
}

TEST_CASE("B commutator rule on the full lattice") {
  CartanDatum b2 = build_cartan('B', 2);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> a{c(rng), c(rng)}, b{c(rng), c(rng)};
    QVec ae = b2.root_to_eps(a), be = b2.root_to_eps(b);
    mpq_class ab = CartanDatum::dot(ae, be);
    mpq_class aa = CartanDatum::dot(ae, ae), bb = CartanDatum::dot(be, be);
    mpq_class expo = ab + aa * bb;
    int want = (expo.get_num() % 2 == 0) ? 1 : -1;
    CHECK(b2.cocycle_sign(a, b) * b2.cocycle_sign(b, a) == want);
  }
}
