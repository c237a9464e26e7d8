#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellq/boson.hpp"

using namespace ellq;

namespace {
ModeScalar qq() {
  return ModeScalar(Frac(Poly::variable(kV, 2) - Poly::variable(kV, -2)));
}
ModeScalar qqm() {
  return ModeScalar(Frac(Poly::variable(kX, 2) - Poly::variable(kX, -2)));
}

std::vector<CartanDatum> grid(int max_rank) {
  std::vector<CartanDatum> out;
  for (char T : {'A', 'B', 'C', 'D'}) {
    int lo = T == 'A' ? 1 : T == 'D' ? 3 : 2;
    for (int l = lo; l <= max_rank; ++l) out.push_back(build_cartan(T, l));
  }
  return out;
}
}  // namespace

TEST_CASE("pair: A1 example and same-sector vanishing") {
  CartanDatum d = build_cartan('A', 1);
  BosonVector a = simple_root_boson(d, 1, 1);
  ModeScalar got = pair(a, a.negate_mode());
  ModeScalar want =
      bracket_mode(Half::of_int(2)) * bracket_mode(Half::of_int(1)) * ModeScalar::invm() * dressing(1);
  CHECK(got == want);
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("pair: A2 off-diagonal uses b_12 = -1") {
  CartanDatum d = build_cartan('A', 2);
  BosonVector a1 = simple_root_boson(d, 1, 1), a2 = simple_root_boson(d, 1, 2);
  ModeScalar got = pair(a1, a2.negate_mode());
  ModeScalar want = -(bracket_mode(Half::of_int(1)) * bracket_mode(Half::of_int(1)) *
                      ModeScalar::invm() * dressing(1));
  CHECK(got == want);
}

TEST_CASE("prime variant commutators") {
  for (int level : {1, 2}) {
    CartanDatum d = build_cartan('B', 2);
    BosonVector a1 = simple_root_boson(d, level, 1);
    BosonVector p1 = prime_variant(a1);
    // [a'_i, a'_j] = [b_ij m][cm]/m * (1-p*^m)/(1-p^m) q^{cm}
    ModeScalar got = pair(p1, prime_variant(a1.negate_mode()));
    ModeScalar want = bracket_mode(d.b[0][0]) * bracket_mode(Half::of_int(level)) *
                      ModeScalar::invm() * dressing(level).inv();
    CHECK(got == want);
    // [a_i, a'_j] = [b_ij m][cm]/m (no dressing)
    ModeScalar mixed = pair(a1, prime_variant(a1.negate_mode()));
    CHECK(mixed == bracket_mode(d.b[0][0]) * bracket_mode(Half::of_int(level)) * ModeScalar::invm());
    CHECK(prime_variant(p1) == a1.scaled(dressing(level).inv() * dressing(level).inv()));
  }
}

TEST_CASE("defining relation of the A^j bosons, closed == inverse") {
  for (const CartanDatum& d : grid(4)) {
    for (int level : {1, 2, 3}) {
      auto closed = fundamental_bosons_closed(d, level);
      auto inverse = fundamental_bosons_inverse(d, level);
      REQUIRE(closed.size() == inverse.size());
      ModeScalar want_diag =
          -(bracket_mode(Half::of_int(level)) * ModeScalar::invm() * dressing(level));
      for (int j = 1; j <= d.rank; ++j) {
        CHECK(closed[static_cast<size_t>(j - 1)] == inverse[static_cast<size_t>(j - 1)]);
        for (int i = 1; i <= d.rank; ++i) {
          ModeScalar got = pair(simple_root_boson(d, level, i),
                                closed[static_cast<size_t>(j - 1)].negate_mode());
          if (i == j)
            CHECK(got == want_diag);
          else
            CHECK(got.is_zero());
        }
      }
    }
  }
}

TEST_CASE("A1 closed form is alpha/[2m]") {
  CartanDatum d = build_cartan('A', 1);
  auto A = fundamental_bosons_closed(d, 1);
  BosonVector want = simple_root_boson(d, 1, 1).scaled(bracket_mode(Half::of_int(2)).inv());
  CHECK(A[0] == want);
}

TEST_CASE("orthonormal bosons split A^j") {
  for (const CartanDatum& d : grid(4)) {
    auto A = fundamental_bosons_closed(d, 2);
    OrthoFamily Ep = orthonormal_bosons(d, 2, +1);
    OrthoFamily Em = orthonormal_bosons(d, 2, -1);
    for (int j = 1; j <= d.rank; ++j) {
      BosonVector sum = Ep.E[static_cast<size_t>(j - 1)] + Em.E[static_cast<size_t>(j - 1)];
      if (d.type == LieType::C && j == d.rank) {
        // A^l = (E^{+l}+E^{-l})/(q^m+q^-m)
        ModeScalar ch = ModeScalar::qm_power(Half::of_int(1)) + ModeScalar::qm_power(Half::of_int(-1));
        CHECK(A[static_cast<size_t>(j - 1)].scaled(ch) == sum);
      } else {
        CHECK(A[static_cast<size_t>(j - 1)] == sum);
      }
    }
  }
}

TEST_CASE("A1 orthonormal boson closed form") {
  CartanDatum d = build_cartan('A', 1);
  OrthoFamily Ep = orthonormal_bosons(d, 1, +1);
  OrthoFamily Em = orthonormal_bosons(d, 1, -1);
  // E^{+-1} = +- q^{+-m}/((q^m-q^-m)[2m]) alpha
  ModeScalar f = (qqm() * bracket_mode(Half::of_int(2))).inv();
  CHECK(Ep.E[0] == simple_root_boson(d, 1, 1).scaled(ModeScalar::qm_power(Half::of_int(1)) * f));
  CHECK(Em.E[0] ==
        simple_root_boson(d, 1, 1).scaled(-(ModeScalar::qm_power(Half::of_int(-1)) * f)));
}

TEST_CASE("round trip: alphaAA rows recover the simple roots") {
  for (const CartanDatum& d : grid(4)) {
    for (int level : {1, 2}) {
      for (int j = 1; j <= d.rank; ++j) {
        for (int s : {+1, -1}) {
          if (d.type == LieType::B && j == d.rank && s == -1) continue;  // single fixed row
          if (d.type == LieType::C && j == d.rank && s == -1) continue;
          BosonVector got = simple_root_from_orthonormal(d, level, j, s);
          CHECK(got == simple_root_boson(d, level, j));
        }
      }
      CHECK_THROWS_AS(simple_root_from_orthonormal(d, level, d.rank + 1, +1), err);
    }
  }
}

TEST_CASE("cEA recursions match the closed families") {
  for (const CartanDatum& d : grid(4)) {
    auto A = fundamental_bosons_closed(d, 1);
    for (int s : {+1, -1}) {
      OrthoFamily fam = orthonormal_bosons(d, 1, s);
      int jmax = d.type == LieType::A ? d.rank + 1 : d.rank;
      for (int j = 1; j <= jmax; ++j) {
        bool has_row = true;
        BosonVector want;
        try {
          want = cEA_rhs(d, 1, j, s, A);
        } catch (const err&) {
          has_row = false;  // D-type j = l-1, l use their own rows; all covered
        }
        if (has_row) CHECK(fam.E[static_cast<size_t>(j - 1)] == want);
      }
    }
  }
}

TEST_CASE("A-type sum rule") {
  for (int l = 1; l <= 4; ++l) {
    CartanDatum d = build_cartan('A', l);
    for (int s : {+1, -1}) {
      OrthoFamily fam = orthonormal_bosons(d, 1, s);
      BosonVector acc(d, 1);
      for (int j = 1; j <= l + 1; ++j)
        acc = acc + fam.E[static_cast<size_t>(j - 1)].scaled(
                        ModeScalar::qm_power(Half::of_int(s * (j - 1))));
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("B-type E0") {
  CartanDatum d = build_cartan('B', 2);
  OrthoFamily fam = orthonormal_bosons(d, 1, +1);
  REQUIRE(fam.E0.has_value());
  // [m/2]/[m] (E^{+l}+E^{-l})
  OrthoFamily neg = orthonormal_bosons(d, 1, -1);
  BosonVector want = (fam.E[1] + neg.E[1])
                         .scaled(bracket_mode(Half{1}) / bracket_mode(Half::of_int(1)));
  CHECK(*fam.E0 == want);
}

TEST_CASE("antisymmetry of pair under mode relabel") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  CartanDatum d = build_cartan('D', 3);
  for (int trial = 0; trial < 20; ++trial) {
    BosonVector u(d, 1), w(d, 1);
    for (int i = 0; i < 3; ++i) {
      u.coeffs[static_cast<size_t>(i)] = ModeScalar::constant(coef(rng));
      w.coeffs[static_cast<size_t>(i)] = ModeScalar::constant(coef(rng));
    }
    ModeScalar lhs = pair(u, w.negate_mode()).negate_mode();
    ModeScalar rhs = -pair(w, u.negate_mode());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("commutator table") {
  // The A^j recursions and [alpha,E] rows hold on the nose.  The theorem's
  // mixed-sign rows are checked verbatim; divergences get a per-mode
  // diagnosis (see the acceptance suite for the full grid).
  CartanDatum d = build_cartan('A', 1);
  VerificationReport rep = check_commutator_table(d, 1);
  int alphaE_fail = 0, cEA_fail = 0;
  for (const auto& e : rep.entries) {
    if (e.id == "alphaE" && e.status == CheckResult::Status::FAIL) ++alphaE_fail;
    if (e.id == "cEA" && e.status == CheckResult::Status::FAIL) ++cEA_fail;
  }
  CHECK(alphaE_fail == 0);
  CHECK(cEA_fail == 0);
}
