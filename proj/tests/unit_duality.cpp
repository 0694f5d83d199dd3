#include "doctest.h"
#include "tate/duality.hpp"
#include "tate/named.hpp"

using namespace tate;

TEST_CASE("dual operations: C2 and D8 values") {
  TateRing R(group_catalog("C2"), -4, 3);
  CLift C(R);
  auto D = dual_q(C, 1, 0);
  CHECK(D.m == Mat::from_rows({{1}}));
  CHECK(dual_q_to_unit(C, R.basis(1, 0)) == 1);
  CHECK(R.pairing(R.unit(), R.canonical_minus_one()) == 1);

  TateRing RD(group_catalog("D8"), -5, 4);
  CLift CD(RD);
  CHECK(dual_q(CD, 1, 0).m.is_zero());
  auto g = d8_generators(RD);
  REQUIRE(g.c_pinned);
  CHECK(dual_q(CD, 2, 0).apply(g.c) == RD.unit());
  CHECK(dual_q_to_unit(CD, RD.cup(g.a, g.a)) == 0);
  CHECK(dual_q_to_unit(CD, RD.cup(g.b, g.b)) == 0);
}

TEST_CASE("dual operations are adjoint to Q under the pairing") {
  for (const char* name : {"C2", "C4", "V4", "D8", "Q8"}) {
    TateRing R(group_catalog(name), -5, 3);
    CLift C(R);
    for (int j = 0; j <= 2; ++j)
      for (int i = 0; i + j <= 3 && 1 + i + j <= 5; ++i)
        CHECK_MESSAGE(adjointness_holds(C, dual_q(C, i, j)), name << " i=" << i << " j=" << j);
  }
}

TEST_CASE("Q_i is additive on negative degrees") {
  for (const char* name : {"V4", "D8"}) {
    TateRing R(group_catalog(name), -5, 2);
    CLift C(R);
    for (int n = -3; n <= -1; ++n)
      for (int a = 0; a < R.dim(n); ++a)
        for (int b = a + 1; b < R.dim(n); ++b)
          for (int s = 0; n - s >= -5; ++s) {
            auto x = R.basis(n, a), y = R.basis(n, b);
            CHECK(C.Q(x + y, s) == C.Q(x, s) + C.Q(y, s));
          }
  }
}

TEST_CASE("cross products and the norm into C2 x K") {
  auto Z = cyclic_group(2);
  TateRing RZ(Z, -1, 4), RK(Z, -1, 4), RG(direct_product(Z, Z), -1, 4);
  CrossProduct X(RZ, RK, RG, 4);
  auto z = RZ.basis(1, 0), x = RK.basis(1, 0);
  // cross products are multiplicative and restrict correctly to the factors
  CHECK(RG.cup(X.cross(z, RK.unit()), X.cross(RZ.unit(), x)) == X.cross(z, x));
  CHECK(X.cross(RZ.unit(), RK.unit()) == RG.unit());
  auto e2 = factor_inclusion(RG.group(), Z, Z, 1), e1 = factor_inclusion(RG.group(), Z, Z, 0);
  CHECK(RG.restrict_class(X.cross(RZ.unit(), RK.cup(x, x)), RK, e2) == RK.cup(x, x));
  CHECK(RG.restrict_class(X.cross(RZ.unit(), x), RZ, e1).is_zero());
  CHECK(RG.restrict_class(X.cross(z, RK.unit()), RZ, e1) == z);
  CHECK(!X.cross(z, x).is_zero());

  CLift CK(RK);
  DirectFactorNorm N(RZ, RK, CK, RG, 4);
  CHECK(N.norm(RK.unit()) == RG.unit());
  CHECK(N.norm(x) == X.cross(RZ.unit(), RK.cup(x, x)) + X.cross(z, x));
  CHECK(N.norm(RK.cup(x, x)) == RG.cup(N.norm(x), N.norm(x)));
}

TEST_CASE("the norm identity Q_i^*(x) = Q_ni^*(x^n)") {
  for (const char* name : {"C2", "C4", "V4"}) {
    auto rep = check_dual_power_identity(name, 3, 4);
    for (auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("direct factor norm commutes with dual operations") {
  for (const char* name : {"C2", "V4"}) {
    auto rep = check_factor_norm(name, 3);
    for (auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
  }
}

TEST_CASE("norm compatibility fails for V4 inside D8") {
  auto rep = v4_d8_norm_obstruction();
  CHECK(rep.q1_dual_zero_on_v4);
  CHECK(rep.q2_dual_xy_is_one);
  CHECK(rep.kernel_q2_dim == 2);
  CHECK(rep.kernel_is_a2_b2);
  CHECK(rep.q4_dual_zero_on_products);
  CHECK(rep.contradiction());
}

TEST_CASE("nonvanishing of Q_n on the canonical generator") {
  TateRing R2(group_catalog("C2"), -7, 1);
  CLift C2(R2);
  for (int n = 1; n <= 6; ++n) {
    auto r = nontriviality_check(C2, n);
    CHECK(r.nonzero);
    CHECK(r.consistent());
    CHECK(r.predicted == (n % 2 == 0));
  }
  TateRing R4(group_catalog("C4"), -5, 1);
  CLift C4(R4);
  auto r4 = nontriviality_check(C4, 4);
  CHECK(r4.predicted);
  CHECK(r4.nonzero);
  TateRing RV(group_catalog("V4"), -5, 1);
  CLift CV(RV);
  CHECK(!nontriviality_check(CV, 1).nonzero);
  CHECK(nontriviality_check(CV, 4).nonzero);
  CHECK(nontriviality_check(CV, 4).predicted);
}
