#include "doctest.h"
#include "oracles.hpp"
#include "tate/named.hpp"
#include "tate/power_ops.hpp"

using namespace tate;

TEST_CASE("ring kinds") {
  CHECK(ring_kind(*group_catalog("C2"), 2) == "C2");
  CHECK(ring_kind(*group_catalog("C4"), 2) == "cyclic");
  CHECK(ring_kind(*group_catalog("C3"), 3) == "cyclic");
  CHECK(ring_kind(*group_catalog("V4"), 2) == "V4");
  CHECK(ring_kind(*group_catalog("Q8"), 2) == "Q8");
  CHECK(ring_kind(*group_catalog("D8"), 2) == "D8");
  CHECK(ring_kind(*group_catalog("C2xC4"), 2) == "generic");
}

TEST_CASE("C2 named basis") {
  TateRing R(group_catalog("C2"), -4, 4);
  auto B = named_basis(R);
  CHECK(B.describe(R.unit()) == "1");
  CHECK(B.describe(parse_class(B, R, "s*s^-1")) == "1");
  CHECK(B.describe(parse_class(B, R, "s^-1*s^-1")) == "s^-2");
  CHECK(B.describe(R.zero(3)) == "0");
  CHECK(R.pairing(B.get("s"), B.get("s^-2")) == 1);
  CHECK_THROWS_AS(B.get("phi00"), UnknownLabel);
}

TEST_CASE("V4 named basis and relations") {
  TateRing R(group_catalog("V4"), -6, 4);
  auto B = named_basis(R);
  auto P = [&](const char* e) { return B.describe(parse_class(B, R, e)); };
  CHECK(B.get("phi00") == R.canonical_minus_one());
  CHECK(B.labels.at(-3) == std::vector<std::string>{"phi02", "phi11", "phi20"});
  CHECK(P("phi10*x") == "phi00");
  CHECK(P("phi00*x") == "0");
  CHECK(P("phi21*y") == "phi20");
  CHECK(P("phi12*x") == "phi02");
  CHECK(P("phi10*phi01") == "0");
  CHECK(R.pairing(parse_class(B, R, "x*y"), B.get("phi11")) == 1);
  CHECK(R.pairing(parse_class(B, R, "x^2"), B.get("phi11")) == 0);
  // x detects the first factor only
  TateRing K(cyclic_group(2), -3, 3);
  auto G = R.group();
  Embedding e1{cyclic_group(2), G, {0, 2}}, e2{cyclic_group(2), G, {0, 1}};
  CHECK(!R.restrict_class(B.generators.at("x"), K, e1).is_zero());
  CHECK(R.restrict_class(B.generators.at("x"), K, e2).is_zero());
  CHECK(R.restrict_class(B.generators.at("y"), K, e2) == K.basis(1, 0));
  CHECK(R.restrict_class(B.get("phi00"), K, e1).is_zero());
}

TEST_CASE("V4 power operations in the named basis") {
  TateRing R(group_catalog("V4"), -8, 4);
  auto B = named_basis(R);
  CLift C(R);
  auto Q = [&](const char* l, int s) { return B.describe(C.Q(B.get(l), s)); };
  CHECK(Q("phi00", 1) == "0");
  CHECK(Q("phi00", 2) == "phi11");
  CHECK(Q("phi00", 3) == "phi12+phi21");
  CHECK(Q("phi00", 4) == "phi13+phi22+phi31");
  // the closed form on all phi_ij with i + j <= 2
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      TateClass x = B.get("phi" + std::to_string(i) + std::to_string(j));
      for (int s = 0; x.degree - s >= B.lo; ++s) {
        // target phi_{2i+k+1, 2j+l+1} has degree x.degree - s exactly when k + l = s - i - j - 2
        int total = s - i - j - 2;
        TateClass expect = R.zero(x.degree - s);
        for (int k = 0; k <= total; ++k) {
          int l = total - k;
          if (oracle::binom_mod(k + i, k, 2) * oracle::binom_mod(l + j, j, 2) == 0) continue;
          int a = 2 * i + k + 1, b = 2 * j + l + 1;
          expect = expect + B.get("phi" + std::to_string(a) + std::to_string(b));
        }
        CHECK_MESSAGE(C.Q(x, s) == expect, "i=" << i << " j=" << j << " s=" << s);
      }
    }
}

TEST_CASE("Q8 named basis") {
  TateRing R(group_catalog("Q8"), -8, 8);
  auto B = named_basis(R);
  auto P = [&](const char* e) { return B.describe(parse_class(B, R, e)); };
  CHECK(P("x^2+x*y+y^2") == "0");
  CHECK(P("x^3") == "0");
  CHECK(P("x^2*y") != "0");
  CHECK(P("s^-1*s") == "1");
  CHECK(P("s^-2*x*s^2") == "x");
  CLift C(R);
  auto s = B.generators.at("s");
  CHECK(B.describe(C.Q(s, 0)) == "s");
  CHECK(B.describe(C.Q(s, -4)) == "s^2");
  for (int k = -3; k <= -1; ++k) CHECK(C.Q(s, k).is_zero());
}

TEST_CASE("D8 named basis") {
  TateRing R(group_catalog("D8"), -8, 6);
  auto B = named_basis(R);
  auto g = d8_generators(R);
  CHECK(g.c_pinned);
  auto P = [&](const char* e) { return B.describe(parse_class(B, R, e)); };
  CHECK(P("a*b") == "0");
  CHECK(B.get("phi1") == R.canonical_minus_one());
  CHECK(P("c*phi{a*c^2}") == "phi{a*c}");
  CHECK(P("a*phi{a*c}") == "phi{c}");
  CHECK(P("a*phi{c}") == "0");
  CHECK(P("b*phi{a*c}") == "0");
  CHECK(P("b*phi{b^2}") == "phi{b}");
  CLift C(R);
  auto phi1 = B.get("phi1");
  CHECK(C.Q(phi1, 1).is_zero());
  CHECK(C.Q(phi1, 3).is_zero());
  CHECK(B.describe(C.Q(phi1, 2)) == "phi{c}");
  CHECK(B.describe(C.Q(phi1, 4)) == "phi{c^2}");
}

TEST_CASE("expression parser errors") {
  TateRing R(group_catalog("V4"), -3, 3);
  auto B = named_basis(R);
  CHECK_THROWS_AS(parse_class(B, R, "z"), UnknownLabel);
  CHECK_THROWS_AS(parse_class(B, R, "x^-1"), UnknownLabel);
  CHECK_THROWS_AS(parse_class(B, R, "x+phi00"), DegreeMismatch);
  CHECK(parse_class(B, R, "3*x") == B.generators.at("x"));
  CHECK(parse_class(B, R, "x+x").is_zero());
}
