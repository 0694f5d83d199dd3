#include "doctest.h"
#include "tate/resolution.hpp"

using namespace tate;

TEST_CASE("C2 complete resolution is periodic") {
  auto G = group_catalog("C2");
  auto R = complete_resolution(G, 4, 4);
  CHECK(R.verify());
  auto one_plus_t = Mat::from_rows({{1, 1}, {1, 1}});
  for (int m = -4; m <= 4; ++m) CHECK(R.dim(m) == 2);
  for (int m = -3; m <= 4; ++m) CHECK(R.D(m) == one_plus_t);
  CHECK(R.eta == Mat::from_rows({{1, 1}}));
  CHECK_THROWS_AS(R.rank(5), WindowError);
  CHECK_THROWS_AS(R.D(-4), WindowError);
}

TEST_CASE("ranks of minimal resolutions") {
  // H^n(V4) has dimension n+1; Q8 cohomology is 4-periodic with dims 1,2,2,1
  auto v4 = complete_resolution(group_catalog("V4"), 3, 4);
  CHECK(v4.verify());
  for (int m = 0; m <= 4; ++m) CHECK(v4.rank(m) == m + 1);
  auto q8 = complete_resolution(group_catalog("Q8"), 2, 5);
  CHECK(q8.verify());
  std::vector<int> want = {1, 2, 2, 1, 1, 2};
  for (int m = 0; m <= 5; ++m) CHECK(q8.rank(m) == want[m]);
  auto d8 = complete_resolution(group_catalog("D8"), 2, 4);
  CHECK(d8.verify());
  for (int m = 0; m <= 4; ++m) CHECK(d8.rank(m) == m + 1);
  auto c4 = complete_resolution(group_catalog("C4"), 3, 3);
  CHECK(c4.verify());
  for (int m = -3; m <= 3; ++m) CHECK(c4.rank(m) == 1);
  auto c3 = complete_resolution(group_catalog("C3"), 2, 3, 3);
  CHECK(c3.verify());
  CHECK_THROWS_AS(complete_resolution(group_catalog("C3"), 2, 2, 2), UnsupportedGroup);
}

TEST_CASE("negative half is the dual of the positive half") {
  for (auto name : {"V4", "Q8", "D8"}) {
    auto R = complete_resolution(group_catalog(name), 4, 4);
    for (int n = 1; n <= 3; ++n) {
      CHECK(R.D(-n) == R.D(n).transpose());
      CHECK(R.rank(-n - 1) == R.rank(n));
    }
    CHECK(R.D(0) == R.eps * R.eta);
  }
}

TEST_CASE("window stability") {
  auto G = group_catalog("D8");
  auto small = complete_resolution(G, 2, 2);
  auto big = complete_resolution(G, 5, 5);
  for (int m = -1; m <= 2; ++m) CHECK(small.D(m) == big.D(m));
}

TEST_CASE("lifting the identity") {
  auto G = group_catalog("V4");
  auto k = trivial_module(G);
  auto R = minimal_resolution(k, 3);
  CHECK(R.verify());
  auto f = lift_over_resolutions(identity_map(k), R, R, 3);
  CHECK(R.eps == f[0] * R.eps);
  for (int m = 1; m <= 3; ++m) CHECK(R.D[m] * f[m - 1] == f[m] * R.D[m]);
}
