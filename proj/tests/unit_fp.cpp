#include <random>

#include "doctest.h"
#include "tate/fp.hpp"

using namespace tate;

namespace {
Mat random_mat(std::mt19937& rng, int r, int c, uint32_t p) {
  Mat m(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = uint16_t(rng() % p);
  return m;
}

// brute-force enumeration of solutions of A x = b over F_2 (oracle)
int count_solutions(const Mat& A, const Mat& b) {
  int n = A.cols(), cnt = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Mat x(n, 1, 2);
    for (int i = 0; i < n; ++i) x.at(i, 0) = (mask >> i) & 1;
    if (A * x == b) ++cnt;
  }
  return cnt;
}
}  // namespace

TEST_CASE("rref of repeated row") {
  auto A = Mat::from_rows({{1, 1}, {1, 1}});
  auto rr = rref_decompose(A);
  CHECK(rr.rank == 1);
  CHECK(rr.pivots == std::vector<int>{0});
  CHECK(rr.T * A == rr.R);
}

TEST_CASE("rref of identity") {
  auto I = Mat::identity(3);
  auto rr = rref_decompose(I);
  CHECK(rr.rank == 3);
  CHECK(rr.R == I);
}

TEST_CASE("1+t on kC2 has rank one") { CHECK(rank_of(Mat::from_rows({{1, 1}, {1, 1}})) == 1); }

TEST_CASE("solve_linear examples") {
  auto Z = Mat(2, 2);
  auto s0 = solve_linear(Z, Mat(2, 1));
  REQUIRE(s0.X);
  CHECK(s0.X->is_zero());
  CHECK(s0.kernel.cols() == 2);

  auto A = Mat::from_rows({{1, 1}, {1, 1}});
  auto s1 = solve_linear(A, Mat::from_rows({{1}, {1}}));
  REQUIRE(s1.X);
  CHECK(*s1.X == Mat::from_rows({{1}, {0}}));
  CHECK(s1.kernel.cols() == 1);
  CHECK(count_solutions(A, Mat::from_rows({{1}, {1}})) == 2);

  auto s2 = solve_linear(A, Mat::from_rows({{1}, {0}}));
  CHECK(!s2.X);
  CHECK(count_solutions(A, Mat::from_rows({{1}, {0}})) == 0);
}

TEST_CASE("mixed modulus is rejected") {
  CHECK_THROWS_AS(Mat(1, 1, 2) * Mat(1, 1, 3), ModulusMismatch);
  CHECK_THROWS_AS(kronecker(Mat(1, 1, 2), Mat(1, 1, 3)), ModulusMismatch);
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
  auto U = Mat::from_rows({{1, 1}, {0, 1}});
  CHECK(kronecker(U, Mat::from_rows({{1}})) == U);
  auto J = Mat::from_rows({{1, 1}, {1, 1}});
  auto K = kronecker(J, J);
  CHECK(K.rows() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(K(i, j) == 1);
}

TEST_CASE("linear algebra properties over several primes") {
  std::mt19937 rng(12345);
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + rng() % 7, c = 1 + rng() % 7;
      Mat A = random_mat(rng, r, c, p);
      auto rr = rref_decompose(A);
      CHECK(rr.T * A == rr.R);
      CHECK(rank_of(A.transpose()) == rr.rank);
      CHECK(rank_of(rr.T) == r);  // invertible
      for (size_t k = 1; k < rr.pivots.size(); ++k) CHECK(rr.pivots[k] > rr.pivots[k - 1]);
      Mat B = random_mat(rng, r, 2, p);
      auto s = solve_linear(A, B);
      if (s.X) CHECK(A * *s.X == B);
      CHECK(A * s.kernel == Mat(r, s.kernel.cols(), p));
      CHECK(s.kernel.cols() == c - rr.rank);
      // consistent right-hand side always solvable
      Mat X0 = random_mat(rng, c, 3, p);
      auto s2 = solve_linear(A, A * X0);
      REQUIRE(s2.X);
      CHECK(A * *s2.X == A * X0);
      Mat C = random_mat(rng, 1 + rng() % 3, 1 + rng() % 3, p);
      Mat D = random_mat(rng, C.cols(), 1 + rng() % 3, p);
      Mat E = random_mat(rng, A.cols(), 1 + rng() % 3, p);
      CHECK(kronecker(A, C) * kronecker(E, D) == kronecker(A * E, C * D));
      RowSolver rs(A);
      Mat Y = random_mat(rng, 3, r, p);
      auto got = rs.solve(Y * A);
      REQUIRE(got);
      CHECK(*got * A == Y * A);
    }
  }
}

TEST_CASE("left kernel") {
  auto A = Mat::from_rows({{1, 1}, {1, 1}, {0, 1}});
  auto K = left_kernel(A);
  CHECK(K.rows() == 1);
  CHECK((K * A).is_zero());
}
