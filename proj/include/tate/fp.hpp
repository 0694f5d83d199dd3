#pragma once
// Dense linear algebra over F_p.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate {

struct ModulusMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Field context. Scalars are plain residues; the context carries p.
struct Fp {
  uint32_t p = 2;
  explicit Fp(uint32_t prime = 2);
  uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p ? s - p : s; }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t((uint64_t(a) * b) % p); }
  uint32_t inv(uint32_t a) const;
  uint32_t reduce(int64_t v) const {
    int64_t r = v % int64_t(p);
    return uint32_t(r < 0 ? r + p : r);
  }
  static bool is_prime(uint32_t n);
};

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, uint32_t p = 2);
  static Mat identity(int n, uint32_t p = 2);
  static Mat from_rows(const std::vector<std::vector<int64_t>>& rows, uint32_t p = 2);

  int rows() const { return r_; }
  int cols() const { return c_; }
  uint32_t prime() const { return p_; }
  Fp field() const { return Fp(p_); }

  uint16_t operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  uint16_t& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  void set(int i, int j, uint32_t v) { a_[size_t(i) * c_ + j] = uint16_t(v % p_); }
  const uint16_t* row(int i) const { return a_.data() + size_t(i) * c_; }
  uint16_t* row(int i) { return a_.data() + size_t(i) * c_; }

  bool is_zero() const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && p_ == o.p_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(uint32_t s) const;
  Mat row_block(int r0, int nrows) const;
  Mat col_block(int c0, int ncols) const;
  Mat select_rows(const std::vector<int>& idx) const;
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat hstack(const Mat& a, const Mat& b);

  std::vector<std::vector<int>> to_vectors() const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  uint32_t p_ = 2;
  std::vector<uint16_t> a_;
};

void check_same_modulus(const Mat& a, const Mat& b);

struct RrefResult {
  Mat R;
  std::vector<int> pivots;
  int rank = 0;
  Mat T;  // T * A = R
};

RrefResult rref_decompose(const Mat& A);
int rank_of(const Mat& A);

// Solves A * X = B. Kernel basis is given as columns of `kernel` (A * kernel = 0).
struct LinearSolution {
  std::optional<Mat> X;
  Mat kernel;
};
LinearSolution solve_linear(const Mat& A, const Mat& B);

std::optional<Mat> inverse(const Mat& A);
Mat kronecker(const Mat& A, const Mat& B);

// Row space helpers (row convention: a subspace is the span of the rows).
Mat row_space_basis(const Mat& A);   // rows of R with nonzero entries
Mat left_kernel(const Mat& A);       // rows x with x * A = 0

// Precomputed solver for x * A = b, many right-hand sides.
class RowSolver {
 public:
  RowSolver() = default;
  explicit RowSolver(const Mat& A);
  // rows of Z are right-hand sides; returns rows of X with X * A = Z, or nullopt if any row is inconsistent.
  std::optional<Mat> solve(const Mat& Z) const;
  bool in_span(const std::vector<uint16_t>& z) const;
  int rank() const { return rank_; }
  int unknowns() const { return n_; }

 private:
  int n_ = 0, m_ = 0, rank_ = 0;
  uint32_t p_ = 2;
  std::vector<int> pivots_;
  Mat T_;  // from rref of A^T
};

}  // namespace tate
