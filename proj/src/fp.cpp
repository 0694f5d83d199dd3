#include "tate/fp.hpp"

#include <sstream>

namespace tate {

Fp::Fp(uint32_t prime) : p(prime) {
  if (!is_prime(prime) || prime >= (1u << 16)) throw std::invalid_argument("modulus must be a prime below 2^16");
}

bool Fp::is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t Fp::inv(uint32_t a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return uint32_t(r);
}

Mat::Mat(int rows, int cols, uint32_t p) : r_(rows), c_(cols), p_(p), a_(size_t(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix shape");
}

Mat Mat::identity(int n, uint32_t p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<int64_t>>& rows, uint32_t p) {
  Fp f(p);
  int c = rows.empty() ? 0 : int(rows[0].size());
  Mat m(int(rows.size()), c, p);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != c) throw ShapeMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m.at(int(i), j) = uint16_t(f.reduce(rows[i][j]));
  }
  return m;
}

bool Mat::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

void check_same_modulus(const Mat& a, const Mat& b) {
  if (a.prime() != b.prime()) throw ModulusMismatch("matrices over different primes");
}

Mat Mat::transpose() const {
  Mat t(c_, r_, p_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_modulus(*this, o);
  if (c_ != o.r_) throw ShapeMismatch("product shape mismatch");
  Mat out(r_, o.c_, p_);
  if (p_ == 2) {
    for (int i = 0; i < r_; ++i) {
      uint16_t* dst = out.row(i);
      const uint16_t* src = row(i);
      for (int k = 0; k < c_; ++k) {
        if (!src[k]) continue;
        const uint16_t* orow = o.row(k);
        for (int j = 0; j < o.c_; ++j) dst[j] ^= orow[j];
      }
    }
    return out;
  }
  std::vector<uint64_t> acc(o.c_);
  for (int i = 0; i < r_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const uint16_t* src = row(i);
    for (int k = 0; k < c_; ++k) {
      if (!src[k]) continue;
      const uint16_t* orow = o.row(k);
      for (int j = 0; j < o.c_; ++j) acc[j] += uint64_t(src[k]) * orow[j];
    }
    uint16_t* dst = out.row(i);
    for (int j = 0; j < o.c_; ++j) dst[j] = uint16_t(acc[j] % p_);
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_modulus(*this, o);
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("sum shape mismatch");
  Mat out(*this);
  Fp f(p_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = uint16_t(f.add(a_[i], o.a_[i]));
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_modulus(*this, o);
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("difference shape mismatch");
  Mat out(*this);
  Fp f(p_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = uint16_t(f.sub(a_[i], o.a_[i]));
  return out;
}

Mat Mat::scaled(uint32_t s) const {
  Mat out(*this);
  Fp f(p_);
  for (auto& v : out.a_) v = uint16_t(f.mul(v, s % p_));
  return out;
}

Mat Mat::row_block(int r0, int nrows) const {
  Mat out(nrows, c_, p_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < c_; ++j) out.at(i, j) = (*this)(r0 + i, j);
  return out;
}

Mat Mat::col_block(int c0, int ncols) const {
  Mat out(r_, ncols, p_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < ncols; ++j) out.at(i, j) = (*this)(i, c0 + j);
  return out;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat out(int(idx.size()), c_, p_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < c_; ++j) out.at(int(i), j) = (*this)(idx[i], j);
  return out;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  check_same_modulus(a, b);
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack width mismatch");
  Mat out(a.rows() + b.rows(), a.cols(), a.prime());
  std::copy(a.a_.begin(), a.a_.end(), out.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), out.a_.begin() + a.a_.size());
  return out;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  check_same_modulus(a, b);
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack height mismatch");
  Mat out(a.rows(), a.cols() + b.cols(), a.prime());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b(i, j);
  }
  return out;
}

std::vector<std::vector<int>> Mat::to_vectors() const {
  std::vector<std::vector<int>> v(r_, std::vector<int>(c_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) v[i][j] = (*this)(i, j);
  return v;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

namespace {

// Packed GF(2) elimination on [A | I].
RrefResult rref_gf2(const Mat& A) {
  const int r = A.rows(), c = A.cols(), w = c + r;
  const int words = (w + 63) / 64;
  std::vector<uint64_t> buf(size_t(r) * words, 0);
  auto rowp = [&](int i) { return buf.data() + size_t(i) * words; };
  for (int i = 0; i < r; ++i) {
    uint64_t* rp = rowp(i);
    const uint16_t* src = A.row(i);
    for (int j = 0; j < c; ++j)
      if (src[j]) rp[j >> 6] |= uint64_t(1) << (j & 63);
    int t = c + i;
    rp[t >> 6] |= uint64_t(1) << (t & 63);
  }
  RrefResult res;
  int rank = 0;
  for (int j = 0; j < c && rank < r; ++j) {
    const int wj = j >> 6;
    const uint64_t bj = uint64_t(1) << (j & 63);
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (rowp(i)[wj] & bj) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank) std::swap_ranges(rowp(piv), rowp(piv) + words, rowp(rank));
    const uint64_t* pr = rowp(rank);
    for (int i = 0; i < r; ++i) {
      if (i == rank) continue;
      uint64_t* ri = rowp(i);
      if (ri[wj] & bj)
        for (int k = wj; k < words; ++k) ri[k] ^= pr[k];
    }
    // rows at or below `rank` vanish left of column j, so words below wj carry nothing
    res.pivots.push_back(j);
    ++rank;
  }
  res.rank = rank;
  res.R = Mat(r, c, 2);
  res.T = Mat(r, r, 2);
  for (int i = 0; i < r; ++i) {
    const uint64_t* rp = rowp(i);
    for (int j = 0; j < c; ++j)
      if (rp[j >> 6] >> (j & 63) & 1) res.R.at(i, j) = 1;
    for (int j = 0; j < r; ++j) {
      int t = c + j;
      if (rp[t >> 6] >> (t & 63) & 1) res.T.at(i, j) = 1;
    }
  }
  return res;
}

RrefResult rref_generic(const Mat& A) {
  const int r = A.rows(), c = A.cols();
  const uint32_t p = A.prime();
  Fp f(p);
  Mat M = Mat::hstack(A, Mat::identity(r, p));
  const int w = M.cols();
  RrefResult res;
  int rank = 0;
  for (int j = 0; j < c && rank < r; ++j) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (M(i, j)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < w; ++k) std::swap(M.at(piv, k), M.at(rank, k));
    uint32_t iv = f.inv(M(rank, j));
    for (int k = 0; k < w; ++k) M.at(rank, k) = uint16_t(f.mul(M(rank, k), iv));
    for (int i = 0; i < r; ++i) {
      if (i == rank || !M(i, j)) continue;
      uint32_t fac = M(i, j);
      for (int k = 0; k < w; ++k)
        if (M(rank, k)) M.at(i, k) = uint16_t(f.sub(M(i, k), f.mul(fac, M(rank, k))));
    }
    res.pivots.push_back(j);
    ++rank;
  }
  res.rank = rank;
  res.R = M.col_block(0, c);
  res.T = M.col_block(c, r);
  return res;
}

}  // namespace

RrefResult rref_decompose(const Mat& A) {
  if (A.prime() == 2) return rref_gf2(A);
  return rref_generic(A);
}

int rank_of(const Mat& A) { return rref_decompose(A).rank; }

LinearSolution solve_linear(const Mat& A, const Mat& B) {
  check_same_modulus(A, B);
  if (A.rows() != B.rows()) throw ShapeMismatch("solve_linear: A and B row counts differ");
  const uint32_t p = A.prime();
  Fp f(p);
  auto rr = rref_decompose(A);
  Mat TB = rr.T * B;
  LinearSolution out;
  // kernel: free columns
  std::vector<char> is_piv(A.cols(), 0);
  for (int j : rr.pivots) is_piv[j] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < A.cols(); ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  out.kernel = Mat(A.cols(), int(free_cols.size()), p);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    out.kernel.at(fc, int(k)) = 1;
    for (int i = 0; i < rr.rank; ++i)
      out.kernel.at(rr.pivots[i], int(k)) = uint16_t(f.neg(rr.R(i, fc)));
  }
  for (int i = rr.rank; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j)
      if (TB(i, j)) return out;
  Mat X(A.cols(), B.cols(), p);
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < B.cols(); ++j) X.at(rr.pivots[i], j) = TB(i, j);
  out.X = X;
  return out;
}

std::optional<Mat> inverse(const Mat& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  auto s = solve_linear(A, Mat::identity(A.rows(), A.prime()));
  if (!s.X || s.kernel.cols()) return std::nullopt;
  return s.X;
}

Mat kronecker(const Mat& A, const Mat& B) {
  check_same_modulus(A, B);
  Fp f(A.prime());
  Mat out(A.rows() * B.rows(), A.cols() * B.cols(), A.prime());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      uint32_t a = A(i, j);
      if (!a) continue;
      for (int k = 0; k < B.rows(); ++k)
        for (int l = 0; l < B.cols(); ++l)
          out.at(i * B.rows() + k, j * B.cols() + l) = uint16_t(f.mul(a, B(k, l)));
    }
  return out;
}

Mat row_space_basis(const Mat& A) {
  auto rr = rref_decompose(A);
  return rr.R.row_block(0, rr.rank);
}

Mat left_kernel(const Mat& A) {
  auto rr = rref_decompose(A);
  return rr.T.row_block(rr.rank, A.rows() - rr.rank);
}

RowSolver::RowSolver(const Mat& A) : n_(A.rows()), m_(A.cols()), p_(A.prime()) {
  auto rr = rref_decompose(A.transpose());
  rank_ = rr.rank;
  pivots_ = rr.pivots;
  T_ = rr.T.transpose();
}

std::optional<Mat> RowSolver::solve(const Mat& Z) const {
  if (Z.cols() != m_) throw ShapeMismatch("RowSolver: right-hand side width");
  if (Z.prime() != p_) throw ModulusMismatch("RowSolver: modulus");
  Mat C = Z * T_;
  Mat X(Z.rows(), n_, p_);
  for (int q = 0; q < Z.rows(); ++q) {
    for (int i = rank_; i < m_; ++i)
      if (C(q, i)) return std::nullopt;
    for (int i = 0; i < rank_; ++i) X.at(q, pivots_[i]) = C(q, i);
  }
  return X;
}

bool RowSolver::in_span(const std::vector<uint16_t>& z) const {
  Mat Z(1, m_, p_);
  for (int j = 0; j < m_; ++j) Z.at(0, j) = z[j];
  return solve(Z).has_value();
}

}  // namespace tate
