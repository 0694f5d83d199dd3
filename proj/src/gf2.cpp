#include "tate/gf2.hpp"

namespace tate::gf2 {

Block from_mat(const Mat& m) {
  if (m.prime() != 2) throw ModulusMismatch("bit packing needs p = 2");
  Block b(m.rows(), size_t(words_for(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j)) set1(b.row(i), size_t(j));
  return b;
}

Mat to_mat(const Block& b, int cols) {
  Mat m(b.rows, cols, 2);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = get(b.row(i), size_t(j));
  return m;
}

Solver::Solver(const Mat& A) : nx_(A.rows()), nz_(A.cols()) {
  // x A = z  <=>  A^T x^T = z^T;  T A^T = R
  auto rr = rref_decompose(A.transpose());
  rank_ = rr.rank;
  pivots_ = rr.pivots;
  T_ = from_mat(rr.T);
}

bool Solver::solve(const Word* z, Word* x) const {
  const size_t wz = size_t(words_for(nz_));
  for (size_t i = 0; i < size_t(words_for(nx_)); ++i) x[i] = 0;
  for (int i = rank_; i < nz_; ++i)
    if (parity_and(T_.row(i), z, wz)) return false;
  for (int i = 0; i < rank_; ++i)
    if (parity_and(T_.row(i), z, wz)) set1(x, size_t(pivots_[i]));
  return true;
}

}  // namespace tate::gf2
