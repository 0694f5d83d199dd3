#include "tate/pside.hpp"

namespace tate {

PSideSolver::PSideSolver(const GroupTable& G, const Mat& S) : n_(G.n), rS_(S.rows()), rF_(S.cols() / G.n) {
  if (S.cols() % n_) throw ShapeMismatch("PSideSolver: rows must live in a free module");
  // M[(j,g),(k,g')] = S[k, (j, g^{-1} g')]
  Mat M(rF_ * n_, rS_ * n_, S.prime());
  for (int j = 0; j < rF_; ++j)
    for (int g = 0; g < n_; ++g) {
      int gi = G.inv[g];
      for (int k = 0; k < rS_; ++k)
        for (int gp = 0; gp < n_; ++gp) M.at(j * n_ + g, k * n_ + gp) = S(k, j * n_ + G(gi, gp));
    }
  solver_ = RowSolver(M);
}

std::optional<Mat> PSideSolver::solve_free(const Mat& zc) const { return solver_.solve(zc); }

std::optional<Mat> PSideSolver::solve_standard(const Mat& Z) const {
  if (Z.rows() != rS_ || Z.cols() % n_) throw ShapeMismatch("PSideSolver: right-hand side shape");
  const int rX = Z.cols() / n_;
  Mat zc(rX, rS_ * n_, Z.prime());
  for (int c = 0; c < rX; ++c)
    for (int k = 0; k < rS_; ++k)
      for (int g = 0; g < n_; ++g) zc.at(c, k * n_ + g) = Z(k, c * n_ + g);
  auto y = solver_.solve(zc);
  if (!y) return std::nullopt;
  Mat Y(rF_, Z.cols(), Z.prime());
  for (int c = 0; c < rX; ++c)
    for (int j = 0; j < rF_; ++j)
      for (int g = 0; g < n_; ++g) Y.at(j, c * n_ + g) = (*y)(c, j * n_ + g);
  return Y;
}

}  // namespace tate
