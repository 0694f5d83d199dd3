#pragma once
// Equivariant solves into free targets:  find kG-linear Y : F -> X with S * Y = Z,
// where the rows of S are vectors in the standard free module F and X is free.

#include "tate/fp.hpp"
#include "tate/group.hpp"

namespace tate {

class PSideSolver {
 public:
  PSideSolver() = default;
  PSideSolver(const GroupTable& G, const Mat& S);

  // zc rows: one per free generator c of X, entries indexed (k, g') = Z[k, coord(c, g')].
  // Returns rows y_c indexed (j, g):  Y[j, coord(c, g)] = y_c[(j, g)].
  std::optional<Mat> solve_free(const Mat& zc) const;

  // convenience for a standard free target of the given rank
  std::optional<Mat> solve_standard(const Mat& Z) const;

  int rows_S() const { return rS_; }
  int rank_F() const { return rF_; }

 private:
  int n_ = 0, rS_ = 0, rF_ = 0;
  RowSolver solver_;
};

}  // namespace tate
