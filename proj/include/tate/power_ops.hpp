#pragma once
// Chain-level power operations at p = 2.
//
// Engine C works on the complete resolution P with the spliced square Q: Q_j = (P+ (x) P+)_j for j >= 0,
// Q_j = (R (x) R)_j for j < 0 where R = (k -> P_{-1} -> P_{-2} -> ...), joined by
// Q_0 -> Q_{-1}, v |-> (eps(x)eps)(v) (eta (x) 1 + 1 (x) eta).  The maps g_j : P_m -> Q_{m+j} satisfy
//   g_0 a chain map lifting id_k,  d g_j + g_j d = (1+T) g_{j-1},
// and vanish on P_m for -j <= m <= -1 (no component from negative degrees into P+ (x) P+).
// P_i(x) = (x (x) x) g_i on P_{2|x|-i}, Q_s(x) = P_{|x|+s}(x).
//
// Engine B works on the negative part X_m = P_{m-1} (m <= 0) alone, with cup-i maps psi_i : X_m -> (X(x)X)_{m+i}
// lifting eta -> eta (x) eta, psi_i = 0 in positive target degrees.  D_i(x) = (x (x) x) psi_i on X_{2m-i}
// for x in M^m = H^{m-1}, and Q_s(x) = D_{s+m}(x).

#include <map>
#include <mutex>

#include "tate/tate.hpp"
#include "tate/tensor.hpp"

namespace tate {

class CLift {
 public:
  explicit CLift(const TateRing& R);
  const TateRing& ring() const { return R_; }
  const TensorSquare& square(int j) const { return j >= 0 ? pos_ : neg_; }

  // generator images of g_j on P_m, rows in Q_{m+j}
  const gf2::Block& component(int j, int m) const;
  // residual of the defining relation on the generators of P_m (zero block when it holds)
  gf2::Block relation_residual(int j, int m) const;
  // Q differential applied to one element of degree q
  void dQ_add(int q, const gf2::Word* v, gf2::Word* out) const;

  TateClass P(const TateClass& x, int i) const;
  TateClass Q(const TateClass& x, int s) const;
  // (a (x) b) g_0; only defined when both degrees are >= 0 or both < 0 (the model has no mixed components)
  TateClass diagonal_cup(const TateClass& a, const TateClass& b) const;

 private:
  gf2::Block compute(int j, int m) const;
  gf2::Block twisted_plus(int j, int m) const;  // (1+T) g_{j-1} on P_m
  gf2::Block dQ_rows(int q, const gf2::Block& B) const;
  const EquivSolver& solver(int m) const;

  const TateRing& R_;
  TensorSquare pos_, neg_;
  std::vector<char> eps_mask_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, gf2::Block> memo_;
  mutable std::map<int, std::unique_ptr<EquivSolver>> solvers_;
};

// A complex X_0 <- ... of standard free modules over G (degrees 0 down to lo) with eta : k -> X_0.
struct NegativeComplex {
  GroupPtr group;
  int lo = 0;
  std::vector<int> rank;  // rank[-m]
  std::vector<Mat> D;     // D[-m] : X_m -> X_{m-1}, for lo < m <= 0
  Mat eta;                // 1 x dim X_0
  int dim(int m) const { return rank.at(-m) * group->n; }
  bool verify() const;  // complex + exactness + eta D_0 = 0
};

// X_m = P_{m-1}
NegativeComplex negative_part(const CompleteResolution& R);
// X (x) Y over G1 x G2, standardized: generator (j1, j2) -> j1*r2 + j2, element g1*n2 + g2
NegativeComplex tensor_negative(const NegativeComplex& X, const NegativeComplex& Y, const GroupPtr& prod);

class BLift {
 public:
  explicit BLift(NegativeComplex X);
  const NegativeComplex& complex() const { return X_; }
  const TensorSquare& square() const { return sq_; }
  const gf2::Block& component(int i, int m) const;  // psi_i on X_m, rows in (X(x)X)_{m+i}
  gf2::Block relation_residual(int i, int m) const;
  // functional on the generators of X_{2m-i}; x is a functional on the generators of X_m
  Mat D(const Mat& x, int m, int i) const;

 private:
  gf2::Block compute(int i, int m) const;
  const EquivSolver& solver(int m) const;  // S = gens of D_m (m <= 0), or eta for m = 1

  NegativeComplex X_;
  TensorSquare sq_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, gf2::Block> memo_;
  mutable std::map<int, std::unique_ptr<EquivSolver>> solvers_;
};

// engine B on a Tate ring's own negative part, in Tate grading; x must have negative degree
TateClass q_op_b(const BLift& B, const TateRing& R, const TateClass& x, int s);

// classical cup-i construction on the positive resolution only: dense component matrices and a
// staircase solve through the double complex, no contraction. Sq^k(x) for x in H^n, n >= 0.
class SteenrodOracle {
 public:
  explicit SteenrodOracle(const TateRing& R);
  TateClass Sq(const TateClass& x, int k) const;
  using Elem = std::vector<Mat>;  // component (s, deg - s) for s = 0..deg

 private:
  const std::vector<Elem>& cup_i(int i, int m) const;  // images of the generators of P_m
  Elem zero(int deg) const;
  Elem d(int deg, const Elem& v) const;
  Elem act(int deg, const Elem& v, int g) const;
  Elem twist(const Elem& v) const;
  Elem solve(int deg, Elem r) const;  // x in degree deg with d x = r
  const RowSolver& solver(int m) const;

  const TateRing& R_;
  std::vector<std::vector<int>> perm_;  // perm_[g] on coordinates of one copy of kG
  mutable std::map<std::pair<int, int>, std::vector<Elem>> memo_;
  mutable std::map<int, RowSolver> solvers_;
};

}  // namespace tate
