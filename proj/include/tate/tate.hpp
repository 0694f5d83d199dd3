#pragma once
// Tate cohomology of G with trivial coefficients: classes, cup product, duality pairing, restriction.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tate/pside.hpp"
#include "tate/resolution.hpp"

namespace tate {

// The resolution is minimal, so the cochain differential vanishes and a class of degree n is just a
// functional on the generators of P_n: v has one row and rank(n) columns.
struct TateClass {
  int degree = 0;
  Mat v;
  bool is_zero() const { return v.is_zero(); }
  bool operator==(const TateClass& o) const { return degree == o.degree && v == o.v; }
  bool operator!=(const TateClass& o) const { return !(*this == o); }
  TateClass operator+(const TateClass& o) const;
};

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class TateRing {
 public:
  // classes live in [lo, hi]; products may reach [2lo - 1, 2hi + 1], so the resolution is built that far
  TateRing(GroupPtr G, int lo, int hi, uint32_t p = 2);
  TateRing(const AugmentedResolution& pos, int lo, int hi);

  const CompleteResolution& res() const { return res_; }
  const GroupPtr& group() const { return res_.group; }
  uint32_t prime() const { return res_.p; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool covers(int n) const { return res_.in_window(n); }

  int dim(int n) const { return res_.rank(n); }
  TateClass basis(int n, int j) const;
  TateClass zero(int n) const;
  TateClass unit() const { return basis(0, 0); }
  TateClass from_vector(int n, const std::vector<int>& coeffs) const;
  // canonical generator of degree -1: the class of k -> kG -> k (norm, then augmentation)
  TateClass canonical_minus_one() const { return basis(-1, 0); }

  TateClass cup(const TateClass& a, const TateClass& b) const;
  // matrix of left multiplication by a : H^q -> H^{|a|+q} (rows = basis of H^q)
  Mat left_mult_matrix(const TateClass& a, int q) const;

  uint32_t pairing(const TateClass& a, const TateClass& b) const;
  Mat gram(int n) const;  // dim(n) x dim(-1-n)

  // chain map P^K -> res P^G (as kK-modules) lifting id_k, evaluated at degree n;
  // returns the matrix sending G-class coordinates to K-class coordinates
  Mat restriction_matrix(int n, const TateRing& K, const Embedding& e) const;
  TateClass restrict_class(const TateClass& a, const TateRing& K, const Embedding& e) const;

  // lift of basis class (q, c) to P_{q+j} -> P_j, as generator images (exposed for tests)
  const Mat& yoneda_lift(int q, int c, int j) const;

 private:
  void check(const TateClass& a) const;
  const RowSolver& k_solver(int m) const;
  const PSideSolver& p_solver(int m) const;

  CompleteResolution res_;
  int lo_, hi_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::tuple<int, int, int>, Mat> lifts_;
  mutable std::map<int, RowSolver> ksolvers_;
  mutable std::map<int, PSideSolver> psolvers_;
};

std::string class_str(const TateClass& a);

}  // namespace tate
