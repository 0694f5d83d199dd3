#pragma once
// Dual operations on ordinary cohomology through Tate duality, the norm into C2 x K, and checks of the
// norm compatibilities.

#include <string>
#include <vector>

#include "tate/power_ops.hpp"

namespace tate {

// Q_i^* : H^{i+j} -> H^j with <Q_i^*(x), u> = <x, Q_i(u)> for u in H^{-1-j}
struct DualOperation {
  int i = 0, j = 0;
  Mat m;  // rows: basis of H^{i+j}, columns: coordinates in H^j
  TateClass apply(const TateClass& x) const;
};
DualOperation dual_q(const CLift& C, int i, int j);
// <Q_{|x|}^*(x), 1>: the H^0 value, computed from Q_{|x|} of the canonical generator only
uint32_t dual_q_to_unit(const CLift& C, const TateClass& x);
// re-derives every entry of D from the pairing, one basis pair at a time
bool adjointness_holds(const CLift& C, const DualOperation& D);

// positive resolution of k over G1 x G2 as the tensor product of two resolutions;
// generator (a; j1, j2) of T_m sits at offset(a) + j1 * r2 + j2, element g1 * n2 + g2
struct TensorResolution {
  AugmentedResolution T;
  std::vector<std::vector<int>> offset;  // offset[m][a], -1 when absent
  std::vector<int> r2;                   // ranks of the second factor
};
TensorResolution tensor_positive(const AugmentedResolution& X, const AugmentedResolution& Y, const GroupPtr& prod);

// cross products H*(G1) x H*(G2) -> H*(G1 x G2) evaluated on the product's own resolution
class CrossProduct {
 public:
  CrossProduct(const TateRing& G1, const TateRing& G2, const TateRing& G, int depth);
  TateClass cross(const TateClass& x, const TateClass& y) const;
  int depth() const { return depth_; }

 private:
  const TateRing &G1_, &G2_, &G_;
  int depth_;
  TensorResolution T_;
  std::vector<Mat> f_;  // P^G_m -> T_m
};

// sum_r Sq^r(x) z^{|x|-r} in H*(C2 x K); z from the C2 factor
class DirectFactorNorm {
 public:
  DirectFactorNorm(const TateRing& C2, const TateRing& K, const CLift& CK, const TateRing& G, int depth);
  TateClass norm(const TateClass& x) const;

 private:
  const TateRing &C2_, &K_, &G_;
  const CLift& CK_;
  CrossProduct X_;
};

struct CheckReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
  void fail(const std::string& s) {
    ok = false;
    failures.push_back(s);
  }
};

// (c): Q_i^*(x) = Q_{ni}^*(x^n) for every x in H^i(K) (all of it when dim <= 4, else the basis)
CheckReport check_dual_power_identity(const std::string& group, int imax, int nmax);
// (b) for the direct factor K of C2 x K: norm(Q_i^*(x)) = Q_{2i}^*(norm(x)), plus norm(1) = 1
// and multiplicativity of the norm on basis pairs
CheckReport check_factor_norm(const std::string& group, int imax);

// V4 inside D8: assuming the norm formula forces norm(xy) into span of products of ker(Q_2^*) on H^2(D8),
// where Q_4^* vanishes, while norm(Q_2^*(xy)) = norm(1) = 1
struct NormObstructionReport {
  bool q1_dual_zero_on_v4 = false;     // Q_1^* = 0 on H^1(V4)
  bool q2_dual_xy_is_one = false;      // Q_2^*(xy) = 1 on H^2(V4)
  int kernel_q2_dim = -1;              // dim ker(Q_2^* : H^2(D8) -> H^0)
  bool kernel_is_a2_b2 = false;        // that kernel is span(a^2, b^2)
  bool q4_dual_zero_on_products = false;  // Q_4^* kills every product of two kernel elements
  bool contradiction() const {
    return q1_dual_zero_on_v4 && q2_dual_xy_is_one && kernel_is_a2_b2 && q4_dual_zero_on_products;
  }
};
NormObstructionReport v4_d8_norm_obstruction();

struct NontrivialityReport {
  bool nonzero = false;
  bool predicted = false;  // |G|_2 divides n, so the value must be nonzero
  bool consistent() const { return !predicted || nonzero; }
  TateClass value;
};
NontrivialityReport nontriviality_check(const CLift& C, int n);

}  // namespace tate
