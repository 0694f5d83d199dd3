#pragma once
// Carlson productivity at p = 2: the stable annihilation test against the divisibility of P_1(zeta) by zeta.

#include <cstdint>
#include <string>
#include <vector>

#include "tate/power_ops.hpp"

namespace tate {

struct ZeroClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Omega^n k = im(D_n) inside P_{n-1} of the complete resolution (any sign of n); zeta_hat(z D_n) = zeta(z)
struct ZetaData {
  TateClass zeta;
  Submodule omega;  // Omega^n k with its inclusion into P_{n-1}
  Mat zeta_hat;     // dim omega x 1
  Submodule L;      // ker zeta_hat inside omega
};

ZetaData realize_zeta(const TateRing& R, const TateClass& zeta);
// the same class on Omega^n k (+) kG with zeta_hat extended by the augmentation on the free summand
ZetaData realize_zeta_padded(const TateRing& R, const TateClass& zeta);

bool annihilation_test(const ZetaData& z);  // zeta_hat (x) id_L : Omega^n k (x) L -> L stably zero
bool divisibility_test(const CLift& C, const TateClass& zeta);  // P_1(zeta) in zeta . H^{n-1}

struct ProductiveVerdict {
  TateClass zeta;
  bool annihilates = false, divisible = false;
  bool agree() const { return annihilates == divisible; }
};
struct ProductiveReport {
  uint64_t seed = 0;
  std::vector<ProductiveVerdict> verdicts;
  int disagreements = 0;
  bool ok() const { return disagreements == 0 && !verdicts.empty(); }
};
// every nonzero class of a degree when dim <= 3, else the basis and 20 classes drawn with the seed
ProductiveReport productivity_battery(const CLift& C, int lo, int hi, uint64_t seed = 61);
// a ring and engine able to run the battery on [lo, hi]
TateRing productive_ring(const GroupPtr& G, int lo, int hi);

}  // namespace tate
