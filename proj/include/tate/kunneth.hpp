#pragma once
// Chain-level check that Q on M*(G1 x G2) is the tensor product of the factorwise operations.

#include <string>
#include <vector>

namespace tate {

struct KunnethReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
};

// Engine B on X (x) Y, the tensor product of the negative parts of the two factors' resolutions, against
// the tensor product of the two symbolic tables. Classes of M-degree in [mlo, 0], operations Q_s for
// 0 <= s <= depth.
KunnethReport kunneth_check(const std::string& g1, const std::string& g2, int mlo, int depth);

// Engine C on the product group's own resolution, in its named basis, against the tensor table
// (C2 x C2 only: phi_ij = phi_i (x) phi_j); also checks Q_0(1) = 1 there.
KunnethReport kunneth_check_own_resolution(int tate_lo, int depth);

}  // namespace tate
