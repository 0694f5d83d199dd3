#pragma once
// Minimal resolutions, complete resolution windows, chain-map lifting.

#include <string>
#include <vector>

#include "tate/module.hpp"

namespace tate {

struct WindowError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Free modules use coordinates (j, g) -> j*|G| + g with e_(j,g) * h = e_(j,gh).
// Row (j, g) of an expanded map is the generator image j right-multiplied by g.
Mat expand_on_free_target(const GroupTable& G, const Mat& gen_images);
// generator rows (j, e) of a full map out of a free module
Mat generator_rows(const GroupTable& G, const Mat& full);
void act_free(const GroupTable& G, const uint16_t* v, int rank, int h, uint16_t* out);

struct AugmentedResolution {
  ModulePtr target;  // the resolved module
  GroupPtr group;
  uint32_t p = 2;
  std::vector<int> rank;  // rank[m], 0 <= m <= length
  std::vector<Mat> D;     // D[m]: P_m -> P_{m-1} for m >= 1 (D[0] empty)
  Mat eps;                // P_0 -> target
  Mat tail_kernel;        // kernel of the last map, basis rows (feeds extension)
  int length() const { return int(rank.size()) - 1; }
  int dim(int m) const { return rank.at(m) * group->n; }
  ModulePtr module(int m) const { return free_module(group, rank.at(m), p); }
  bool verify() const;  // d^2 = 0, exactness by rank counting
};

AugmentedResolution minimal_resolution(const ModulePtr& M, int length);
// extends in place, reproducing existing degrees verbatim
void extend_resolution(AugmentedResolution& R, int length);

struct CompleteResolution {
  GroupPtr group;
  uint32_t p = 2;
  int lo = 0, hi = 0;  // window [lo, hi] = [-N, M]
  std::vector<int> ranks;
  std::vector<Mat> Ds;  // Ds[m - lo] = D_m : P_m -> P_{m-1}, valid for lo < m <= hi
  Mat eps;              // dim P_0 x 1
  Mat eta;              // 1 x dim P_{-1}
  AugmentedResolution positive;

  int n() const { return group->n; }
  bool in_window(int m) const { return m >= lo && m <= hi; }
  int rank(int m) const;
  int dim(int m) const { return rank(m) * group->n; }
  const Mat& D(int m) const;
  Mat gens(int m) const { return generator_rows(*group, D(m)); }
  bool verify() const;
};

CompleteResolution complete_resolution(const GroupPtr& G, int N, int M, uint32_t p = 2);
// deterministic: the same minimal resolution is reused and extended as needed
CompleteResolution complete_resolution_from(const AugmentedResolution& pos, int N, int M);

// f_m : (resA)_m -> (resB)_m for 0 <= m <= depth, lifting f at the augmentation
std::vector<Mat> lift_over_resolutions(const ModuleMap& f, const AugmentedResolution& A, const AugmentedResolution& B,
                                       int depth);

std::string resolution_json(const CompleteResolution& R, bool with_matrices = true);

}  // namespace tate
