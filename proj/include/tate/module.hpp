#pragma once
// Right kG-modules as matrix representations; row vectors act by v -> v * rho(g).

#include <memory>
#include <optional>
#include <vector>

#include "tate/fp.hpp"
#include "tate/group.hpp"

namespace tate {

struct KGModule {
  GroupPtr group;
  uint32_t p = 2;
  int dim = 0;
  std::vector<Mat> rho;  // one per group element

  const Mat& act(int g) const { return rho[g]; }
  bool check_action() const;  // rho(e) = I, rho(g)rho(h) = rho(gh)
};
using ModulePtr = std::shared_ptr<const KGModule>;

struct ModuleMap {
  ModulePtr source, target;
  Mat m;  // dim source x dim target
  bool is_equivariant() const;
};

ModulePtr trivial_module(const GroupPtr& G, uint32_t p = 2);
ModulePtr free_module(const GroupPtr& G, int rank, uint32_t p = 2);
ModulePtr tensor_module(const ModulePtr& M, const ModulePtr& N);
ModulePtr dual_module(const ModulePtr& M);
ModulePtr restrict_module(const ModulePtr& M, const Embedding& e);
ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N);

ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g
ModuleMap zero_map(const ModulePtr& M, const ModulePtr& N);
ModuleMap identity_map(const ModulePtr& M);
ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g);

std::vector<ModuleMap> hom_equivariant_basis(const ModulePtr& M, const ModulePtr& N);

// Submodule spanned by the rows of `basis` (must be G-stable); returns module and inclusion.
struct Submodule {
  ModulePtr module;
  ModuleMap inclusion;
  Mat basis;  // rref rows inside the ambient module
};
Submodule submodule(const ModulePtr& M, const Mat& spanning_rows);
Submodule kernel_module(const ModuleMap& f);
// coordinates of the rows of V in an rref basis (V must lie in its span)
Mat coordinates_in(const Mat& rref_basis, const Mat& V);

// span of v(g - 1) over v in rows(basis), g in G
Mat radical_span(const ModulePtr& M, const Mat& basis);

struct ProjectiveCover {
  ModulePtr free;     // free of rank r
  ModuleMap cover;    // free -> M, surjective
  Mat generators;     // r rows: images of the free generators
};
ProjectiveCover projective_cover(const ModulePtr& M);

struct OmegaResult {
  ModulePtr omega;
  ModuleMap inclusion;  // omega -> free cover
  ModuleMap cover;      // free cover -> M
};
OmegaResult omega(const ModulePtr& M);

bool is_projective(const ModulePtr& M);
// generator rows of a free module structure, or nullopt if M is not free
std::optional<Mat> free_basis(const ModulePtr& M);

struct StableZeroResult {
  bool stably_zero = false;
  std::optional<ModuleMap> witness;  // h : M (x) kG -> N with h o iota = f
};
// M (x) kG carries the action on the kG factor only; iota(m) = sum_g m g (x) g^{-1}
StableZeroResult is_stably_zero(const ModuleMap& f);
ModulePtr induced_free_cover(const ModulePtr& M);  // M (x) kG as above
ModuleMap iota_map(const ModulePtr& M);

void require_p_group(const GroupPtr& G, uint32_t p);

}  // namespace tate
