#pragma once
// Tensor squares of complexes of free kG-modules (diagonal action), bit-packed, p = 2.

#include <map>
#include <memory>

#include "tate/gf2.hpp"
#include "tate/resolution.hpp"

namespace tate {

// One degree of a complex: a standard free module kG^rank, or (trivial) a single copy of k.
struct FactorDeg {
  int dim = 0, rank = 0;
  bool trivial = false;
  std::vector<std::vector<int>> perm;  // perm[g][coord]: right action
  bool has_D = false;                  // map to degree - 1
  Mat Dm;
  gf2::Block D;
  std::vector<std::vector<int>> Dsp;  // Dsp[a] = columns set in row a
  bool has_H = false;                 // k-linear contraction to degree + 1
  gf2::Block H;
  std::vector<std::vector<int>> Hsp;
};

struct FactorComplex {
  GroupPtr group;
  int lo = 0, hi = 0;
  std::vector<FactorDeg> deg;
  const FactorDeg& at(int d) const;
  bool has(int d) const { return d >= lo && d <= hi; }
};

void set_differential(FactorDeg& f, const Mat& D);
void set_contraction(FactorDeg& f, const Mat& H);
FactorDeg free_deg(const GroupTable& G, int rank);
FactorDeg trivial_deg(const GroupTable& G);

// positive part P_0..P_hi with differentials D_1..D_hi and a contraction (H_n D_{n+1} + D_n H_{n-1} = 1,
// H_{-1} = the generator e_(0,e) of P_0)
FactorComplex positive_factor(const CompleteResolution& R);
// k, P_{-1}, ..., P_lo with eta : k -> P_{-1} as the degree-0 differential
FactorComplex coaugmented_factor(const CompleteResolution& R);

struct TensorComp {
  int s, t, da, db;
  size_t rw, off;  // row width and offset in words
};

struct TensorLayout {
  int degree = 0;
  std::vector<TensorComp> comps;
  size_t words = 0;
  int ngens = 0;                   // free generators of the diagonal module
  std::vector<uint32_t> gen_pos;   // gen_pos[c*n + g] = bit of e_c * g
  int comp_of(int s) const;        // index of component with first factor degree s, or -1
  size_t bit(const TensorComp& c, int a, int b) const { return c.off * 64 + size_t(a) * c.rw * 64 + size_t(b); }
};

// A (x) A, all components (s, t) with s, t in [lo, hi] and s + t = degree.
class TensorSquare {
 public:
  explicit TensorSquare(FactorComplex F);
  const FactorComplex& factor() const { return F_; }
  const TensorLayout& layout(int j) const;
  bool has_degree(int j) const { return j >= 2 * F_.lo && j <= 2 * F_.hi; }

  // out ^= d(v), v in degree j, out in degree j - 1
  void d_add(int j, const gf2::Word* v, gf2::Word* out) const;
  // out ^= T(v), the factor swap
  void twist_add(int j, const gf2::Word* v, gf2::Word* out) const;
  // out ^= v * g
  void act_add(int j, const gf2::Word* v, int g, gf2::Word* out) const;
  // out ^= h(v) into degree j + 1 using H (x) 1 + sigma eps (x) H; needs the positive factor
  void contract_add(int j, const gf2::Word* v, gf2::Word* out) const;
  // (x (x) y)(v) on component (s, t); masks are the set coordinates of the two functionals
  int eval(int j, const gf2::Word* v, int s, const std::vector<char>& xa, const std::vector<char>& yb) const;
  // component (s, t) of the rows of B as a dense matrix (rows x da*db, index a*db+b)
  Mat component_matrix(int j, const gf2::Block& B, int s) const;

 private:
  FactorComplex F_;
  mutable std::map<int, std::unique_ptr<TensorLayout>> layouts_;
};

// equivariant solve S * Y = Z with Y : F -> (target layout), F standard free, X free via gen_pos
class EquivSolver {
 public:
  EquivSolver(const GroupTable& G, const Mat& S);
  // Z: rows of S, Y receives rank(F) rows; throws if infeasible
  void solve(const TensorLayout& L, const gf2::Block& Z, gf2::Block& Y) const;

 private:
  int n_, rS_, rF_;
  gf2::Solver solver_;
};

// sum over the entries (j, g) of each row of the full differential of gv[j] * g
gf2::Block apply_free_map(const TensorSquare& T, int j, const Mat& gens_of_D, const gf2::Block& images);

// functional on a free module (values on generators) as a coordinate mask
std::vector<char> functional_mask(const Mat& v, int n);

}  // namespace tate
