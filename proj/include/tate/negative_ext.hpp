#pragma once
// Negative Tate Ext through finite complexes A -> P_n -> ... -> P_1 -> B of projectives.
// psi lifts id_B into a projective resolution of B and keeps the induced A -> Omega^n B;
// two complexes are equivalent exactly when their psi classes agree.

#include <map>
#include <mutex>
#include <vector>

#include "tate/tate.hpp"

namespace tate {

struct NotAComplex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EndMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct KComplex {
  ModulePtr A, B;
  std::vector<ModulePtr> mods;  // P_n, ..., P_1 in arrow order
  std::vector<Mat> maps;        // A -> P_n, P_n -> P_{n-1}, ..., P_1 -> B
  int length() const { return int(mods.size()); }
  // P_i for 1 <= i <= n
  const ModulePtr& P(int i) const { return mods.at(length() - i); }
  void validate() const;  // shapes, equivariance, consecutive composites vanish, middle terms free
};

// Omega^n B inside the resolution: ker(P_{n-1} -> P_{n-2}); ker eps for n = 1; B itself for n = 0
Submodule syzygy(const AugmentedResolution& R, int n);

struct StableMap {
  int n = 0;
  Submodule omega;  // Omega^n B, with its inclusion into P_{n-1}
  Mat m;            // dim A x dim omega
  ModuleMap as_map(const ModulePtr& A) const { return {A, omega.module, m}; }
};

struct PsiResult {
  StableMap f;
  std::vector<Mat> lifts;  // lifts[i-1] : P_i -> R_{i-1}, full matrices
};

// R must resolve C.B to length >= n - 1
PsiResult psi(const KComplex& C, const AugmentedResolution& R);
PsiResult psi(const KComplex& C);  // builds the minimal resolution of B
KComplex phi(const ModulePtr& A, const StableMap& f, const AugmentedResolution& R);
bool stably_equal(const ModulePtr& A, const StableMap& f, const StableMap& g);

// vertical maps v[0] : A -> A', v[i] : P_{n+1-i} -> P'_{n+1-i}, v[n+1] : B -> B'
bool is_morphism(const KComplex& C, const KComplex& D, const std::vector<Mat>& v);
// the morphism C -> phi(psi(C)) given by id_A, the lifts and id_B
std::vector<Mat> component_morphism(const KComplex& C, const PsiResult& r);

// first : A -> ... -> B, second : B -> ... -> C; the result runs A -> ... -> C
KComplex splice(const KComplex& first, const KComplex& second);
KComplex identity_complex(const ModulePtr& M);  // length 0

// Omega^n(g) : Omega^n B -> Omega^n B' by lifting g over the two resolutions
Mat omega_map(const ModuleMap& g, const AugmentedResolution& RB, const AugmentedResolution& RB2, int n);
// the square y o f = Omega^n(g) o x for a morphism of complexes with end maps f, g
bool square_commutes(const KComplex& top, const KComplex& bottom, const ModuleMap& f, const ModuleMap& g);

// k -> kG(x)kG -> ... -> kG(x)kG -> k with norm(x)norm, i copies of 1 + T and eps(x)eps (p = 2)
KComplex interpretqi_complex(const GroupPtr& G, int i);
ModulePtr diagonal_square(const GroupPtr& G, uint32_t p = 2);  // kG (x) kG, index g*n + h
// sum_g alpha(1 (x) g) for an equivariant alpha : kG(x)kG -> k (one column) with alpha o (N (x) N) = 0
uint32_t h_minus_one_coefficient(const GroupPtr& G, const Mat& alpha);

// Classes of the Tate ring with A = B = k.
class KClasses {
 public:
  explicit KClasses(const TateRing& R);
  const TateRing& ring() const { return R_; }
  // k -> P_{-1} -> ... -> P_{-n} -> k with eta, the differentials and the cocycle x (degree -n < 0);
  // length 0 for degree 0
  KComplex class_complex(const TateClass& x) const;
  TateClass class_of(const KComplex& C) const;
  TateClass class_of(const StableMap& f) const;
  StableMap stable_map(const TateClass& x) const;  // psi of the class complex
  // y . x for x given as a complex of length n and y in H^m, 0 < m < n (lift into the resolution)
  KComplex mixed_product(const KComplex& x, const TateClass& y) const;

 private:
  struct Decoder {
    int n = 0, dim = 0;
    RowSolver solver;  // rows: psi of the basis complexes, then the norm image of Omega^n k
    Mat omega_basis;
  };
  const Decoder& decoder(int n) const;

  const TateRing& R_;
  ModulePtr k_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, Decoder> dec_;
};

}  // namespace tate
