#include "tate/negative_ext.hpp"

namespace tate {

namespace {

bool same_module(const ModulePtr& M, const ModulePtr& N) {
  if (M == N) return true;
  if (!M || !N || M->dim != N->dim || M->p != N->p || M->group->n != N->group->n) return false;
  for (int g = 0; g < M->group->n; ++g)
    if (M->rho[g] != N->rho[g]) return false;
  return true;
}

bool is_trivial_k(const ModulePtr& M) {
  if (M->dim != 1) return false;
  for (const auto& r : M->rho)
    if (r(0, 0) != 1) return false;
  return true;
}

// equivariant maps out of a free module: X with X * E = Z, determined by the generator images
class FreeLifter {
 public:
  explicit FreeLifter(const ModulePtr& Q) : Q_(Q) {
    auto fb = free_basis(Q);
    if (!fb) throw NotAComplex("middle term of the complex is not projective");
    gens_ = *fb;
    const int n = Q->group->n, r = gens_.rows();
    Mat U(r * n, Q->dim, Q->p);
    for (int c = 0; c < r; ++c)
      for (int g = 0; g < n; ++g) {
        Mat row = gens_.row_block(c, 1) * Q->rho[g];
        for (int a = 0; a < Q->dim; ++a) U.at(c * n + g, a) = row(0, a);
      }
    auto inv = inverse(U);
    if (!inv) throw NotAComplex("free basis does not span");
    Uinv_ = *inv;
  }

  std::optional<Mat> lift(const ModulePtr& N, const Mat& E, const Mat& Z) const {
    RowSolver rs(E);
    auto y = rs.solve(gens_ * Z);
    if (!y) return std::nullopt;
    const int n = Q_->group->n, r = gens_.rows();
    Mat Xf(r * n, N->dim, Q_->p);
    for (int c = 0; c < r; ++c)
      for (int g = 0; g < n; ++g) {
        Mat row = y->row_block(c, 1) * N->rho[g];
        for (int a = 0; a < N->dim; ++a) Xf.at(c * n + g, a) = row(0, a);
      }
    return Uinv_ * Xf;
  }

 private:
  ModulePtr Q_;
  Mat gens_, Uinv_;
};

void check_shapes(const KComplex& C) {
  const int n = C.length();
  if (int(C.maps.size()) != n + 1) throw NotAComplex("a complex of length n needs n + 1 maps");
  auto src = [&](int k) { return k == 0 ? C.A : C.mods[k - 1]; };
  auto dst = [&](int k) { return k == n ? C.B : C.mods[k]; };
  for (int k = 0; k <= n; ++k) {
    const Mat& m = C.maps[k];
    if (m.rows() != src(k)->dim || m.cols() != dst(k)->dim) throw ShapeMismatch("map shape in complex");
  }
}

// lifts[i-1] : P_i -> R_{i-1} for i = 1..upto
std::vector<Mat> lift_chain(const KComplex& C, const AugmentedResolution& R, int upto) {
  const int n = C.length();
  if (upto - 1 > R.length()) throw WindowError("resolution of B is too short for the complex");
  std::map<const KGModule*, std::unique_ptr<FreeLifter>> lifters;
  std::vector<Mat> lifts;
  for (int i = 1; i <= upto; ++i) {
    const ModulePtr& Q = C.P(i);
    auto& L = lifters[Q.get()];
    if (!L) L = std::make_unique<FreeLifter>(Q);
    const Mat& out = C.maps[n - i + 1];
    std::optional<Mat> X;
    if (i == 1)
      X = L->lift(R.module(0), R.eps, out);
    else
      X = L->lift(R.module(i - 1), R.D[i - 1], out * lifts[i - 2]);
    if (!X) throw NotAComplex("identity of B does not lift at P_" + std::to_string(i));
    lifts.push_back(*X);
  }
  return lifts;
}

Mat cocycle_column(const TateClass& x, int n) {
  Mat lam(x.v.cols() * n, 1, x.v.prime());
  for (int j = 0; j < x.v.cols(); ++j)
    for (int g = 0; g < n; ++g) lam.at(j * n + g, 0) = x.v(0, j);
  return lam;
}

}  // namespace

void KComplex::validate() const {
  check_shapes(*this);
  const int n = length();
  auto src = [&](int k) { return k == 0 ? A : mods[k - 1]; };
  auto dst = [&](int k) { return k == n ? B : mods[k]; };
  for (int k = 0; k <= n; ++k)
    if (!ModuleMap{src(k), dst(k), maps[k]}.is_equivariant()) throw NotAComplex("map is not equivariant");
  for (int k = 0; k < n; ++k)
    if (!(maps[k] * maps[k + 1]).is_zero()) throw NotAComplex("consecutive maps do not compose to zero");
}

Submodule syzygy(const AugmentedResolution& R, int n) {
  if (n < 0) throw std::invalid_argument("negative syzygy index");
  if (n - 1 > R.length()) throw WindowError("resolution too short for the syzygy");
  if (n == 0) return submodule(R.target, Mat::identity(R.target->dim, R.p));
  if (n == 1) return kernel_module({R.module(0), R.target, R.eps});
  return kernel_module({R.module(n - 1), R.module(n - 2), R.D[n - 1]});
}

PsiResult psi(const KComplex& C, const AugmentedResolution& R) {
  C.validate();
  if (!same_module(C.B, R.target)) throw EndMismatch("resolution does not resolve the end module B");
  const int n = C.length();
  PsiResult out;
  out.f.n = n;
  out.f.omega = syzygy(R, n);
  if (n == 0) {
    out.f.m = C.maps[0];
    return out;
  }
  out.lifts = lift_chain(C, R, n);
  Mat rows = C.maps[0] * out.lifts[n - 1];
  try {
    out.f.m = coordinates_in(out.f.omega.basis, rows);
  } catch (const std::runtime_error&) {
    throw NotAComplex("first map does not land in the syzygy");
  }
  return out;
}

PsiResult psi(const KComplex& C) { return psi(C, minimal_resolution(C.B, std::max(C.length() - 1, 0))); }

KComplex phi(const ModulePtr& A, const StableMap& f, const AugmentedResolution& R) {
  const int n = f.n;
  KComplex C;
  C.A = A;
  C.B = R.target;
  if (n == 0) {
    C.maps.push_back(f.m * f.omega.basis);
    return C;
  }
  C.maps.push_back(f.m * f.omega.basis);
  for (int m = n - 1; m >= 0; --m) C.mods.push_back(R.module(m));
  for (int m = n - 1; m >= 1; --m) C.maps.push_back(R.D[m]);
  C.maps.push_back(R.eps);
  return C;
}

bool stably_equal(const ModulePtr& A, const StableMap& f, const StableMap& g) {
  if (f.n != g.n || f.m.cols() != g.m.cols() || f.m.rows() != g.m.rows() || f.omega.basis != g.omega.basis)
    throw EndMismatch("stable maps into different syzygies");
  return is_stably_zero({A, f.omega.module, f.m - g.m}).stably_zero;
}

bool is_morphism(const KComplex& C, const KComplex& D, const std::vector<Mat>& v) {
  const int n = C.length();
  if (D.length() != n || int(v.size()) != n + 2) return false;
  auto src = [&](const KComplex& X, int k) { return k == 0 ? X.A : k == n + 1 ? X.B : X.mods[k - 1]; };
  for (int k = 0; k <= n + 1; ++k) {
    ModuleMap vm{src(C, k), src(D, k), v[k]};
    if (v[k].rows() != vm.source->dim || v[k].cols() != vm.target->dim || !vm.is_equivariant()) return false;
  }
  for (int k = 0; k <= n; ++k)
    if (C.maps[k] * v[k + 1] != v[k] * D.maps[k]) return false;
  return true;
}

std::vector<Mat> component_morphism(const KComplex& C, const PsiResult& r) {
  const int n = C.length();
  std::vector<Mat> v;
  v.push_back(Mat::identity(C.A->dim, C.A->p));
  for (int k = 1; k <= n; ++k) v.push_back(r.lifts[n - k]);
  v.push_back(Mat::identity(C.B->dim, C.B->p));
  return v;
}

KComplex splice(const KComplex& first, const KComplex& second) {
  if (!same_module(first.B, second.A)) throw EndMismatch("splice: end modules differ");
  const int n = first.length(), m = second.length();
  KComplex C;
  C.A = first.A;
  C.B = second.B;
  C.mods = first.mods;
  C.mods.insert(C.mods.end(), second.mods.begin(), second.mods.end());
  for (int k = 0; k < n; ++k) C.maps.push_back(first.maps[k]);
  C.maps.push_back(first.maps[n] * second.maps[0]);
  for (int k = 1; k <= m; ++k) C.maps.push_back(second.maps[k]);
  return C;
}

KComplex identity_complex(const ModulePtr& M) {
  KComplex C;
  C.A = C.B = M;
  C.maps.push_back(Mat::identity(M->dim, M->p));
  return C;
}

Mat omega_map(const ModuleMap& g, const AugmentedResolution& RB, const AugmentedResolution& RB2, int n) {
  if (n == 0) return g.m;
  auto lifts = lift_over_resolutions(g, RB, RB2, n - 1);
  auto S = syzygy(RB, n), S2 = syzygy(RB2, n);
  return coordinates_in(S2.basis, S.basis * lifts[n - 1]);
}

bool square_commutes(const KComplex& top, const KComplex& bottom, const ModuleMap& f, const ModuleMap& g) {
  const int n = top.length();
  if (bottom.length() != n) throw EndMismatch("complexes of different lengths");
  auto RB = minimal_resolution(top.B, std::max(n - 1, 0));
  auto RB2 = minimal_resolution(bottom.B, std::max(n - 1, 0));
  auto x = psi(top, RB), y = psi(bottom, RB2);
  Mat lhs = f.m * y.f.m;
  Mat rhs = x.f.m * omega_map(g, RB, RB2, n);
  return is_stably_zero({top.A, y.f.omega.module, lhs - rhs}).stably_zero;
}

ModulePtr diagonal_square(const GroupPtr& G, uint32_t p) {
  auto F = free_module(G, 1, p);
  return tensor_module(F, F);
}

KComplex interpretqi_complex(const GroupPtr& G, int i) {
  if (i < 0) throw std::invalid_argument("interpretqi_complex: negative index");
  const int n = G->n;
  if (n % 2) throw UnsupportedGroup("the group order must be even");
  auto k = trivial_module(G, 2);
  auto S = diagonal_square(G, 2);
  Mat NN(1, n * n, 2), EE(n * n, 1, 2), T1(n * n, n * n, 2);
  for (int a = 0; a < n * n; ++a) NN.at(0, a) = EE.at(a, 0) = 1;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      T1.at(g * n + h, g * n + h) ^= 1;
      T1.at(g * n + h, h * n + g) ^= 1;
    }
  KComplex C;
  C.A = C.B = k;
  C.mods.assign(i + 1, S);
  C.maps.push_back(NN);
  for (int r = 0; r < i; ++r) C.maps.push_back(T1);
  C.maps.push_back(EE);
  return C;
}

uint32_t h_minus_one_coefficient(const GroupPtr& G, const Mat& alpha) {
  const int n = G->n;
  auto S = diagonal_square(G, 2);
  auto k = trivial_module(G, 2);
  if (alpha.rows() != n * n || alpha.cols() != 1) throw ShapeMismatch("alpha must be a column on kG (x) kG");
  if (!ModuleMap{S, k, alpha}.is_equivariant()) throw NotAComplex("alpha is not equivariant");
  uint32_t total = 0, coeff = 0;
  for (int a = 0; a < n * n; ++a) total ^= alpha(a, 0) & 1;
  if (total) throw NotAComplex("alpha does not vanish on the norm element");
  for (int g = 0; g < n; ++g) coeff ^= alpha(G->identity * n + g, 0) & 1;
  return coeff;
}

KClasses::KClasses(const TateRing& R) : R_(R), k_(trivial_module(R.group(), R.prime())) {}

KComplex KClasses::class_complex(const TateClass& x) const {
  if (x.degree > 0) throw std::invalid_argument("class_complex needs a degree <= 0");
  const auto& res = R_.res();
  const int n = -x.degree, order = R_.group()->n;
  if (!R_.covers(x.degree)) throw WindowError("class outside the window");
  KComplex C;
  C.A = C.B = k_;
  if (n == 0) {
    Mat c(1, 1, R_.prime());
    c.at(0, 0) = x.v(0, 0);
    C.maps.push_back(c);
    return C;
  }
  for (int m = -1; m >= -n; --m) C.mods.push_back(free_module(R_.group(), res.rank(m), R_.prime()));
  C.maps.push_back(res.eta);
  for (int m = -1; m > -n; --m) C.maps.push_back(res.D(m));
  C.maps.push_back(cocycle_column(x, order));
  return C;
}

StableMap KClasses::stable_map(const TateClass& x) const {
  return psi(class_complex(x), R_.res().positive).f;
}

const KClasses::Decoder& KClasses::decoder(int n) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  auto it = dec_.find(n);
  if (it != dec_.end()) return it->second;
  const auto& pos = R_.res().positive;
  if (n - 1 > pos.length() || !R_.covers(-n)) throw WindowError("degree -" + std::to_string(n) + " outside the window");
  Decoder d;
  d.n = n;
  d.dim = R_.dim(-n);
  auto omega = syzygy(pos, n);
  d.omega_basis = omega.basis;
  const int dm = omega.module->dim;
  Mat rows(0, dm, R_.prime());
  for (int j = 0; j < d.dim; ++j) rows = Mat::vstack(rows, stable_map(R_.basis(-n, j)).m);
  Mat N(dm, dm, R_.prime());
  for (const auto& r : omega.module->rho) N = N + r;
  Mat all = Mat::vstack(rows, row_space_basis(N));
  if (rank_of(all) != d.dim + rank_of(N)) throw std::logic_error("class complexes are not independent modulo norms");
  d.solver = RowSolver(all);
  return dec_.emplace(n, std::move(d)).first->second;
}

TateClass KClasses::class_of(const StableMap& f) const {
  if (f.n == 0) {
    TateClass c = R_.zero(0);
    c.v.at(0, 0) = f.m(0, 0);
    return c;
  }
  const auto& d = decoder(f.n);
  if (f.omega.basis != d.omega_basis) throw EndMismatch("stable map is not taken in the ring's resolution");
  auto x = d.solver.solve(f.m);
  if (!x) throw std::logic_error("map into Omega^n k is not invariant");
  TateClass c = R_.zero(-f.n);
  for (int j = 0; j < d.dim; ++j) c.v.at(0, j) = (*x)(0, j);
  return c;
}

TateClass KClasses::class_of(const KComplex& C) const {
  if (!is_trivial_k(C.A) || !is_trivial_k(C.B)) throw EndMismatch("class_of needs A = B = k");
  const int n = C.length();
  if (n - 1 > R_.res().positive.length()) throw WindowError("complex longer than the resolved window");
  return class_of(psi(C, R_.res().positive).f);
}

KComplex KClasses::mixed_product(const KComplex& x, const TateClass& y) const {
  const int n = x.length(), m = y.degree;
  if (m <= 0 || m >= n) throw std::invalid_argument("mixed_product needs 0 < |y| < length");
  if (!is_trivial_k(x.B)) throw EndMismatch("mixed_product needs B = k");
  x.validate();
  const auto& pos = R_.res().positive;
  auto lifts = lift_chain(x, pos, m + 1);
  KComplex C;
  C.A = x.A;
  C.B = k_;
  C.mods.assign(x.mods.begin(), x.mods.begin() + (n - m));
  C.maps.assign(x.maps.begin(), x.maps.begin() + (n - m));
  C.maps.push_back(lifts[m] * cocycle_column(y, R_.group()->n));
  return C;
}

}  // namespace tate
