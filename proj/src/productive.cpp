#include "tate/productive.hpp"

#include <random>

namespace tate {

namespace {

ZetaData finish(const TateClass& zeta, Submodule omega, Mat zh) {
  ZetaData z;
  z.zeta = zeta;
  z.L = kernel_module({omega.module, trivial_module(omega.module->group, omega.module->p), zh});
  z.omega = std::move(omega);
  z.zeta_hat = std::move(zh);
  return z;
}

}  // namespace

ZetaData realize_zeta(const TateRing& R, const TateClass& zeta) {
  if (zeta.is_zero()) throw ZeroClass("the class is zero");
  const int n = zeta.degree, order = R.group()->n;
  const auto& res = R.res();
  if (!res.in_window(n) || !res.in_window(n - 1)) throw WindowError("Omega^n k needs P_n and P_{n-1}");
  const Mat& D = res.D(n);
  auto Pm = free_module(R.group(), res.rank(n - 1), R.prime());
  Submodule omega = submodule(Pm, D);
  // each basis row w = z D_n; zeta_hat(w) = zeta(z)
  RowSolver rs(D);
  auto Z = rs.solve(omega.basis);
  if (!Z) throw std::logic_error("syzygy basis outside the image");
  Mat col(res.dim(n), 1, R.prime());
  for (int j = 0; j < res.rank(n); ++j)
    for (int g = 0; g < order; ++g) col.at(j * order + g, 0) = zeta.v(0, j);
  return finish(zeta, std::move(omega), *Z * col);
}

ZetaData realize_zeta_padded(const TateRing& R, const TateClass& zeta) {
  ZetaData base = realize_zeta(R, zeta);
  const int order = R.group()->n;
  auto F = free_module(R.group(), 1, R.prime());
  auto M = direct_sum(base.omega.module, F);
  Submodule omega = submodule(M, Mat::identity(M->dim, R.prime()));
  Mat zh = Mat::vstack(base.zeta_hat, Mat(order, 1, R.prime()));
  for (int g = 0; g < order; ++g) zh.at(base.omega.module->dim + g, 0) = 1;
  return finish(zeta, std::move(omega), zh);
}

bool annihilation_test(const ZetaData& z) {
  const ModulePtr& W = z.omega.module;
  const ModulePtr& L = z.L.module;
  if (L->dim == 0) return true;
  const int dw = W->dim, dl = L->dim;
  Mat m(dw * dl, dl, W->p);
  for (int a = 0; a < dw; ++a)
    if (z.zeta_hat(a, 0))
      for (int b = 0; b < dl; ++b) m.at(a * dl + b, b) = z.zeta_hat(a, 0);
  return is_stably_zero({tensor_module(W, L), L, m}).stably_zero;
}

bool divisibility_test(const CLift& C, const TateClass& zeta) {
  const TateRing& R = C.ring();
  if (zeta.is_zero()) throw ZeroClass("the class is zero");
  const int n = zeta.degree;
  TateClass p1 = C.P(zeta, 1);
  if (p1.is_zero()) return true;
  if (R.dim(n - 1) == 0) return false;
  return RowSolver(R.left_mult_matrix(zeta, n - 1)).solve(p1.v).has_value();
}

TateRing productive_ring(const GroupPtr& G, int lo, int hi) {
  return TateRing(G, std::min(lo - 1, 2 * lo - 1), std::max(hi, 2 * hi - 1));
}

ProductiveReport productivity_battery(const CLift& C, int lo, int hi, uint64_t seed) {
  const TateRing& R = C.ring();
  ProductiveReport rep;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int n = lo; n <= hi; ++n) {
    const int d = R.dim(n);
    std::vector<TateClass> classes;
    if (d <= 3) {
      for (int mask = 1; mask < (1 << d); ++mask) {
        TateClass c = R.zero(n);
        for (int j = 0; j < d; ++j) c.v.at(0, j) = (mask >> j) & 1;
        classes.push_back(c);
      }
    } else {
      for (int j = 0; j < d; ++j) classes.push_back(R.basis(n, j));
      for (int t = 0; t < 20; ++t) {
        TateClass c = R.zero(n);
        while (c.is_zero())
          for (int j = 0; j < d; ++j) c.v.at(0, j) = rng() & 1;
        classes.push_back(c);
      }
    }
    for (const auto& c : classes) {
      ProductiveVerdict v;
      v.zeta = c;
      v.annihilates = annihilation_test(realize_zeta(R, c));
      v.divisible = divisibility_test(C, c);
      if (!v.agree()) ++rep.disagreements;
      rep.verdicts.push_back(v);
    }
  }
  return rep;
}

}  // namespace tate
