#include "tate/duality.hpp"

#include "tate/named.hpp"

namespace tate {

TateClass DualOperation::apply(const TateClass& x) const {
  if (x.degree != i + j || x.v.cols() != m.rows()) throw DegreeMismatch("dual operation applied in the wrong degree");
  return {j, x.v * m};
}

DualOperation dual_q(const CLift& C, int i, int j) {
  const TateRing& R = C.ring();
  if (j < 0 || i + j < 0) throw std::invalid_argument("dual operations act on ordinary cohomology");
  const int du = R.dim(-1 - j), dt = R.dim(-1 - j - i);
  Mat MQ(du, dt, 2);
  for (int a = 0; a < du; ++a) {
    TateClass q = C.Q(R.basis(-1 - j, a), i);
    for (int b = 0; b < dt; ++b) MQ.at(a, b) = q.v(0, b);
  }
  auto G0inv = inverse(R.gram(j));
  if (!G0inv) throw std::logic_error("duality pairing is degenerate");
  return {i, j, R.gram(i + j) * MQ.transpose() * *G0inv};
}

uint32_t dual_q_to_unit(const CLift& C, const TateClass& x) {
  const TateRing& R = C.ring();
  return R.pairing(x, C.Q(R.canonical_minus_one(), x.degree));
}

bool adjointness_holds(const CLift& C, const DualOperation& D) {
  const TateRing& R = C.ring();
  for (int a = 0; a < R.dim(D.i + D.j); ++a) {
    TateClass x = R.basis(D.i + D.j, a);
    TateClass y = D.apply(x);
    for (int b = 0; b < R.dim(-1 - D.j); ++b) {
      TateClass u = R.basis(-1 - D.j, b);
      if (R.pairing(y, u) != R.pairing(x, C.Q(u, D.i))) return false;
    }
  }
  return true;
}

TensorResolution tensor_positive(const AugmentedResolution& X, const AugmentedResolution& Y, const GroupPtr& prod) {
  const GroupTable& GP = *prod;
  const int n1 = X.group->n, n2 = Y.group->n, N = GP.n;
  if (N != n1 * n2) throw std::invalid_argument("product group order mismatch");
  if (X.rank.at(0) != 1 || Y.rank.at(0) != 1) throw std::invalid_argument("both resolutions must start with kG");
  const int L = std::min(X.length(), Y.length());
  const int e1 = X.group->identity, e2 = Y.group->identity;
  TensorResolution out;
  AugmentedResolution& T = out.T;
  T.target = trivial_module(prod, X.p);
  T.group = prod;
  T.p = X.p;
  for (int m = 0; m <= L; ++m) {
    std::vector<int> off(m + 1, -1);
    int o = 0;
    for (int a = 0; a <= m; ++a) {
      off[a] = o;
      o += X.rank[a] * Y.rank[m - a];
    }
    out.offset.push_back(off);
    T.rank.push_back(o);
  }
  out.r2 = Y.rank;
  auto coord = [&](int gen, int g1, int g2) { return gen * N + g1 * n2 + g2; };
  T.D.push_back(Mat());
  for (int m = 1; m <= L; ++m) {
    Mat gens(T.rank[m], T.rank[m - 1] * N, X.p);
    for (int a = 0; a <= m; ++a) {
      const int b = m - a, r1 = X.rank[a], r2 = Y.rank[b];
      for (int j1 = 0; j1 < r1; ++j1)
        for (int j2 = 0; j2 < r2; ++j2) {
          int row = out.offset[m][a] + j1 * r2 + j2;
          if (a >= 1) {
            const Mat& D1 = X.D[a];
            const int to = out.offset[m - 1][a - 1];
            for (int k1 = 0; k1 < X.rank[a - 1]; ++k1)
              for (int h = 0; h < n1; ++h)
                if (D1(j1 * n1 + e1, k1 * n1 + h)) gens.at(row, coord(to + k1 * r2 + j2, h, e2)) ^= 1;
          }
          if (b >= 1) {
            const Mat& D2 = Y.D[b];
            const int to = out.offset[m - 1][a], r2t = Y.rank[b - 1];
            for (int k2 = 0; k2 < r2t; ++k2)
              for (int h = 0; h < n2; ++h)
                if (D2(j2 * n2 + e2, k2 * n2 + h)) gens.at(row, coord(to + j1 * r2t + k2, e1, h)) ^= 1;
          }
        }
    }
    T.D.push_back(expand_on_free_target(GP, gens));
  }
  T.eps = Mat(N, 1, X.p);
  const uint32_t v = X.eps(e1, 0) * Y.eps(e2, 0) % X.p;
  for (int g = 0; g < N; ++g) T.eps.at(g, 0) = uint16_t(v);
  T.tail_kernel = row_space_basis(left_kernel(L >= 1 ? T.D[L] : T.eps));
  return out;
}

CrossProduct::CrossProduct(const TateRing& G1, const TateRing& G2, const TateRing& G, int depth)
    : G1_(G1), G2_(G2), G_(G), depth_(depth) {
  T_ = tensor_positive(G1.res().positive, G2.res().positive, G.group());
  auto k = trivial_module(G.group(), G.prime());
  f_ = lift_over_resolutions(identity_map(k), G.res().positive, T_.T, depth);
}

TateClass CrossProduct::cross(const TateClass& x, const TateClass& y) const {
  const int a = x.degree, b = y.degree, m = a + b;
  if (a < 0 || b < 0) throw std::invalid_argument("cross product of ordinary classes only");
  if (m > depth_) throw WindowError("cross product degree beyond the comparison depth");
  const int r2 = T_.r2[b], N = G_.group()->n;
  std::vector<uint16_t> val(T_.T.rank[m], 0);
  for (int j1 = 0; j1 < x.v.cols(); ++j1)
    for (int j2 = 0; j2 < y.v.cols(); ++j2) val[T_.offset[m][a] + j1 * r2 + j2] = (x.v(0, j1) * y.v(0, j2)) & 1;
  TateClass c = G_.zero(m);
  const Mat& f = f_[m];
  for (int gen = 0; gen < G_.dim(m); ++gen) {
    const uint16_t* row = f.row(gen * N + G_.group()->identity);
    uint32_t s = 0;
    for (int t = 0; t < T_.T.rank[m]; ++t)
      if (val[t])
        for (int g = 0; g < N; ++g) s ^= row[t * N + g] & 1;
    c.v.at(0, gen) = uint16_t(s);
  }
  return c;
}

DirectFactorNorm::DirectFactorNorm(const TateRing& C2, const TateRing& K, const CLift& CK, const TateRing& G,
                                   int depth)
    : C2_(C2), K_(K), G_(G), CK_(CK), X_(C2, K, G, depth) {}

TateClass DirectFactorNorm::norm(const TateClass& x) const {
  const int n = x.degree;
  if (n < 0) throw std::invalid_argument("the norm acts on ordinary cohomology");
  TateClass acc = G_.zero(2 * n);
  for (int r = 0; r <= n; ++r) acc = acc + X_.cross(C2_.basis(n - r, 0), CK_.Q(x, -r));
  return acc;
}

namespace {

// every element of the degree when small, the basis otherwise
std::vector<TateClass> sample_degree(const TateRing& R, int n) {
  std::vector<TateClass> out;
  const int d = R.dim(n);
  if (d <= 4) {
    for (int mask = 1; mask < (1 << d); ++mask) {
      TateClass c = R.zero(n);
      for (int j = 0; j < d; ++j) c.v.at(0, j) = (mask >> j) & 1;
      out.push_back(c);
    }
  } else {
    for (int j = 0; j < d; ++j) out.push_back(R.basis(n, j));
  }
  return out;
}

std::string where(const std::string& g, int i, int n, const TateClass& x) {
  return g + " i=" + std::to_string(i) + " n=" + std::to_string(n) + " x=" + class_str(x);
}

}  // namespace

CheckReport check_dual_power_identity(const std::string& group, int imax, int nmax) {
  CheckReport rep;
  TateRing R(group_catalog(group), -1 - imax * nmax, imax);
  CLift C(R);
  for (int i = 0; i <= imax; ++i)
    for (const TateClass& x : sample_degree(R, i)) {
      uint32_t lhs = dual_q_to_unit(C, x);
      TateClass pw = R.unit();
      for (int n = 1; n <= nmax; ++n) {
        pw = R.cup(pw, x);
        uint32_t rhs = dual_q_to_unit(C, pw);
        ++rep.checked;
        if (lhs != rhs) rep.fail(where(group, i, n, x));
      }
    }
  return rep;
}

CheckReport check_factor_norm(const std::string& group, int imax) {
  CheckReport rep;
  auto K = group_catalog(group), Z = cyclic_group(2);
  TateRing RZ(Z, -1, 2 * imax), RK(K, -1 - imax, imax), RG(direct_product(Z, K), -1 - 2 * imax, 2 * imax);
  CLift CK(RK), CG(RG);
  DirectFactorNorm N(RZ, RK, CK, RG, 2 * imax);
  if (N.norm(RK.unit()) != RG.unit()) rep.fail("norm(1) != 1");
  for (int i = 0; i <= imax; ++i)
    for (const TateClass& x : sample_degree(RK, i)) {
      ++rep.checked;
      // Q_i^*(x) is a scalar in H^0(K) and the norm of a scalar c is c^2 = c
      if (dual_q_to_unit(CK, x) != dual_q_to_unit(CG, N.norm(x))) rep.fail("(b) " + where(group, i, 2, x));
    }
  for (int a = 0; a <= imax; ++a)
    for (int b = 0; a + b <= imax; ++b)
      for (int p = 0; p < RK.dim(a); ++p)
        for (int q = 0; q < RK.dim(b); ++q) {
          TateClass x = RK.basis(a, p), y = RK.basis(b, q);
          ++rep.checked;
          if (N.norm(RK.cup(x, y)) != RG.cup(N.norm(x), N.norm(y))) rep.fail("norm not multiplicative");
          if (a == b && N.norm(x + y) != N.norm(x) + N.norm(y)) rep.fail("norm not additive");
        }
  return rep;
}

NormObstructionReport v4_d8_norm_obstruction() {
  NormObstructionReport rep;
  TateRing RV(group_catalog("V4"), -3, 2);
  CLift CV(RV);
  auto BV = named_basis(RV);
  rep.q1_dual_zero_on_v4 = dual_q(CV, 1, 0).m.is_zero();
  rep.q2_dual_xy_is_one = dual_q_to_unit(CV, RV.cup(BV.get("x"), BV.get("y"))) == 1;

  TateRing RD(group_catalog("D8"), -5, 4);
  CLift CD(RD);
  auto gens = d8_generators(RD);
  Mat Ker = row_space_basis(left_kernel(dual_q(CD, 2, 0).m));
  rep.kernel_q2_dim = Ker.rows();
  Mat sq = Mat::vstack(RD.cup(gens.a, gens.a).v, RD.cup(gens.b, gens.b).v);
  rep.kernel_is_a2_b2 = rank_of(sq) == 2 && rank_of(Mat::vstack(sq, Ker)) == 2 && Ker.rows() == 2;
  bool zero = true;
  for (int p = 0; p < Ker.rows(); ++p)
    for (int q = 0; q < Ker.rows(); ++q) {
      TateClass u{2, Ker.row_block(p, 1)}, v{2, Ker.row_block(q, 1)};
      if (dual_q_to_unit(CD, RD.cup(u, v)) != 0) zero = false;
    }
  rep.q4_dual_zero_on_products = zero;
  return rep;
}

NontrivialityReport nontriviality_check(const CLift& C, int n) {
  const TateRing& R = C.ring();
  NontrivialityReport rep;
  rep.value = C.Q(R.canonical_minus_one(), n);
  rep.nonzero = !rep.value.is_zero();
  int two = 1, order = R.group()->n;
  while (order % 2 == 0) {
    two *= 2;
    order /= 2;
  }
  rep.predicted = n > 0 && n % two == 0;
  return rep;
}

}  // namespace tate
