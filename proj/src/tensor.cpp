#include "tate/tensor.hpp"

namespace tate {

using gf2::Word;

const FactorDeg& FactorComplex::at(int d) const {
  if (!has(d)) throw WindowError("factor degree " + std::to_string(d) + " outside the complex");
  return deg[d - lo];
}

namespace {
std::vector<std::vector<int>> sparse_rows(const Mat& m) {
  std::vector<std::vector<int>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j)) out[i].push_back(j);
  return out;
}
}  // namespace

void set_differential(FactorDeg& f, const Mat& D) {
  f.has_D = true;
  f.Dm = D;
  f.D = gf2::from_mat(D);
  f.Dsp = sparse_rows(D);
}

void set_contraction(FactorDeg& f, const Mat& H) {
  f.has_H = true;
  f.H = gf2::from_mat(H);
  f.Hsp = sparse_rows(H);
}

FactorDeg free_deg(const GroupTable& G, int rank) {
  FactorDeg f;
  f.rank = rank;
  f.dim = rank * G.n;
  f.perm.assign(G.n, std::vector<int>(f.dim));
  for (int g = 0; g < G.n; ++g)
    for (int j = 0; j < rank; ++j)
      for (int x = 0; x < G.n; ++x) f.perm[g][j * G.n + x] = j * G.n + G(x, g);
  return f;
}

FactorDeg trivial_deg(const GroupTable& G) {
  FactorDeg f;
  f.dim = 1;
  f.trivial = true;
  f.perm.assign(G.n, std::vector<int>{0});
  return f;
}

FactorComplex positive_factor(const CompleteResolution& R) {
  if (R.p != 2) throw ModulusMismatch("chain engines run at p = 2");
  FactorComplex F;
  F.group = R.group;
  F.lo = 0;
  F.hi = R.hi;
  const GroupTable& G = *R.group;
  for (int d = 0; d <= R.hi; ++d) {
    F.deg.push_back(free_deg(G, R.rank(d)));
    if (d >= 1) set_differential(F.deg.back(), R.D(d));
  }
  // contraction, built upward from H_{-1} = sigma
  Mat sigma(1, R.dim(0), 2);
  sigma.at(0, G.identity) = 1;
  Mat prev;  // H_{n-1}
  for (int d = 0; d < R.hi; ++d) {
    Mat rhs = Mat::identity(R.dim(d), 2) - (d == 0 ? R.eps * sigma : R.D(d) * prev);
    auto x = RowSolver(R.D(d + 1)).solve(rhs);
    if (!x) throw std::logic_error("contraction: resolution is not exact");
    set_contraction(F.deg[d], *x);
    prev = *x;
  }
  return F;
}

FactorComplex coaugmented_factor(const CompleteResolution& R) {
  if (R.p != 2) throw ModulusMismatch("chain engines run at p = 2");
  FactorComplex F;
  F.group = R.group;
  F.lo = R.lo;
  F.hi = 0;
  const GroupTable& G = *R.group;
  for (int d = R.lo; d <= 0; ++d) {
    if (d == 0) {
      F.deg.push_back(trivial_deg(G));
      if (R.lo < 0) set_differential(F.deg.back(), R.eta);
    } else {
      F.deg.push_back(free_deg(G, R.rank(d)));
      if (d > R.lo) set_differential(F.deg.back(), R.D(d));
    }
  }
  return F;
}

int TensorLayout::comp_of(int s) const {
  for (size_t i = 0; i < comps.size(); ++i)
    if (comps[i].s == s) return int(i);
  return -1;
}

TensorSquare::TensorSquare(FactorComplex F) : F_(std::move(F)) {}

const TensorLayout& TensorSquare::layout(int j) const {
  auto it = layouts_.find(j);
  if (it != layouts_.end()) return *it->second;
  if (!has_degree(j)) throw WindowError("tensor degree " + std::to_string(j) + " outside the window");
  auto L = std::make_unique<TensorLayout>();
  L->degree = j;
  const GroupTable& G = *F_.group;
  const int n = G.n;
  size_t off = 0;
  for (int s = std::max(F_.lo, j - F_.hi); s <= std::min(F_.hi, j - F_.lo); ++s) {
    const FactorDeg &A = F_.at(s), &B = F_.at(j - s);
    TensorComp c{s, j - s, A.dim, B.dim, size_t(gf2::words_for(B.dim)), off};
    off += size_t(A.dim) * c.rw;
    L->comps.push_back(c);
  }
  L->words = off;
  // free generators: (i,e) (x) b for a free first factor, otherwise 1 (x) (i,e)
  for (const auto& c : L->comps) {
    const FactorDeg &A = F_.at(c.s), &B = F_.at(c.t);
    if (A.trivial && B.trivial) throw std::logic_error("k (x) k component is not free");
    if (!A.trivial) {
      for (int i = 0; i < A.rank; ++i)
        for (int b = 0; b < c.db; ++b) {
          for (int g = 0; g < n; ++g) L->gen_pos.push_back(uint32_t(L->bit(c, i * n + g, B.perm[g][b])));
          ++L->ngens;
        }
    } else {
      for (int i = 0; i < B.rank; ++i) {
        for (int g = 0; g < n; ++g) L->gen_pos.push_back(uint32_t(L->bit(c, 0, i * n + g)));
        ++L->ngens;
      }
    }
  }
  return *layouts_.emplace(j, std::move(L)).first->second;
}

void TensorSquare::d_add(int j, const Word* v, Word* out) const {
  const TensorLayout& S = layout(j);
  const TensorLayout& T = layout(j - 1);
  for (const auto& c : S.comps) {
    const FactorDeg &A = F_.at(c.s), &B = F_.at(c.t);
    const Word* V = v + c.off;
    // (d (x) 1): row a goes to the rows listed in D_s[a]
    if (A.has_D) {
      int ti = T.comp_of(c.s - 1);
      if (ti >= 0) {
        const auto& tc = T.comps[ti];
        for (int a = 0; a < c.da; ++a) {
          const Word* row = V + size_t(a) * c.rw;
          if (!gf2::any(row, c.rw)) continue;
          for (int cc : A.Dsp[a]) gf2::xor_into(out + tc.off + size_t(cc) * tc.rw, row, c.rw);
        }
      }
    }
    // (1 (x) d): row a times D_t
    if (B.has_D) {
      int ti = T.comp_of(c.s);
      if (ti >= 0) {
        const auto& tc = T.comps[ti];
        for (int a = 0; a < c.da; ++a) {
          Word* dst = out + tc.off + size_t(a) * tc.rw;
          gf2::for_each_bit(V + size_t(a) * c.rw, c.rw, [&](size_t b) { gf2::xor_into(dst, B.D.row(int(b)), tc.rw); });
        }
      }
    }
  }
}

void TensorSquare::twist_add(int j, const Word* v, Word* out) const {
  const TensorLayout& L = layout(j);
  for (const auto& c : L.comps) {
    const auto& tc = L.comps[L.comp_of(c.t)];
    for (int a = 0; a < c.da; ++a)
      gf2::for_each_bit(v + c.off + size_t(a) * c.rw, c.rw, [&](size_t b) { gf2::flip(out, L.bit(tc, int(b), a)); });
  }
}

void TensorSquare::act_add(int j, const Word* v, int g, Word* out) const {
  const TensorLayout& L = layout(j);
  for (const auto& c : L.comps) {
    const auto& pa = F_.at(c.s).perm[g];
    const auto& pb = F_.at(c.t).perm[g];
    for (int a = 0; a < c.da; ++a)
      gf2::for_each_bit(v + c.off + size_t(a) * c.rw, c.rw, [&](size_t b) { gf2::flip(out, L.bit(c, pa[a], pb[b])); });
  }
}

void TensorSquare::contract_add(int j, const Word* v, Word* out) const {
  const TensorLayout& S = layout(j);
  const TensorLayout& T = layout(j + 1);
  const GroupTable& G = *F_.group;
  for (const auto& c : S.comps) {
    const FactorDeg &A = F_.at(c.s), &B = F_.at(c.t);
    const Word* V = v + c.off;
    if (!A.has_H || (c.s == 0 && !B.has_H)) throw WindowError("contraction beyond the resolution window");
    const auto& tc = T.comps[T.comp_of(c.s + 1)];
    for (int a = 0; a < c.da; ++a) {
      const Word* row = V + size_t(a) * c.rw;
      if (!gf2::any(row, c.rw)) continue;
      for (int cc : A.Hsp[a]) gf2::xor_into(out + tc.off + size_t(cc) * tc.rw, row, c.rw);
    }
    if (c.s == 0) {
      // sigma eps (x) H: P_0 has one generator and eps is 1 on every coordinate
      std::vector<Word> u(c.rw, 0);
      for (int a = 0; a < c.da; ++a) gf2::xor_into(u.data(), V + size_t(a) * c.rw, c.rw);
      const auto& tc0 = T.comps[T.comp_of(0)];
      Word* dst = out + tc0.off + size_t(G.identity) * tc0.rw;
      gf2::for_each_bit(u.data(), c.rw, [&](size_t b) { gf2::xor_into(dst, B.H.row(int(b)), tc0.rw); });
    }
  }
}

int TensorSquare::eval(int j, const Word* v, int s, const std::vector<char>& xa, const std::vector<char>& yb) const {
  const TensorLayout& L = layout(j);
  int ci = L.comp_of(s);
  if (ci < 0) return 0;
  const auto& c = L.comps[ci];
  std::vector<Word> mask(c.rw, 0);
  for (int b = 0; b < c.db; ++b)
    if (yb[b]) gf2::set1(mask.data(), size_t(b));
  int acc = 0;
  for (int a = 0; a < c.da; ++a)
    if (xa[a]) acc ^= gf2::parity_and(v + c.off + size_t(a) * c.rw, mask.data(), c.rw);
  return acc;
}

Mat TensorSquare::component_matrix(int j, const gf2::Block& B, int s) const {
  const TensorLayout& L = layout(j);
  const auto& c = L.comps.at(L.comp_of(s));
  Mat m(B.rows, c.da * c.db, 2);
  for (int r = 0; r < B.rows; ++r)
    for (int a = 0; a < c.da; ++a)
      for (int b = 0; b < c.db; ++b) m.at(r, a * c.db + b) = gf2::get(B.row(r), L.bit(c, a, b));
  return m;
}

EquivSolver::EquivSolver(const GroupTable& G, const Mat& S) : n_(G.n), rS_(S.rows()), rF_(S.cols() / G.n) {
  Mat M(rF_ * n_, rS_ * n_, 2);
  for (int j = 0; j < rF_; ++j)
    for (int g = 0; g < n_; ++g) {
      int gi = G.inv[g];
      for (int k = 0; k < rS_; ++k)
        for (int gp = 0; gp < n_; ++gp) M.at(j * n_ + g, k * n_ + gp) = S(k, j * n_ + G(gi, gp));
    }
  solver_ = gf2::Solver(M);
}

void EquivSolver::solve(const TensorLayout& L, const gf2::Block& Z, gf2::Block& Y) const {
  if (Z.rows != rS_) throw ShapeMismatch("EquivSolver: right-hand side rows");
  Y = gf2::Block(rF_, L.words);
  std::vector<Word> z(gf2::words_for(rS_ * n_)), y(gf2::words_for(rF_ * n_));
  for (int c = 0; c < L.ngens; ++c) {
    std::fill(z.begin(), z.end(), 0);
    const uint32_t* pos = L.gen_pos.data() + size_t(c) * n_;
    bool nonzero = false;
    for (int k = 0; k < rS_; ++k)
      for (int g = 0; g < n_; ++g)
        if (gf2::get(Z.row(k), pos[g])) {
          gf2::set1(z.data(), size_t(k * n_ + g));
          nonzero = true;
        }
    if (!nonzero) continue;
    if (!solver_.solve(z.data(), y.data())) throw std::logic_error("internal: infeasible equivariant lift");
    for (int j = 0; j < rF_; ++j)
      for (int g = 0; g < n_; ++g)
        if (gf2::get(y.data(), size_t(j * n_ + g))) gf2::set1(Y.row(j), pos[g]);
  }
}

gf2::Block apply_free_map(const TensorSquare& T, int j, const Mat& gens_of_D, const gf2::Block& images) {
  const TensorLayout& L = T.layout(j);
  const int n = T.factor().group->n;
  gf2::Block out(gens_of_D.rows(), L.words);
  for (int c = 0; c < gens_of_D.rows(); ++c)
    for (int col = 0; col < gens_of_D.cols(); ++col)
      if (gens_of_D(c, col)) T.act_add(j, images.row(col / n), col % n, out.row(c));
  return out;
}

std::vector<char> functional_mask(const Mat& v, int n) {
  std::vector<char> m(size_t(v.cols()) * n);
  for (int i = 0; i < v.cols(); ++i)
    for (int g = 0; g < n; ++g) m[size_t(i) * n + g] = char(v(0, i) & 1);
  return m;
}

}  // namespace tate
