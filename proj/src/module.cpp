#include "tate/module.hpp"

namespace tate {

namespace {
void same_group(const ModulePtr& a, const ModulePtr& b) {
  if (a->group != b->group && (a->group->n != b->group->n || a->group->mult != b->group->mult))
    throw std::invalid_argument("modules over different groups");
  if (a->p != b->p) throw ModulusMismatch("modules over different primes");
}

Mat vec_rows(const Mat& X) {
  Mat v(X.rows() * X.cols(), 1, X.prime());
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j) v.at(i * X.cols() + j, 0) = X(i, j);
  return v;
}

Mat unvec_rows(const Mat& v, int r, int c) {
  Mat X(r, c, v.prime());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) X.at(i, j) = v(i * c + j, 0);
  return X;
}
}  // namespace

void require_p_group(const GroupPtr& G, uint32_t p) {
  if (!G->is_p_group(int(p)))
    throw UnsupportedGroup("group " + G->name + " is not a " + std::to_string(p) + "-group");
}

bool KGModule::check_action() const {
  if (int(rho.size()) != group->n) return false;
  if (rho[group->identity] != Mat::identity(dim, p)) return false;
  for (int g = 0; g < group->n; ++g)
    for (int h = 0; h < group->n; ++h)
      if (rho[g] * rho[h] != rho[(*group)(g, h)]) return false;
  return true;
}

bool ModuleMap::is_equivariant() const {
  for (int g = 0; g < source->group->n; ++g)
    if (source->rho[g] * m != m * target->rho[g]) return false;
  return true;
}

ModulePtr trivial_module(const GroupPtr& G, uint32_t p) {
  auto M = std::make_shared<KGModule>();
  M->group = G;
  M->p = p;
  M->dim = 1;
  M->rho.assign(G->n, Mat::identity(1, p));
  return M;
}

ModulePtr free_module(const GroupPtr& G, int rank, uint32_t p) {
  auto M = std::make_shared<KGModule>();
  M->group = G;
  M->p = p;
  const int n = G->n;
  M->dim = rank * n;
  for (int h = 0; h < n; ++h) {
    Mat r(M->dim, M->dim, p);
    for (int j = 0; j < rank; ++j)
      for (int g = 0; g < n; ++g) r.at(j * n + g, j * n + (*G)(g, h)) = 1;
    M->rho.push_back(r);
  }
  return M;
}

ModulePtr tensor_module(const ModulePtr& A, const ModulePtr& B) {
  same_group(A, B);
  auto M = std::make_shared<KGModule>();
  M->group = A->group;
  M->p = A->p;
  M->dim = A->dim * B->dim;
  for (int g = 0; g < A->group->n; ++g) M->rho.push_back(kronecker(A->rho[g], B->rho[g]));
  return M;
}

ModulePtr dual_module(const ModulePtr& A) {
  auto M = std::make_shared<KGModule>();
  M->group = A->group;
  M->p = A->p;
  M->dim = A->dim;
  for (int g = 0; g < A->group->n; ++g) M->rho.push_back(A->rho[A->group->inv[g]].transpose());
  return M;
}

ModulePtr restrict_module(const ModulePtr& A, const Embedding& e) {
  if (e.target->n != A->group->n) throw std::invalid_argument("embedding target is not the module's group");
  auto M = std::make_shared<KGModule>();
  M->group = e.source;
  M->p = A->p;
  M->dim = A->dim;
  for (int k = 0; k < e.source->n; ++k) M->rho.push_back(A->rho[e.map[k]]);
  return M;
}

ModulePtr direct_sum(const ModulePtr& A, const ModulePtr& B) {
  same_group(A, B);
  auto M = std::make_shared<KGModule>();
  M->group = A->group;
  M->p = A->p;
  M->dim = A->dim + B->dim;
  for (int g = 0; g < A->group->n; ++g) {
    Mat r(M->dim, M->dim, M->p);
    for (int i = 0; i < A->dim; ++i)
      for (int j = 0; j < A->dim; ++j) r.at(i, j) = A->rho[g](i, j);
    for (int i = 0; i < B->dim; ++i)
      for (int j = 0; j < B->dim; ++j) r.at(A->dim + i, A->dim + j) = B->rho[g](i, j);
    M->rho.push_back(r);
  }
  return M;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) { return {f.source, g.target, f.m * g.m}; }
ModuleMap zero_map(const ModulePtr& M, const ModulePtr& N) { return {M, N, Mat(M->dim, N->dim, M->p)}; }
ModuleMap identity_map(const ModulePtr& M) { return {M, M, Mat::identity(M->dim, M->p)}; }
ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g) {
  return {tensor_module(f.source, g.source), tensor_module(f.target, g.target), kronecker(f.m, g.m)};
}

std::vector<ModuleMap> hom_equivariant_basis(const ModulePtr& M, const ModulePtr& N) {
  same_group(M, N);
  const uint32_t p = M->p;
  const int dm = M->dim, dn = N->dim;
  Fp f(p);
  std::vector<ModuleMap> out;
  if (dm == 0 || dn == 0) return out;
  Mat A(0, dm * dn, p);
  for (int g : M->group->generators()) {
    // rho_M F - F rho_N
    Mat blk = kronecker(M->rho[g], Mat::identity(dn, p)) - kronecker(Mat::identity(dm, p), N->rho[g].transpose());
    A = Mat::vstack(A, blk);
  }
  if (A.rows() == 0) A = Mat(1, dm * dn, p);
  auto sol = solve_linear(A, Mat(A.rows(), 1, p));
  for (int k = 0; k < sol.kernel.cols(); ++k) out.push_back({M, N, unvec_rows(sol.kernel.col_block(k, 1), dm, dn)});
  return out;
}

Mat coordinates_in(const Mat& B, const Mat& V) {
  // B in rref: coordinate of v = entries of v at pivot columns
  auto rr = rref_decompose(B);
  Mat C(V.rows(), B.rows(), V.prime());
  for (int q = 0; q < V.rows(); ++q)
    for (int i = 0; i < rr.rank; ++i) C.at(q, i) = V(q, rr.pivots[i]);
  if (C * B != V) throw std::runtime_error("coordinates_in: vector outside the span");
  return C;
}

Submodule submodule(const ModulePtr& M, const Mat& rows) {
  Mat basis = rows.rows() ? row_space_basis(rows) : Mat(0, M->dim, M->p);
  auto S = std::make_shared<KGModule>();
  S->group = M->group;
  S->p = M->p;
  S->dim = basis.rows();
  for (int g = 0; g < M->group->n; ++g) {
    if (S->dim == 0) {
      S->rho.push_back(Mat(0, 0, M->p));
      continue;
    }
    S->rho.push_back(coordinates_in(basis, basis * M->rho[g]));
  }
  Submodule out{S, {S, M, basis}, basis};
  return out;
}

Submodule kernel_module(const ModuleMap& f) {
  Mat K = left_kernel(f.m);
  return submodule(f.source, K);
}

Mat radical_span(const ModulePtr& M, const Mat& basis) {
  Mat acc(0, M->dim, M->p);
  Mat I = Mat::identity(M->dim, M->p);
  for (int g : M->group->generators()) acc = Mat::vstack(acc, basis * (M->rho[g] - I));
  // (gh - 1) = (g - 1)h + (h - 1): generators suffice once the span is closed under the action
  if (acc.rows() == 0) return acc;
  Mat cur = row_space_basis(acc);
  while (true) {
    Mat more = cur;
    for (int g : M->group->generators()) more = Mat::vstack(more, cur * M->rho[g]);
    Mat nxt = row_space_basis(more);
    if (nxt.rows() == cur.rows()) return cur;
    cur = nxt;
  }
}

ProjectiveCover projective_cover(const ModulePtr& M) {
  require_p_group(M->group, M->p);
  const int d = M->dim, n = M->group->n;
  Mat I = Mat::identity(d, M->p);
  Mat J = radical_span(M, I);
  // greedy: standard basis vectors not in span(J + chosen)
  Mat span = J;
  Mat gens(0, d, M->p);
  int rk = J.rows();
  for (int i = 0; i < d && rk < d; ++i) {
    Mat e = I.row_block(i, 1);
    Mat trial = Mat::vstack(span, e);
    int r2 = rank_of(trial);
    if (r2 > rk) {
      span = trial;
      rk = r2;
      gens = Mat::vstack(gens, e);
    }
  }
  const int r = gens.rows();
  auto F = free_module(M->group, r, M->p);
  Mat cov(r * n, d, M->p);
  for (int j = 0; j < r; ++j)
    for (int g = 0; g < n; ++g) {
      Mat img = gens.row_block(j, 1) * M->rho[g];
      for (int c = 0; c < d; ++c) cov.at(j * n + g, c) = img(0, c);
    }
  return {F, {F, M, cov}, gens};
}

OmegaResult omega(const ModulePtr& M) {
  auto pc = projective_cover(M);
  auto ker = kernel_module(pc.cover);
  return {ker.module, ker.inclusion, pc.cover};
}

bool is_projective(const ModulePtr& M) {
  auto pc = projective_cover(M);
  return pc.free->dim == M->dim;
}

std::optional<Mat> free_basis(const ModulePtr& M) {
  auto pc = projective_cover(M);
  if (pc.free->dim != M->dim) return std::nullopt;
  return pc.generators;
}

ModulePtr induced_free_cover(const ModulePtr& M) {
  auto F = std::make_shared<KGModule>();
  F->group = M->group;
  F->p = M->p;
  const int n = M->group->n;
  F->dim = M->dim * n;
  for (int h = 0; h < n; ++h) {
    Mat r(F->dim, F->dim, M->p);
    for (int i = 0; i < M->dim; ++i)
      for (int g = 0; g < n; ++g) r.at(i * n + g, i * n + (*M->group)(g, h)) = 1;
    F->rho.push_back(r);
  }
  return F;
}

ModuleMap iota_map(const ModulePtr& M) {
  auto F = induced_free_cover(M);
  const int n = M->group->n, d = M->dim;
  Mat io(d, d * n, M->p);
  Fp f(M->p);
  for (int g = 0; g < n; ++g) {
    int gi = M->group->inv[g];
    const Mat& r = M->rho[g];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (r(a, b)) io.at(a, b * n + gi) = uint16_t(f.add(io(a, b * n + gi), r(a, b)));
  }
  return {M, F, io};
}

StableZeroResult is_stably_zero(const ModuleMap& fmap) {
  const ModulePtr& M = fmap.source;
  const ModulePtr& N = fmap.target;
  same_group(M, N);
  StableZeroResult res;
  const int dm = M->dim, dn = N->dim, n = M->group->n;
  const uint32_t p = M->p;
  if (fmap.m.is_zero()) {
    res.stably_zero = true;
    res.witness = zero_map(induced_free_cover(M), N);
    return res;
  }
  // f = sum_g rho_M(g) X rho_N(g^{-1}),  X = images of the free generators b_i (x) e
  Mat A(dm * dn, dm * dn, p);
  for (int g = 0; g < n; ++g) A = A + kronecker(M->rho[g], N->rho[M->group->inv[g]].transpose());
  auto sol = solve_linear(A, vec_rows(fmap.m));
  if (!sol.X) return res;
  Mat X = unvec_rows(*sol.X, dm, dn);
  auto F = induced_free_cover(M);
  Mat h(dm * n, dn, p);
  for (int i = 0; i < dm; ++i)
    for (int g = 0; g < n; ++g) {
      Mat row = X.row_block(i, 1) * N->rho[g];
      for (int c = 0; c < dn; ++c) h.at(i * n + g, c) = row(0, c);
    }
  res.stably_zero = true;
  res.witness = ModuleMap{F, N, h};
  return res;
}

}  // namespace tate
