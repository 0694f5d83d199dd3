#include "tate/resolution.hpp"

#include "json.hpp"

namespace tate {

void act_free(const GroupTable& G, const uint16_t* v, int rank, int h, uint16_t* out) {
  const int n = G.n;
  for (int j = 0; j < rank; ++j)
    for (int g = 0; g < n; ++g) out[j * n + G(g, h)] = v[j * n + g];
}

Mat expand_on_free_target(const GroupTable& G, const Mat& gen_images) {
  const int n = G.n, r = gen_images.rows(), d = gen_images.cols();
  if (d % n) throw ShapeMismatch("target is not a free module");
  Mat out(r * n, d, gen_images.prime());
  for (int j = 0; j < r; ++j)
    for (int g = 0; g < n; ++g) act_free(G, gen_images.row(j), d / n, g, out.row(j * n + g));
  return out;
}

Mat generator_rows(const GroupTable& G, const Mat& full) {
  const int n = G.n;
  std::vector<int> idx;
  for (int j = 0; j < full.rows() / n; ++j) idx.push_back(j * n + G.identity);
  return full.select_rows(idx);
}

namespace {

// minimal generators of the G-stable subspace spanned by rows of B inside a rank-r free module
Mat minimal_generators(const GroupPtr& G, uint32_t p, int r, const Mat& B) {
  auto P = free_module(G, r, p);
  Mat J = radical_span(P, B);
  Mat span = J;
  int rk = J.rows();
  Mat gens(0, B.cols(), p);
  for (int i = 0; i < B.rows() && rk < B.rows(); ++i) {
    Mat e = B.row_block(i, 1);
    Mat trial = Mat::vstack(span, e);
    int r2 = rank_of(trial);
    if (r2 > rk) {
      span = trial;
      rk = r2;
      gens = Mat::vstack(gens, e);
    }
  }
  return gens;
}

}  // namespace

AugmentedResolution minimal_resolution(const ModulePtr& M, int length) {
  require_p_group(M->group, M->p);
  AugmentedResolution R;
  R.target = M;
  R.group = M->group;
  R.p = M->p;
  auto pc = projective_cover(M);
  R.rank.push_back(pc.generators.rows());
  R.D.push_back(Mat());
  R.eps = pc.cover.m;
  R.tail_kernel = row_space_basis(left_kernel(R.eps));
  extend_resolution(R, length);
  return R;
}

void extend_resolution(AugmentedResolution& R, int length) {
  const GroupTable& G = *R.group;
  while (R.length() < length) {
    int m = R.length() + 1;
    const Mat& K = R.tail_kernel;
    int prev_rank = R.rank[m - 1];
    Mat gens = K.rows() ? minimal_generators(R.group, R.p, prev_rank, K) : Mat(0, prev_rank * G.n, R.p);
    Mat D = expand_on_free_target(G, gens);
    R.rank.push_back(gens.rows());
    R.D.push_back(D);
    R.tail_kernel = row_space_basis(left_kernel(D));
  }
}

bool AugmentedResolution::verify() const {
  if (rank_of(eps) != target->dim) return false;
  if (length() >= 1 && !(D[1] * eps).is_zero()) return false;
  for (int m = 2; m <= length(); ++m)
    if (!(D[m] * D[m - 1]).is_zero()) return false;
  // exactness: ker eps = im D1, ker D_m = im D_{m+1}
  for (int m = 0; m < length(); ++m) {
    int rk_out = m == 0 ? rank_of(eps) : rank_of(D[m]);
    if (rk_out + rank_of(D[m + 1]) != dim(m)) return false;
  }
  return true;
}

int CompleteResolution::rank(int m) const {
  if (!in_window(m)) throw WindowError("degree " + std::to_string(m) + " outside the resolution window");
  return ranks[m - lo];
}

const Mat& CompleteResolution::D(int m) const {
  if (m <= lo || m > hi) throw WindowError("differential degree " + std::to_string(m) + " outside the window");
  return Ds[m - lo];
}

CompleteResolution complete_resolution_from(const AugmentedResolution& pos0, int N, int M) {
  if (N < 1 || M < 0) throw WindowError("window must satisfy -N < 0 <= M");
  AugmentedResolution pos = pos0;
  extend_resolution(pos, std::max(M, N - 1));
  CompleteResolution C;
  C.group = pos.group;
  C.p = pos.p;
  C.lo = -N;
  C.hi = M;
  const int n = C.group->n;
  for (int m = C.lo; m <= C.hi; ++m) C.ranks.push_back(m >= 0 ? pos.rank[m] : pos.rank[-m - 1]);
  C.Ds.resize(C.hi - C.lo + 1);
  for (int m = C.lo + 1; m <= C.hi; ++m) {
    if (m >= 1)
      C.Ds[m - C.lo] = pos.D[m];
    else if (m == 0)
      C.Ds[m - C.lo] = Mat(n, n, C.p);
    else
      C.Ds[m - C.lo] = pos.D[-m].transpose();
  }
  C.eps = pos.eps;
  C.eta = C.eps.transpose();  // the norm element of P_{-1} = kG
  if (C.lo < 0 && C.hi >= 0) C.Ds[0 - C.lo] = C.eps * C.eta;
  C.positive = pos;
  return C;
}

CompleteResolution complete_resolution(const GroupPtr& G, int N, int M, uint32_t p) {
  if (G->n % p) throw UnsupportedGroup("p does not divide the group order; Tate cohomology vanishes");
  auto k = trivial_module(G, p);
  return complete_resolution_from(minimal_resolution(k, std::max(M, N - 1)), N, M);
}

bool CompleteResolution::verify() const {
  for (int m = lo + 2; m <= hi; ++m)
    if (!(D(m) * D(m - 1)).is_zero()) return false;
  for (int m = lo + 1; m < hi; ++m)
    if (rank_of(D(m)) + rank_of(D(m + 1)) != dim(m)) return false;
  if (in_window(-1) && in_window(0) && eps * eta != D(0)) return false;
  return true;
}

std::vector<Mat> lift_over_resolutions(const ModuleMap& f, const AugmentedResolution& A, const AugmentedResolution& B,
                                       int depth) {
  if (depth > A.length() || depth > B.length()) throw WindowError("lift depth exceeds the resolutions");
  const GroupTable& G = *A.group;
  std::vector<Mat> out;
  // degree 0: f_0 eps_B = eps_A f
  {
    Mat rhs = generator_rows(G, A.eps * f.m);
    RowSolver rs(B.eps);
    auto x = rs.solve(rhs);
    if (!x) throw std::runtime_error("lift_over_resolutions: no solution at degree 0");
    out.push_back(expand_on_free_target(G, *x));
  }
  for (int m = 1; m <= depth; ++m) {
    Mat rhs = generator_rows(G, A.D[m] * out[m - 1]);
    RowSolver rs(B.D[m]);
    auto x = rs.solve(rhs);
    if (!x) throw std::runtime_error("lift_over_resolutions: no solution at degree " + std::to_string(m));
    out.push_back(expand_on_free_target(G, *x));
  }
  return out;
}

std::string resolution_json(const CompleteResolution& R, bool with_matrices) {
  nlohmann::ordered_json j;
  j["group"] = R.group->name;
  j["order"] = R.group->n;
  j["prime"] = R.p;
  j["window"] = {R.lo, R.hi};
  nlohmann::ordered_json degs = nlohmann::ordered_json::array();
  for (int m = R.lo; m <= R.hi; ++m) {
    nlohmann::ordered_json d;
    d["degree"] = m;
    d["rank"] = R.rank(m);
    d["dim"] = R.dim(m);
    if (with_matrices && m > R.lo) d["differential"] = R.D(m).to_vectors();
    degs.push_back(d);
  }
  j["degrees"] = degs;
  if (with_matrices) {
    j["augmentation"] = R.eps.transpose().to_vectors()[0];
    j["coaugmentation"] = R.eta.to_vectors()[0];
  }
  return j.dump(1);
}

}  // namespace tate
