#include "tate/tate.hpp"

#include <sstream>

namespace tate {

TateClass TateClass::operator+(const TateClass& o) const {
  if (degree != o.degree) throw DegreeMismatch("adding classes of different degrees");
  return {degree, v + o.v};
}

std::string class_str(const TateClass& a) {
  std::ostringstream os;
  os << "deg " << a.degree << " [";
  for (int j = 0; j < a.v.cols(); ++j) os << (j ? " " : "") << a.v(0, j);
  os << "]";
  return os.str();
}

namespace {
// room for products and squares of window classes, and for the duals of window degrees
int lower_bound_for(int lo, int hi) { return std::min({2 * lo - 1, -hi - 1, -1}); }
int upper_bound_for(int lo, int hi) { return std::max({2 * hi + 1, -lo - 1, 0}); }
}  // namespace

TateRing::TateRing(GroupPtr G, int lo, int hi, uint32_t p) : lo_(lo), hi_(hi) {
  if (lo > hi) throw WindowError("empty class window");
  res_ = complete_resolution(G, -lower_bound_for(lo, hi), upper_bound_for(lo, hi), p);
}

TateRing::TateRing(const AugmentedResolution& pos, int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw WindowError("empty class window");
  res_ = complete_resolution_from(pos, -lower_bound_for(lo, hi), upper_bound_for(lo, hi));
}

void TateRing::check(const TateClass& a) const {
  if (!covers(a.degree)) throw WindowError("class degree " + std::to_string(a.degree) + " outside the window");
  if (a.v.rows() != 1 || a.v.cols() != dim(a.degree)) throw ShapeMismatch("class vector has the wrong length");
}

TateClass TateRing::basis(int n, int j) const {
  TateClass c = zero(n);
  if (j < 0 || j >= c.v.cols()) throw std::out_of_range("basis index");
  c.v.at(0, j) = 1;
  return c;
}

TateClass TateRing::zero(int n) const { return {n, Mat(1, dim(n), prime())}; }

TateClass TateRing::from_vector(int n, const std::vector<int>& coeffs) const {
  TateClass c = zero(n);
  if (int(coeffs.size()) != c.v.cols()) throw ShapeMismatch("coefficient vector length");
  for (int j = 0; j < c.v.cols(); ++j) c.v.set(0, j, uint32_t(((coeffs[j] % int(prime())) + prime()) % prime()));
  return c;
}

const RowSolver& TateRing::k_solver(int m) const {
  auto it = ksolvers_.find(m);
  if (it == ksolvers_.end()) it = ksolvers_.emplace(m, RowSolver(res_.D(m))).first;
  return it->second;
}

const PSideSolver& TateRing::p_solver(int m) const {
  auto it = psolvers_.find(m);
  if (it == psolvers_.end()) it = psolvers_.emplace(m, PSideSolver(*group(), res_.gens(m))).first;
  return it->second;
}

const Mat& TateRing::yoneda_lift(int q, int c, int j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_tuple(q, c, j);
  auto it = lifts_.find(key);
  if (it != lifts_.end()) return it->second;
  const GroupTable& G = *group();
  Mat out;
  if (j == 0) {
    out = Mat(dim(q), res_.dim(0), prime());
    out.at(c, G.identity) = 1;
  } else if (j > 0) {
    const Mat& prev = yoneda_lift(q, c, j - 1);
    Mat rhs = res_.gens(q + j) * expand_on_free_target(G, prev);
    auto x = k_solver(j).solve(rhs);
    if (!x) throw std::logic_error("cup lift failed going up (resolution not exact?)");
    out = *x;
  } else {
    const Mat& next = yoneda_lift(q, c, j + 1);
    auto y = p_solver(q + j + 1).solve_standard(next * res_.D(j + 1));
    if (!y) throw std::logic_error("cup lift failed going down (resolution not exact?)");
    out = *y;
  }
  return lifts_.emplace(key, std::move(out)).first->second;
}

TateClass TateRing::cup(const TateClass& a, const TateClass& b) const {
  check(a);
  check(b);
  const int p = a.degree, q = b.degree, n = group()->n;
  if (!covers(p + q)) throw WindowError("product degree " + std::to_string(p + q) + " outside the window");
  TateClass out = zero(p + q);
  Mat aexp(res_.dim(p), 1, prime());
  for (int i = 0; i < dim(p); ++i)
    for (int g = 0; g < n; ++g) aexp.at(i * n + g, 0) = a.v(0, i);
  Fp F(prime());
  for (int c = 0; c < dim(q); ++c) {
    uint32_t bc = b.v(0, c);
    if (!bc) continue;
    Mat col = yoneda_lift(q, c, p) * aexp;
    for (int k = 0; k < out.v.cols(); ++k) out.v.at(0, k) = uint16_t(F.add(out.v(0, k), F.mul(bc, col(k, 0))));
  }
  return out;
}

Mat TateRing::left_mult_matrix(const TateClass& a, int q) const {
  Mat M(dim(q), dim(a.degree + q), prime());
  for (int i = 0; i < dim(q); ++i) {
    auto c = cup(a, basis(q, i));
    for (int k = 0; k < M.cols(); ++k) M.at(i, k) = c.v(0, k);
  }
  return M;
}

uint32_t TateRing::pairing(const TateClass& a, const TateClass& b) const {
  if (a.degree + b.degree != -1) throw DegreeMismatch("pairing needs degrees summing to -1");
  return cup(a, b).v(0, 0);  // Ĥ^{-1} is one-dimensional, spanned by the canonical generator
}

Mat TateRing::gram(int n) const {
  Mat M(dim(n), dim(-1 - n), prime());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) M.at(i, j) = uint16_t(pairing(basis(n, i), basis(-1 - n, j)));
  return M;
}

Mat TateRing::restriction_matrix(int n, const TateRing& K, const Embedding& e) const {
  e.validate();
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const GroupTable& G = *group();
  const GroupTable& H = *K.group();
  if (e.target->n != G.n || e.source->n != H.n) throw std::invalid_argument("embedding does not match the groups");
  if (K.prime() != prime()) throw ModulusMismatch("restriction across different primes");
  if (!covers(n) || !K.covers(n)) throw WindowError("restriction degree outside a window");
  const uint32_t p = prime();
  const int nG = G.n, nK = H.n;
  // left coset representatives r: every g is uniquely r * e(kappa)
  std::vector<int> reps;
  std::vector<char> seen(nG, 0);
  for (int g = 0; g < nG; ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (int k = 0; k < nK; ++k) seen[G(g, e.map[k])] = 1;
  }
  const int nr = int(reps.size());
  // f_m as generator images: rank^K(m) rows, vectors in P^G_m
  auto expandK = [&](const Mat& gens) {
    const int rG = gens.cols() / nG;
    Mat out(gens.rows() * nK, gens.cols(), p);
    for (int j = 0; j < gens.rows(); ++j)
      for (int k = 0; k < nK; ++k) act_free(G, gens.row(j), rG, e.map[k], out.row(j * nK + k));
    return out;
  };
  Mat f(K.dim(0), res_.dim(0), p);
  f.at(0, G.identity) = 1;
  const int step = n >= 0 ? 1 : -1;
  for (int m = 0; m != n;) {
    m += step;
    if (m > 0) {
      Mat rhs = K.res().gens(m) * expandK(f);
      auto x = k_solver(m).solve(rhs);
      if (!x) throw std::logic_error("restriction lift failed");
      f = *x;
    } else {
      PSideSolver ps(H, K.res().gens(m + 1));
      Mat Z = f * res_.D(m + 1);
      const int rG = res_.rank(m), rS = Z.rows();
      Mat zc(rG * nr, rS * nK, p);
      for (int j = 0; j < rG; ++j)
        for (int r = 0; r < nr; ++r)
          for (int k = 0; k < rS; ++k)
            for (int kap = 0; kap < nK; ++kap)
              zc.at(j * nr + r, k * nK + kap) = Z(k, j * nG + G(reps[r], e.map[kap]));
      auto y = ps.solve_free(zc);
      if (!y) throw std::logic_error("restriction lift failed");
      const int rK = K.dim(m);
      Mat next(rK, res_.dim(m), p);
      for (int j = 0; j < rG; ++j)
        for (int r = 0; r < nr; ++r)
          for (int jp = 0; jp < rK; ++jp)
            for (int kap = 0; kap < nK; ++kap)
              next.at(jp, j * nG + G(reps[r], e.map[kap])) = (*y)(j * nr + r, jp * nK + kap);
      f = next;
    }
  }
  Fp F(p);
  Mat R(dim(n), K.dim(n), p);
  for (int i = 0; i < dim(n); ++i)
    for (int k = 0; k < K.dim(n); ++k) {
      uint32_t s = 0;
      for (int g = 0; g < nG; ++g) s = F.add(s, f(k, i * nG + g));
      R.at(i, k) = uint16_t(s);
    }
  return R;
}

TateClass TateRing::restrict_class(const TateClass& a, const TateRing& K, const Embedding& e) const {
  check(a);
  return {a.degree, a.v * restriction_matrix(a.degree, K, e)};
}

}  // namespace tate
