#include "tate/power_ops.hpp"

namespace tate {

using gf2::Block;
using gf2::Word;

// ---------- engine C ----------

CLift::CLift(const TateRing& R)
    : R_(R), pos_(positive_factor(R.res())), neg_(coaugmented_factor(R.res())) {
  const Mat& eps = R.res().eps;
  eps_mask_.resize(eps.rows());
  for (int a = 0; a < eps.rows(); ++a) eps_mask_[a] = char(eps(a, 0));
}

void CLift::dQ_add(int q, const Word* v, Word* out) const {
  if (q >= 1) return pos_.d_add(q, v, out);
  if (q <= -1) return neg_.d_add(q, v, out);
  // splice
  int e = pos_.eval(0, v, 0, eps_mask_, eps_mask_);
  if (!e) return;
  const TensorLayout& T = neg_.layout(-1);
  const Mat& eta = R_.res().eta;
  for (const auto& tc : T.comps) {
    for (int a = 0; a < eta.cols(); ++a) {
      if (!eta(0, a)) continue;
      if (tc.s == -1) gf2::flip(out, T.bit(tc, a, 0));  // eta (x) 1
      else gf2::flip(out, T.bit(tc, 0, a));             // 1 (x) eta
    }
  }
}

Block CLift::dQ_rows(int q, const Block& B) const {
  Block out(B.rows, square(q - 1).layout(q - 1).words);
  for (int r = 0; r < B.rows; ++r) dQ_add(q, B.row(r), out.row(r));
  return out;
}

const EquivSolver& CLift::solver(int m) const {
  auto it = solvers_.find(m);
  if (it == solvers_.end())
    it = solvers_.emplace(m, std::make_unique<EquivSolver>(*R_.group(), R_.res().gens(m))).first;
  return *it->second;
}

Block CLift::twisted_plus(int j, int m) const {
  const Block& B = component(j - 1, m);
  const int q = m + j - 1;
  Block out = B;
  for (int r = 0; r < B.rows; ++r) square(q).twist_add(q, B.row(r), out.row(r));
  return out;
}

const Block& CLift::component(int j, int m) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(j, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (j < 0) throw std::invalid_argument("negative cup-i index");
  if (!R_.covers(m) || !R_.covers(m + j)) throw WindowError("lift component outside the resolution window");
  Block B = compute(j, m);
  return memo_.emplace(key, std::move(B)).first->second;
}

Block CLift::compute(int j, int m) const {
  const auto& res = R_.res();
  const GroupTable& G = *R_.group();
  const int q = m + j;
  const TensorSquare& Sq = square(q);
  const TensorLayout& L = Sq.layout(q);
  const int r = res.rank(m);
  if (j >= 1 && m >= -j && m <= -1) return Block(r, L.words);  // rigidified zone
  if (m >= 0) {
    Block rhs;
    if (j == 0 && m == 0) {
      Block out(r, L.words);
      gf2::set1(out.row(0), L.bit(L.comps[0], G.identity, G.identity));
      return out;
    }
    const int qr = q - 1;
    rhs = Block(r, pos_.layout(qr).words);
    if (j >= 1) rhs = twisted_plus(j, m);
    if (m >= 1) {
      Block dm = apply_free_map(pos_, qr, res.gens(m), component(j, m - 1));
      gf2::xor_into(rhs.data.data(), dm.data.data(), rhs.data.size());
    }
    Block out(r, L.words);
    for (int c = 0; c < r; ++c) pos_.contract_add(qr, rhs.row(c), out.row(c));
    return out;
  }
  // negative source below the zone: D_{m+1} F_m = (1+T) g_{j-1}(m+1) + F_{m+1} dQ
  Block Z = dQ_rows(q + 1, component(j, m + 1));
  if (j >= 1) {
    Block t = twisted_plus(j, m + 1);
    gf2::xor_into(Z.data.data(), t.data.data(), Z.data.size());
  }
  Block Y;
  solver(m + 1).solve(L, Z, Y);
  return Y;
}

Block CLift::relation_residual(int j, int m) const {
  const auto& res = R_.res();
  const int q = m + j;
  Block out = dQ_rows(q, component(j, m));
  if (R_.covers(m - 1)) {
    Block dm = apply_free_map(square(q - 1), q - 1, res.gens(m), component(j, m - 1));
    gf2::xor_into(out.data.data(), dm.data.data(), out.data.size());
  }
  if (j >= 1) {
    Block t = twisted_plus(j, m);
    gf2::xor_into(out.data.data(), t.data.data(), out.data.size());
  }
  return out;
}

TateClass CLift::P(const TateClass& x, int i) const {
  const int n = x.degree, src = 2 * n - i;
  if (!R_.covers(src)) throw WindowError("result degree outside the resolution window");
  TateClass out = R_.zero(src);
  if (i < 0) return out;
  if (i >= 1 && src >= -i && src <= -1) return out;
  const Block& B = component(i, src);
  const int g = R_.group()->n;
  auto mask = functional_mask(x.v, g);
  for (int k = 0; k < B.rows; ++k) out.v.at(0, k) = uint16_t(square(2 * n).eval(2 * n, B.row(k), n, mask, mask));
  return out;
}

TateClass CLift::Q(const TateClass& x, int s) const { return P(x, x.degree + s); }

TateClass CLift::diagonal_cup(const TateClass& a, const TateClass& b) const {
  const int p = a.degree, q = b.degree, n = p + q;
  if ((p >= 0) != (q >= 0)) throw std::invalid_argument("diagonal cup needs degrees of the same sign");
  if (!R_.covers(n)) throw WindowError("product degree outside the resolution window");
  const Block& B = component(0, n);
  const int g = R_.group()->n;
  auto ma = functional_mask(a.v, g), mb = functional_mask(b.v, g);
  TateClass out = R_.zero(n);
  for (int k = 0; k < B.rows; ++k) out.v.at(0, k) = uint16_t(square(n).eval(n, B.row(k), p, ma, mb));
  return out;
}

// ---------- negative complexes ----------

bool NegativeComplex::verify() const {
  const int n = group->n;
  if (eta.cols() != dim(0)) return false;
  if (lo < 0 && !(eta * D[0]).is_zero()) return false;
  for (int m = 0; m > lo + 1; --m)
    if (!(D[-m] * D[-m + 1]).is_zero()) return false;
  // exact at X_0 (kernel = image of eta) and below
  if (lo < 0 && rank_of(D[0]) + 1 != dim(0)) return false;
  for (int m = -1; m > lo; --m)
    if (rank_of(D[-m - 1]) + rank_of(D[-m]) != dim(m)) return false;
  (void)n;
  return true;
}

NegativeComplex negative_part(const CompleteResolution& R) {
  NegativeComplex X;
  X.group = R.group;
  X.lo = R.lo + 1;
  for (int m = 0; m >= X.lo; --m) X.rank.push_back(R.rank(m - 1));
  for (int m = 0; m > X.lo; --m) X.D.push_back(R.D(m - 1));
  X.eta = R.eta;
  return X;
}

NegativeComplex tensor_negative(const NegativeComplex& X, const NegativeComplex& Y, const GroupPtr& prod) {
  const GroupTable& GP = *prod;
  const int n1 = X.group->n, n2 = Y.group->n;
  if (GP.n != n1 * n2) throw std::invalid_argument("product group order mismatch");
  NegativeComplex T;
  T.group = prod;
  T.lo = std::max(X.lo, Y.lo);
  // generator offsets of component (a, m - a) inside T_m
  auto comps = [&](int m) {
    std::vector<std::pair<int, int>> out;  // (a, offset)
    int off = 0;
    for (int a = 0; a >= m; --a) {
      int b = m - a;
      if (a < X.lo || b < Y.lo) continue;
      out.push_back({a, off});
      off += X.rank.at(-a) * Y.rank.at(-b);
    }
    return std::make_pair(out, off);
  };
  for (int m = 0; m >= T.lo; --m) T.rank.push_back(comps(m).second);
  auto coord = [&](int gen, int g1, int g2) { return gen * (n1 * n2) + g1 * n2 + g2; };
  for (int m = 0; m > T.lo; --m) {
    auto [src, rs] = comps(m);
    auto [tgt, rt] = comps(m - 1);
    auto offset_of = [&](const std::vector<std::pair<int, int>>& cs, int a) {
      for (auto& [aa, off] : cs)
        if (aa == a) return off;
      return -1;
    };
    Mat gens(rs, rt * n1 * n2, 2);
    for (auto& [a, off] : src) {
      const int b = m - a, r1 = X.rank.at(-a), r2 = Y.rank.at(-b);
      for (int j1 = 0; j1 < r1; ++j1)
        for (int j2 = 0; j2 < r2; ++j2) {
          int row = off + j1 * r2 + j2;
          // d(e_j1) (x) e_j2
          if (a - 1 >= X.lo) {
            int to = offset_of(tgt, a - 1);
            const Mat& D1 = X.D.at(-a);
            const int r1t = X.rank.at(-(a - 1));
            for (int k1 = 0; k1 < r1t; ++k1)
              for (int h = 0; h < n1; ++h)
                if (D1(j1 * n1 + X.group->identity, k1 * n1 + h))
                  gens.at(row, coord(to + k1 * r2 + j2, h, Y.group->identity)) ^= 1;
          }
          if (b - 1 >= Y.lo) {
            int to = offset_of(tgt, a);
            const Mat& D2 = Y.D.at(-b);
            const int r2t = Y.rank.at(-(b - 1));
            for (int k2 = 0; k2 < r2t; ++k2)
              for (int h = 0; h < n2; ++h)
                if (D2(j2 * n2 + Y.group->identity, k2 * n2 + h))
                  gens.at(row, coord(to + j1 * r2t + k2, X.group->identity, h)) ^= 1;
          }
        }
    }
    T.D.push_back(expand_on_free_target(GP, gens));
  }
  if (X.rank.at(0) != 1 || Y.rank.at(0) != 1) throw std::invalid_argument("degree-0 terms must be kG");
  T.eta = Mat(1, n1 * n2, 2);
  for (int g1 = 0; g1 < n1; ++g1)
    for (int g2 = 0; g2 < n2; ++g2) T.eta.at(0, g1 * n2 + g2) = uint16_t(X.eta(0, g1) & Y.eta(0, g2));
  return T;
}

// ---------- engine B ----------

namespace {
FactorComplex factor_of(const NegativeComplex& X) {
  FactorComplex F;
  F.group = X.group;
  F.lo = X.lo;
  F.hi = 0;
  for (int d = X.lo; d <= 0; ++d) {
    F.deg.push_back(free_deg(*X.group, X.rank.at(-d)));
    if (d > X.lo) set_differential(F.deg.back(), X.D.at(-d));
  }
  return F;
}
}  // namespace

BLift::BLift(NegativeComplex X) : X_(std::move(X)), sq_(factor_of(X_)) {}

const EquivSolver& BLift::solver(int m) const {
  auto it = solvers_.find(m);
  if (it == solvers_.end()) {
    Mat S = m == 1 ? X_.eta : generator_rows(*X_.group, X_.D.at(-m));
    it = solvers_.emplace(m, std::make_unique<EquivSolver>(*X_.group, S)).first;
  }
  return *it->second;
}

const Block& BLift::component(int i, int m) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(i, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (i < 0) throw std::invalid_argument("negative cup-i index");
  if (m > 0 || m < X_.lo || 2 * X_.lo > m + i) throw WindowError("negative lift component outside the window");
  Block B = compute(i, m);
  return memo_.emplace(key, std::move(B)).first->second;
}

Block BLift::compute(int i, int m) const {
  const int q = m + i;
  const int r = X_.rank.at(-m);
  if (q > 0) return Block(r, 0);
  const TensorLayout& L = sq_.layout(q);
  Block Z;
  if (i == 0 && m == 0) {
    // eta F_0 = eta (x) eta
    Z = Block(1, L.words);
    const auto& c = L.comps[L.comp_of(0)];
    for (int a = 0; a < X_.eta.cols(); ++a)
      for (int b = 0; b < X_.eta.cols(); ++b)
        if (X_.eta(0, a) && X_.eta(0, b)) gf2::set1(Z.row(0), L.bit(c, a, b));
  } else {
    // D_{m+1} F_m = (1+T) psi_{i-1}(m+1) + F_{m+1} d
    Z = Block(X_.rank.at(-(m + 1)), L.words);
    if (q + 1 <= 0) {
      const Block& up = component(i, m + 1);
      for (int k = 0; k < up.rows; ++k) sq_.d_add(q + 1, up.row(k), Z.row(k));
    }
    if (i >= 1) {
      const Block& prev = component(i - 1, m + 1);
      for (int k = 0; k < prev.rows; ++k) {
        gf2::xor_into(Z.row(k), prev.row(k), L.words);
        sq_.twist_add(q, prev.row(k), Z.row(k));
      }
    }
  }
  Block Y;
  solver(m + 1).solve(L, Z, Y);
  return Y;
}

Block BLift::relation_residual(int i, int m) const {
  // F_m d + D_m F_{m-1} + (1+T) psi_{i-1}(m), on generators of X_m, for target degree m+i-1
  const int q = m + i;
  const int r = X_.rank.at(-m);
  if (q - 1 > 0) return Block(r, 0);
  const TensorLayout& L = sq_.layout(q - 1);
  Block out(r, L.words);
  if (q <= 0) {
    const Block& F = component(i, m);
    for (int k = 0; k < r; ++k) sq_.d_add(q, F.row(k), out.row(k));
  }
  if (m - 1 >= X_.lo) {
    Block dm = apply_free_map(sq_, q - 1, generator_rows(*X_.group, X_.D.at(-m)), component(i, m - 1));
    gf2::xor_into(out.data.data(), dm.data.data(), out.data.size());
  }
  if (i >= 1) {
    const Block& prev = component(i - 1, m);
    for (int k = 0; k < r; ++k) {
      gf2::xor_into(out.row(k), prev.row(k), L.words);
      sq_.twist_add(q - 1, prev.row(k), out.row(k));
    }
  }
  return out;
}

Mat BLift::D(const Mat& x, int m, int i) const {
  const int src = 2 * m - i;
  if (src < X_.lo) throw WindowError("negative lift: source degree outside the complex");
  Mat out(1, X_.rank.at(-src), 2);
  if (i < 0) return out;
  const Block& B = component(i, src);
  auto mask = functional_mask(x, X_.group->n);
  for (int k = 0; k < B.rows; ++k) out.at(0, k) = uint16_t(sq_.eval(2 * m, B.row(k), m, mask, mask));
  return out;
}

TateClass q_op_b(const BLift& B, const TateRing& R, const TateClass& x, int s) {
  if (x.degree >= 0) throw std::invalid_argument("engine B takes negative-degree classes");
  const int m = x.degree + 1;
  TateClass out = R.zero(x.degree - s);
  const int i = s + m;
  if (i < 0) return out;
  out.v = B.D(x.v, m, i);
  return out;
}

}  // namespace tate
