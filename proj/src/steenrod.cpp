#include "tate/power_ops.hpp"

namespace tate {

SteenrodOracle::SteenrodOracle(const TateRing& R) : R_(R) {
  if (R.prime() != 2) throw ModulusMismatch("Steenrod oracle runs at p = 2");
  const GroupTable& G = *R.group();
  perm_.assign(G.n, std::vector<int>(G.n));
  for (int g = 0; g < G.n; ++g)
    for (int x = 0; x < G.n; ++x) perm_[g][x] = G(x, g);
}

const RowSolver& SteenrodOracle::solver(int m) const {
  auto it = solvers_.find(m);
  if (it == solvers_.end()) it = solvers_.emplace(m, RowSolver(R_.res().D(m))).first;
  return it->second;
}

SteenrodOracle::Elem SteenrodOracle::zero(int deg) const {
  Elem v;
  for (int s = 0; s <= deg; ++s) v.push_back(Mat(R_.res().dim(s), R_.res().dim(deg - s), 2));
  return v;
}

SteenrodOracle::Elem SteenrodOracle::d(int deg, const Elem& v) const {
  Elem out = zero(deg - 1);
  for (int s = 0; s <= deg; ++s) {
    int t = deg - s;
    if (s >= 1) out[s - 1] = out[s - 1] + R_.res().D(s).transpose() * v[s];
    if (t >= 1) out[s] = out[s] + v[s] * R_.res().D(t);
  }
  return out;
}

SteenrodOracle::Elem SteenrodOracle::act(int deg, const Elem& v, int g) const {
  const int n = R_.group()->n;
  auto pc = [&](int c) { return (c / n) * n + perm_[g][c % n]; };
  Elem out = zero(deg);
  for (int s = 0; s <= deg; ++s)
    for (int a = 0; a < v[s].rows(); ++a)
      for (int b = 0; b < v[s].cols(); ++b)
        if (v[s](a, b)) out[s].at(pc(a), pc(b)) = 1;
  return out;
}

SteenrodOracle::Elem SteenrodOracle::twist(const Elem& v) const {
  Elem out;
  const int deg = int(v.size()) - 1;
  for (int s = 0; s <= deg; ++s) out.push_back(v[deg - s].transpose());
  return out;
}

SteenrodOracle::Elem SteenrodOracle::solve(int deg, Elem r) const {
  // staircase through the double complex, starting at the corner (deg-1, 0)
  const GroupTable& G = *R_.group();
  const auto& res = R_.res();
  Elem x = zero(deg);
  Mat w = (r[deg - 1] * res.eps).transpose();  // (1 (x) eps) of the corner
  auto y = solver(deg).solve(w);
  if (!y) throw std::logic_error("staircase: corner is not a boundary");
  for (int a = 0; a < res.dim(deg); ++a) x[deg].at(a, G.identity) = (*y)(0, a);
  Elem dx = d(deg, x);
  for (int s = 0; s < deg; ++s) r[s] = r[s] + dx[s];
  for (int s = deg - 1; s >= 0; --s) {
    const int t = deg - 1 - s;
    auto X = solver(t + 1).solve(r[s]);
    if (!X) throw std::logic_error("staircase: column is not exact");
    x[s] = x[s] + *X;
    r[s] = r[s] + *X * res.D(t + 1);
    if (s >= 1) r[s - 1] = r[s - 1] + res.D(s).transpose() * *X;
  }
  for (auto& m : r)
    if (!m.is_zero()) throw std::logic_error("staircase: residual left");
  return x;
}

const std::vector<SteenrodOracle::Elem>& SteenrodOracle::cup_i(int i, int m) const {
  auto key = std::make_pair(i, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const GroupTable& G = *R_.group();
  const auto& res = R_.res();
  const int deg = m + i, r = res.rank(m);
  std::vector<Elem> out;
  if (i == 0 && m == 0) {
    Elem e = zero(0);
    e[0].at(G.identity, G.identity) = 1;
    out.push_back(e);
  } else {
    std::vector<Elem> rhs(r, zero(deg - 1));
    if (i >= 1) {
      const auto& prev = cup_i(i - 1, m);
      for (int c = 0; c < r; ++c) {
        auto tw = twist(prev[c]);
        for (int s = 0; s < deg; ++s) rhs[c][s] = rhs[c][s] + prev[c][s] + tw[s];
      }
    }
    if (m >= 1) {
      const auto& lower = cup_i(i, m - 1);
      Mat gens = res.gens(m);
      for (int c = 0; c < r; ++c)
        for (int col = 0; col < gens.cols(); ++col)
          if (gens(c, col)) {
            auto moved = act(deg - 1, lower[col / G.n], col % G.n);
            for (int s = 0; s < deg; ++s) rhs[c][s] = rhs[c][s] + moved[s];
          }
    }
    for (int c = 0; c < r; ++c) out.push_back(solve(deg, rhs[c]));
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

TateClass SteenrodOracle::Sq(const TateClass& x, int k) const {
  const int n = x.degree;
  if (n < 0) throw std::invalid_argument("Steenrod squares act on non-negative degrees");
  TateClass out = R_.zero(n + k);
  if (k < 0 || k > n) return out;
  const int i = n - k, src = n + k;
  const auto& imgs = cup_i(i, src);
  const int g = R_.group()->n;
  Mat xe(R_.res().dim(n), 1, 2);
  for (int a = 0; a < xe.rows(); ++a) xe.at(a, 0) = x.v(0, a / g);
  for (int c = 0; c < int(imgs.size()); ++c) {
    Mat val = xe.transpose() * imgs[c][n] * xe;
    out.v.at(0, c) = val(0, 0);
  }
  return out;
}

}  // namespace tate
