#include "tate/kunneth.hpp"

#include <sstream>

#include "tate/named.hpp"
#include "tate/power_ops.hpp"
#include "tate/symbolic.hpp"

namespace tate {

namespace {

// raw generator functionals of one Tate degree, written in the symbolic ring
std::vector<Poly> raw_to_symbolic(const TateRing& R, const NamedBasis& B, const SymbolicRing& S, int n) {
  std::vector<Poly> out;
  for (int j = 0; j < R.dim(n); ++j) out.push_back(S.parse(B.describe(R.basis(n, j))));
  return out;
}

std::string tensor_str(const KunnethTable& K, const TensorPoly& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [u, c] : t) out += (out.empty() ? "" : "+") + (c == 1 ? "" : std::to_string(c) + "*") + K.label(u);
  return out;
}

}  // namespace

KunnethReport kunneth_check(const std::string& g1, const std::string& g2, int mlo, int depth) {
  GroupPtr G1 = group_catalog(g1), G2 = group_catalog(g2);
  // X_m = P_{m-1} down to M-degree mlo - depth, i.e. Tate degree mlo - depth - 1
  const int tlo = mlo - depth - 1;
  TateRing R1(G1, tlo, 0), R2(G2, tlo, 0);
  NamedBasis B1 = named_basis(R1), B2 = named_basis(R2);
  auto S1 = symbolic_ring(g1), S2 = symbolic_ring(g2);
  KunnethTable K({S1.get(), S2.get()});
  NegativeComplex X = negative_part(R1.res()), Y = negative_part(R2.res());
  BLift Bl(tensor_negative(X, Y, direct_product(G1, G2)));
  const NegativeComplex& T = Bl.complex();

  // generators of T_m: components (a, m - a), a = 0 down to m, each j1 * r2 + j2
  auto decode = [&](int m, const Mat& v) {
    TensorPoly out;
    int off = 0;
    for (int a = 0; a >= m; --a) {
      const int b = m - a, r1 = X.rank.at(-a), r2 = Y.rank.at(-b);
      auto s1 = raw_to_symbolic(R1, B1, *S1, a - 1);
      auto s2 = raw_to_symbolic(R2, B2, *S2, b - 1);
      for (int j1 = 0; j1 < r1; ++j1)
        for (int j2 = 0; j2 < r2; ++j2) {
          if (!v(0, off + j1 * r2 + j2)) continue;
          for (const auto& [m1, c1] : s1[size_t(j1)])
            for (const auto& [m2, c2] : s2[size_t(j2)]) {
              uint32_t& e = out[Tensor{m1, m2}];
              e = (e + c1 * c2) % 2;
              if (!e) out.erase(Tensor{m1, m2});
            }
        }
      off += r1 * r2;
    }
    return out;
  };

  KunnethReport rep;
  for (int m = 0; m >= mlo; --m) {
    const int r = T.rank.at(-m);
    for (int g = 0; g < r; ++g) {
      Mat x(1, r, 2);
      x.at(0, g) = 1;
      TensorPoly xs = decode(m, x);
      for (int s = 0; s <= depth; ++s) {
        if (2 * m - (s + m) < T.lo) break;
        TensorPoly chain = decode(m - s, Bl.D(x, m, s + m));
        TensorPoly table;
        for (const auto& [t, c] : xs)
          for (const auto& [u, cu] : K.Q(t, s)) {
            uint32_t& e = table[u];
            e = (e + c * cu) % 2;
            if (!e) table.erase(u);
          }
        ++rep.checked;
        if (chain != table) {
          rep.ok = false;
          std::ostringstream os;
          os << g1 << "x" << g2 << " Q_" << s << "(" << tensor_str(K, xs) << "): chain " << tensor_str(K, chain)
             << ", table " << tensor_str(K, table);
          rep.failures.push_back(os.str());
        }
      }
    }
  }
  return rep;
}

KunnethReport kunneth_check_own_resolution(int tate_lo, int depth) {
  TateRing R(group_catalog("V4"), tate_lo, 0);
  NamedBasis B = named_basis(R);
  CLift C(R);
  auto S = symbolic_ring("C2");
  KunnethTable K({S.get(), S.get()});
  KunnethReport rep;
  ++rep.checked;
  if (C.Q(R.unit(), 0) != R.unit()) {
    rep.ok = false;
    rep.failures.push_back("Q_0(1) != 1");
  }
  for (int n = -1; n >= tate_lo; --n)
    for (int i = 0; i <= -1 - n; ++i) {
      const int j = -1 - n - i;
      TateClass x = B.element(n, i);  // phi_ij
      for (int s = 0; s <= depth && B.covers(n - s); ++s) {
        auto coords = B.coords(C.Q(x, s));
        TensorPoly chain;
        for (size_t k = 0; k < coords.size(); ++k)
          if (coords[k]) {
            // entry k of degree n - s is phi_{k, d - k} with d = -1 - (n - s)
            const int a = int(k), b = -1 - (n - s) - a;
            chain[Tensor{Mono{0, -a - 1, 0, 0}, Mono{0, -b - 1, 0, 0}}] = 1;
          }
        TensorPoly table = K.Q(Tensor{Mono{0, -i - 1, 0, 0}, Mono{0, -j - 1, 0, 0}}, s);
        ++rep.checked;
        if (chain != table) {
          rep.ok = false;
          std::ostringstream os;
          os << "V4 Q_" << s << "(phi" << i << j << "): chain " << tensor_str(K, chain) << ", table " << tensor_str(K, table);
          rep.failures.push_back(os.str());
        }
      }
    }
  return rep;
}

}  // namespace tate
