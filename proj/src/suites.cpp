#include "tate/suites.hpp"

#include <algorithm>
#include <random>

#include "tate/kunneth.hpp"
#include "tate/productive.hpp"
#include "tate/symbolic.hpp"

namespace tate {

namespace {

std::string at(const std::string& what, const TateClass& x, int s) {
  return what + " x=" + class_str(x) + " s=" + std::to_string(s);
}

TateClass random_class(const TateRing& R, int n, std::mt19937_64& rng) {
  TateClass c = R.zero(n);
  if (R.dim(n) == 0) return c;
  while (c.is_zero())
    for (int j = 0; j < R.dim(n); ++j) c.v.at(0, j) = rng() & 1;
  return c;
}

}  // namespace

QTable q_table(const CLift& C, const NamedBasis& B, int lo, int hi, int smin, int smax) {
  QTable t;
  for (int n = lo; n <= hi; ++n) {
    if (!B.covers(n)) throw WindowError("named basis misses degree " + std::to_string(n));
    const auto& labels = B.labels.at(n);
    for (size_t j = 0; j < labels.size(); ++j)
      for (int s = smin; s <= smax; ++s) {
        const int target = n - s;
        if (target < lo || target > hi || !B.covers(target)) continue;
        t[labels[j] + "|" + std::to_string(s)] = B.describe(C.Q(B.element(n, int(j)), s));
      }
  }
  return t;
}

CheckReport cartan_suite(const CLift& C, int lo, int hi) {
  const TateRing& R = C.ring();
  CheckReport rep;
  std::map<std::tuple<int, int, int>, TateClass> memo;
  auto q = [&](int n, int j, int s) -> const TateClass& {
    auto key = std::make_tuple(n, j, s);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, C.Q(R.basis(n, j), s)).first;
    return it->second;
  };
  // products are only resolved for factors in the ring's class window
  auto in = [&](int n) { return n >= R.lo() && n <= R.hi(); };
  for (int p = lo; p <= hi; ++p)
    for (int qd = p; qd <= hi; ++qd)
      for (int a = 0; a < R.dim(p); ++a)
        for (int b = 0; b < R.dim(qd); ++b) {
          if (p == qd && b < a) continue;
          const TateClass x = R.basis(p, a), y = R.basis(qd, b);
          if (!in(p + qd)) continue;
          const TateClass xy = R.cup(x, y);
          // Q_c(z) vanishes above degree 2|z|, so the factors range over [t - 2|y|, 2|x|]
          for (int t = lo; t <= std::min(hi, 2 * (p + qd)); ++t) {
            if (!in(t - 2 * qd) || !in(t - 2 * p) || !in(2 * p) || !in(2 * qd)) continue;
            TateClass rhs = R.zero(t);
            for (int d1 = t - 2 * qd; d1 <= 2 * p; ++d1)
              rhs = rhs + R.cup(q(p, a, p - d1), q(qd, b, qd - (t - d1)));
            ++rep.checked;
            if (C.Q(xy, p + qd - t) != rhs) rep.fail(at("cartan", x, p + qd - t) + " y=" + class_str(y));
          }
        }
  return rep;
}

CheckReport vanishing_suite(const CLift& C, int lo, int hi) {
  const TateRing& R = C.ring();
  CheckReport rep;
  for (int n = lo; n <= hi; ++n)
    for (int j = 0; j < R.dim(n); ++j)
      for (int k = 1; k <= 3; ++k) {
        if (!R.covers(2 * n + k)) continue;
        ++rep.checked;
        if (!C.Q(R.basis(n, j), -n - k).is_zero()) rep.fail(at("vanishing", R.basis(n, j), -n - k));
      }
  return rep;
}

CheckReport p0_suite(const CLift& C, int lo, int hi) {
  const TateRing& R = C.ring();
  CheckReport rep;
  for (int n = lo; n <= hi; ++n) {
    if (!R.covers(2 * n)) continue;
    for (int j = 0; j < R.dim(n); ++j)
      for (int k = j; k < R.dim(n); ++k) {
        TateClass x = R.basis(n, j);
        if (k != j) x = x + R.basis(n, k);
        ++rep.checked;
        if (C.P(x, 0) != R.cup(x, x)) rep.fail(at("P_0", x, -n));
      }
  }
  return rep;
}

CheckReport adem_chain_suite(const CLift& C, int lo, int hi, int range, uint64_t seed, int samples) {
  const TateRing& R = C.ring();
  CheckReport rep;
  std::mt19937_64 rng(seed);
  for (int n = lo; n <= hi; ++n) {
    if (R.dim(n) == 0) continue;
    for (int t = 0; t < samples; ++t) {
      TateClass x = random_class(R, n, rng);
      for (int s = -range; s <= range; ++s)
        for (int r = std::max(2 * s + 1, -range); r <= range; ++r) {
          // Q_r Q_s = sum_i (2i - r, r - s - i - 1) Q_{r+s-i} Q_i with (a, b) = binom(a + b, b)
          const int ilo = (r >= 0) ? (r + 1) / 2 : -((-r) / 2), ihi = r - s - 1;
          // Q_c on degree d reads P_{d-c} and the square in degree 2d
          auto q_ok = [&](int d, int c) { return R.covers(d - c) && R.covers(2 * d); };
          bool ok = q_ok(n, s) && q_ok(n - s, r);
          for (int i = ilo; ok && i <= ihi; ++i) ok = q_ok(n, i) && q_ok(n - i, r + s - i);
          if (!ok) continue;
          TateClass lhs = C.Q(C.Q(x, s), r), rhs = R.zero(n - r - s);
          for (int i = ilo; i <= ihi; ++i) {
            const long long a = 2LL * i - r, b = r - s - i - 1;
            if (binom_general(a + b, b, 2) == 0) continue;
            rhs = rhs + C.Q(C.Q(x, i), r + s - i);
          }
          ++rep.checked;
          if (lhs != rhs) rep.fail(at("adem r=" + std::to_string(r), x, s));
        }
    }
  }
  return rep;
}

CheckReport adem_symbolic_suite(const std::string& ring, uint32_t p, int range) {
  auto R = symbolic_ring(ring, p);
  CheckReport rep;
  std::vector<Poly> xs;
  for (const auto& g : R->generators()) {
    xs.push_back(R->mono(g.mono));
    if (g.invertible) xs.push_back(R->parse(g.name + "^-1"));
  }
  if (ring == "V4") xs.push_back(R->parse("phi00"));
  const int P = int(p);
  for (const auto& x : xs)
    for (int s = -range; s <= range; ++s)
      for (int r = std::max(P * s, -range); r <= range; ++r) {
        if (r > P * s) {
          ++rep.checked;
          if (!adem_check(*R, r, s, x).ok)
            rep.fail(ring + " " + R->describe(x) + " r=" + std::to_string(r) + " s=" + std::to_string(s));
        }
        if (p != 2) {
          ++rep.checked;
          if (!adem_beta_check(*R, r, s, x).ok)
            rep.fail(ring + " beta " + R->describe(x) + " r=" + std::to_string(r) + " s=" + std::to_string(s));
        }
      }
  return rep;
}

CheckReport steenrod_suite(const CLift& C, int maxdeg) {
  const TateRing& R = C.ring();
  CheckReport rep;
  SteenrodOracle S(R);
  for (int n = 0; n <= maxdeg; ++n)
    for (int j = 0; j < R.dim(n); ++j)
      for (int k = 0; k <= n; ++k) {
        ++rep.checked;
        if (S.Sq(R.basis(n, j), k) != C.Q(R.basis(n, j), -k)) rep.fail(at("steenrod", R.basis(n, j), -k));
      }
  if (R.covers(2))
    for (int mask = 1; mask < (1 << R.dim(1)); ++mask) {
      TateClass x = R.zero(1);
      for (int j = 0; j < R.dim(1); ++j) x.v.at(0, j) = (mask >> j) & 1;
      ++rep.checked;
      if (C.Q(x, -1) != R.cup(x, x) || C.Q(x, 0) != x) rep.fail(at("Sq(x) = x + x^2", x, -1));
    }
  return rep;
}

CheckReport engine_suite(const CLift& C, int lo, int depth) {
  const TateRing& R = C.ring();
  CheckReport rep;
  BLift B(negative_part(R.res()));
  if (!B.complex().verify()) rep.fail("negative part is not a resolution");
  for (int n = lo; n <= -1; ++n)
    for (int j = 0; j < R.dim(n); ++j)
      for (int s = 0; s <= depth; ++s) {
        if (!R.covers(n - s)) continue;
        ++rep.checked;
        if (C.Q(R.basis(n, j), s) != q_op_b(B, R, R.basis(n, j), s)) rep.fail(at("engines", R.basis(n, j), s));
      }
  return rep;
}

CheckReport duality_suite(const CLift& C, int lo, int hi, int jmax) {
  const TateRing& R = C.ring();
  CheckReport rep;
  for (int n = lo; n <= hi; ++n) {
    if (!R.covers(-1 - n)) continue;
    ++rep.checked;
    if (R.dim(n) != R.dim(-1 - n) || (R.dim(n) > 0 && !inverse(R.gram(n))))
      rep.fail("pairing degenerate in degree " + std::to_string(n));
  }
  for (int j = 0; j <= jmax; ++j)
    for (int i = 0; i + j <= jmax; ++i) {
      if (!R.covers(-1 - i - j) || !R.covers(i + j)) continue;
      ++rep.checked;
      if (!adjointness_holds(C, dual_q(C, i, j)))
        rep.fail("Q_" + std::to_string(i) + "^* on H^" + std::to_string(i + j) + " not adjoint");
    }
  return rep;
}

CheckReport productive_suite(const GroupPtr& G, int lo, int hi, uint64_t seed) {
  TateRing R = productive_ring(G, lo, hi);
  CLift C(R);
  auto battery = productivity_battery(C, lo, hi, seed);
  CheckReport rep;
  rep.checked = int(battery.verdicts.size());
  for (const auto& v : battery.verdicts)
    if (!v.agree())
      rep.fail("zeta=" + class_str(v.zeta) + " annihilates=" + std::to_string(v.annihilates) +
               " divisible=" + std::to_string(v.divisible));
  if (battery.verdicts.empty()) rep.fail("no nonzero classes in range");
  return rep;
}

CheckReport window_suite(const GroupPtr& G, int lo, int hi, int smin, int smax, int extra) {
  TateRing R1(G, lo, hi), R2(G, lo - extra, hi + extra);
  CLift C1(R1), C2(R2);
  QTable a = q_table(C1, named_basis(R1), lo, hi, smin, smax);
  QTable b = q_table(C2, named_basis(R2), lo, hi, smin, smax);
  CheckReport rep;
  rep.checked = int(a.size());
  if (a.size() != b.size()) rep.fail("tables differ in size");
  for (const auto& [key, val] : a) {
    auto it = b.find(key);
    if (it == b.end() || it->second != val) rep.fail(key + ": " + val + " vs " + (it == b.end() ? "missing" : it->second));
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cartan",           "adem",    "steenrod-agreement",
                                                 "engine-agreement", "kunneth", "duality-perfectness",
                                                 "thm52c",           "productive-equivalence", "window-independence"};
  return names;
}

CheckReport run_named_suite(const std::string& suite, const SuiteOptions& o) {
  const int lo = o.lo, hi = o.hi;
  if (lo > 0 || hi < 0) throw WindowError("suite window must satisfy lo <= 0 <= hi");
  if (suite == "adem" && o.prime != 2) {
    if (o.group.empty()) throw std::invalid_argument("adem at odd p needs a catalog ring name");
    return adem_symbolic_suite(o.group, o.prime);
  }
  if (o.prime != 2) throw std::invalid_argument("the chain engines run at p = 2 only");
  if (suite == "kunneth") {
    const std::string g = o.group == "V4" ? "C2xC2" : o.group;
    const auto cut = g.find('x');
    if (cut == std::string::npos || cut == 0 || cut + 1 >= g.size())
      throw std::invalid_argument("kunneth needs a product group such as C2xC4");
    const std::string a = g.substr(0, cut), b = g.substr(cut + 1);
    auto rep = kunneth_check(a, b, lo, o.depth);
    CheckReport r{rep.ok, rep.checked, rep.failures};
    if (a == "C2" && b == "C2") {
      auto own = kunneth_check_own_resolution(lo - 1, o.depth);
      r.checked += own.checked;
      for (auto& f : own.failures) r.fail("own resolution: " + f);
    }
    return r;
  }
  if (!o.G) throw std::invalid_argument("suite needs a group");
  const GroupPtr& G = o.G;
  if (suite == "cartan") {
    TateRing R(G, lo - 2 * hi, std::max(hi - 2 * lo, 2 * hi));
    CLift C(R);
    return cartan_suite(C, lo, hi);
  }
  if (suite == "adem") {
    CheckReport r;
    static const std::vector<std::string> rings = {"C2", "C4", "C8", "V4", "Q8", "D8"};
    if (std::find(rings.begin(), rings.end(), o.group) != rings.end()) r = adem_symbolic_suite(o.group, 2);
    TateRing R(G, lo, hi);
    CLift C(R);
    auto chain = adem_chain_suite(C, lo, hi, 6, o.seed);
    r.checked += chain.checked;
    for (auto& f : chain.failures) r.fail("chain " + f);
    return r;
  }
  if (suite == "steenrod-agreement") {
    TateRing R(G, -1, std::max(o.depth, 1));
    CLift C(R);
    return steenrod_suite(C, o.depth);
  }
  if (suite == "engine-agreement") {
    TateRing R(G, lo - o.depth, hi);
    CLift C(R);
    return engine_suite(C, lo, o.depth);
  }
  if (suite == "duality-perfectness") {
    TateRing R(G, lo, hi);
    CLift C(R);
    return duality_suite(C, lo, hi, std::min(o.depth, hi));
  }
  if (suite == "thm52c") {
    if (o.group.empty()) throw std::invalid_argument("thm52c needs a catalog group");
    return check_dual_power_identity(o.group, std::max(hi, 1), o.depth);
  }
  if (suite == "productive-equivalence") return productive_suite(G, lo, hi, o.seed);
  if (suite == "window-independence") return window_suite(G, lo, hi, lo - hi, hi - lo);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace tate
