// Acceptance runner: one PASS/FAIL line per criterion. Expected values come from closed forms evaluated
// with exact integer binomials (oracles.hpp) or from the structural identities themselves.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tate/duality.hpp"
#include "tate/kunneth.hpp"
#include "tate/named.hpp"
#include "tate/negative_ext.hpp"
#include "tate/productive.hpp"
#include "tate/suites.hpp"

using namespace tate;

namespace {

// runtime budgets in seconds; 0 means no limit
constexpr double kBudget[13] = {0, 5, 60, 120, 300, 0, 0, 0, 0, 0, 0, 600, 0};

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  long checked = 0;
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
  void absorb(const std::string& tag, const CheckReport& r) {
    checked += r.checked;
    if (!r.ok) {
      ok = false;
      for (size_t i = 0; i < r.failures.size() && notes.size() < 8; ++i) notes.push_back(tag + ": " + r.failures[i]);
    }
    if (r.checked == 0) {
      ok = false;
      notes.push_back(tag + ": nothing checked");
    }
  }
};

std::string phi_label(int a, int b) {
  if (a < 10 && b < 10) return "phi" + std::to_string(a) + std::to_string(b);
  return "phi{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

using Table = std::map<std::string, std::string>;

// C2: coefficient of s^t in Q_{i-t}(s^i) for i in [-4, 4], t >= -10
Table c2_table(Outcome& out, int extra) {
  TateRing R(group_catalog("C2"), -10 - extra, 4 + extra);
  CLift C(R);
  Table t;
  for (int i = -4; i <= 4; ++i)
    for (int d = -10; d <= 2 * i + 1; ++d) {
      const TateClass q = C.Q(R.basis(i, 0), i - d);
      const int got = q.v(0, 0);
      // (s + s^2)^i = sum_j binom(i, j) s^{2i-j}
      const int want = oracle::binom_mod(i, 2 * i - d, 2);
      out.expect(got == want, "Q(s^" + std::to_string(i) + ") at s^" + std::to_string(d));
      t[std::to_string(i) + "|" + std::to_string(d)] = std::to_string(got);
    }
  return t;
}

// V4: Q(phi_ij) = sum_{k,l} binom(k+i, k) binom(l+j, j) phi_{2i+1+k, 2j+1+l}, i, j <= 2, degrees >= -12
Table v4_table(Outcome& out, int extra) {
  TateRing R(group_catalog("V4"), -12 - extra, 6 + extra);
  CLift C(R);
  auto B = named_basis(R);
  Table t;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      const TateClass x = B.get(phi_label(i, j));
      for (int d = -12; d <= x.degree; ++d) {
        const int s = x.degree - d;
        TateClass want = R.zero(d);
        const int total = s - i - j - 2;  // phi_{2i+1+k, 2j+1+l} has degree -3 - 2i - 2j - k - l
        for (int k = 0; k <= total; ++k) {
          const int l = total - k;
          if (oracle::binom_mod(k + i, k, 2) * oracle::binom_mod(l + j, j, 2))
            want = want + B.get(phi_label(2 * i + 1 + k, 2 * j + 1 + l));
        }
        const TateClass got = C.Q(x, s);
        out.expect(got == want, "Q_" + std::to_string(s) + "(" + phi_label(i, j) + ")");
        t[phi_label(i, j) + "|" + std::to_string(s)] = B.describe(got);
      }
      // P_1(phi_ij) = phi_{2i+1, 2j+1}
      out.expect(C.P(x, 1) == B.get(phi_label(2 * i + 1, 2 * j + 1)), "P_1(" + phi_label(i, j) + ")");
    }
  out.expect(C.Q(B.get("phi00"), 1).is_zero(), "Q_1(phi00) = 0");
  return t;
}

// Q8: Q(s) = s + s^2, Q(x) = x + x^2, Q(y) = y + y^2 in the window (-8, 8)
Table q8_table(Outcome& out, int extra) {
  TateRing R(group_catalog("Q8"), -8 - extra, 8 + extra);
  CLift C(R);
  auto B = named_basis(R);
  Table t;
  for (const char* g : {"s", "x", "y"}) {
    const TateClass x = B.generators.at(g);
    const TateClass sq = R.cup(x, x);
    for (int d = -8; d <= 8; ++d) {
      const int s = x.degree - d;
      TateClass want = R.zero(d);
      if (d == x.degree) want = x;
      if (d == 2 * x.degree) want = sq;
      const TateClass got = C.Q(x, s);
      out.expect(got == want, std::string("Q_") + std::to_string(s) + "(" + g + ")");
      t[std::string(g) + "|" + std::to_string(s)] = B.describe(got);
    }
  }
  return t;
}

// D8: Q_2i(phi_1) = phi_{c^i} for i = 1, 2 and Q_1(phi_1) = Q_3(phi_1) = 0, window (-8, 6).
// phi_{c^i} is identified by pairing against the monomial basis a^r c^k, b^r c^k of H^{2i}.
Table d8_table(Outcome& out, int extra) {
  TateRing R(group_catalog("D8"), -8 - extra, 6 + extra);
  CLift C(R);
  auto B = named_basis(R);
  auto g = d8_generators(R);
  out.expect(g.c_pinned, "c pinned by Sq^1 c = (a+b) c");
  auto pw = [&](const TateClass& z, int e) {
    TateClass acc = R.unit();
    for (int k = 0; k < e; ++k) acc = R.cup(acc, z);
    return acc;
  };
  const TateClass phi1 = R.canonical_minus_one();
  Table t;
  for (int s = 1; s <= 4; ++s) {
    const TateClass q = C.Q(phi1, s);
    t["phi1|" + std::to_string(s)] = B.describe(q);
    if (s % 2) {
      out.expect(q.is_zero(), "Q_" + std::to_string(s) + "(phi_1) = 0");
      continue;
    }
    const int i = s / 2, n = 2 * i;
    std::vector<std::pair<TateClass, bool>> mono;  // (monomial of degree n, is c^i)
    for (int k = 0; 2 * k <= n; ++k) {
      const int r = n - 2 * k;
      const TateClass ck = pw(g.c, k);
      if (r == 0) {
        mono.push_back({ck, true});
        continue;
      }
      mono.push_back({R.cup(pw(g.a, r), ck), false});
      mono.push_back({R.cup(pw(g.b, r), ck), false});
    }
    out.expect(int(mono.size()) == R.dim(n), "monomials span H^" + std::to_string(n));
    for (const auto& [m, is_top] : mono)
      out.expect(R.pairing(m, q) == (is_top ? 1u : 0u), "Q_" + std::to_string(s) + "(phi_1) against a monomial");
    out.expect(B.describe(q) == (i == 1 ? "phi{c}" : "phi{c^2}"), "named Q_" + std::to_string(s) + "(phi_1)");
  }
  return t;
}

Outcome criterion5() {
  Outcome o;
  for (const char* name : {"V4", "D8"}) {
    TateRing R(group_catalog(name), -1, 8);
    CLift C(R);
    o.absorb(std::string(name) + " cup-i", steenrod_suite(C, 4));
    auto B = named_basis(R, 0, 8);
    auto P = [&](const std::string& e) { return parse_class(B, R, e); };
    auto mono = [](const char* v, int e) { return std::string(v) + "^" + std::to_string(e); };
    if (std::string(name) == "V4") {
      // Sq(x) = x + x^2 and the Cartan formula: Sq^k(x^i y^j) = sum_{a+b=k} binom(i,a) binom(j,b) x^{i+a} y^{j+b}
      for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
          if (i + j == 0) continue;
          const TateClass x = P(mono("x", i) + "*" + mono("y", j));
          for (int k = 0; k <= i + j; ++k) {
            TateClass want = R.zero(i + j + k);
            for (int a = 0; a <= k; ++a)
              if (oracle::binom_mod(i, a, 2) * oracle::binom_mod(j, k - a, 2))
                want = want + P(mono("x", i + a) + "*" + mono("y", j + k - a));
            o.expect(C.Q(x, -k) == want, "V4 Sq^" + std::to_string(k) + " x^" + std::to_string(i) + "y^" +
                                             std::to_string(j));
          }
        }
    } else {
      for (const char* v : {"a", "b"})
        for (int i = 1; i <= 4; ++i)
          for (int k = 0; k <= i; ++k) {
            TateClass want = R.zero(i + k);
            if (oracle::binom_mod(i, k, 2)) want = P(mono(v, i + k));
            o.expect(C.Q(P(mono(v, i)), -k) == want, std::string("D8 Sq on ") + v);
          }
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* name : {"C2", "C4", "V4", "Q8"}) {
    TateRing R(group_catalog(name), -10, 2);
    CLift C(R);
    o.absorb(name, engine_suite(C, -6, 4));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto a = kunneth_check("C2", "C2", -5, 5);
  o.absorb("tensor complex", CheckReport{a.ok, a.checked, a.failures});
  auto b = kunneth_check_own_resolution(-6, 5);
  o.absorb("own resolution", CheckReport{b.ok, b.checked, b.failures});
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* name : {"C2", "C4", "V4", "Q8", "D8"}) {
    TateRing R(group_catalog(name), -9, 9);
    CLift C(R);
    o.absorb(std::string(name) + " cartan", cartan_suite(C, -3, 3));
    o.absorb(std::string(name) + " vanishing", vanishing_suite(C, -4, 4));
    o.absorb(std::string(name) + " P_0", p0_suite(C, -4, 4));
    o.absorb(std::string(name) + " chain adem", adem_chain_suite(C, -4, 4, 6, 8));
  }
  for (const char* name : {"C2", "C4", "C8", "V4", "Q8", "D8"}) o.absorb(std::string(name) + " adem", adem_symbolic_suite(name, 2));
  o.absorb("C3 adem", adem_symbolic_suite("C3", 3));
  o.absorb("C5 adem", adem_symbolic_suite("C5", 5));
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (const char* name : {"C2", "C4", "V4", "Q8", "D8"}) {
    TateRing R(group_catalog(name), -3, 1);
    KClasses K(R);
    const auto& pos = R.res().positive;
    auto k = trivial_module(R.group());
    for (int t = 0; t < 50; ++t) {
      const int n = 1 + t % 3;
      TateClass x = R.zero(-n);
      for (int j = 0; j < R.dim(-n); ++j) x.v.at(0, j) = rng() & 1;
      StableMap f = K.stable_map(x);
      KComplex c = phi(k, f, pos);
      StableMap g = psi(c, pos).f;
      o.expect(stably_equal(k, f, g) && K.class_of(g) == x, std::string(name) + " psi(phi(f)) = f");
      o.expect(K.class_of(K.class_complex(x)) == x, std::string(name) + " class complex");
    }
  }
  for (const char* name : {"C2", "C4", "V4"}) {
    TateRing R(group_catalog(name), -5, 1);
    KClasses K(R);
    CLift C(R);
    for (int i = 0; i <= 4; ++i)
      o.expect(K.class_of(interpretqi_complex(R.group(), i)) == C.Q(R.canonical_minus_one(), i),
               std::string(name) + " (1+T) complex, i=" + std::to_string(i));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  {
    TateRing R(group_catalog("D8"), -5, 4);
    CLift C(R);
    auto g = d8_generators(R);
    o.expect(dual_q(C, 1, 0).m.is_zero(), "Q_1^* = 0 on H^1(D8)");
    o.expect(dual_q(C, 2, 0).apply(g.c) == R.unit(), "Q_2^*(c) = 1");
  }
  for (const char* name : {"C2", "V4"}) o.absorb(std::string(name) + " norm identity", check_dual_power_identity(name, 3, 4));
  {
    TateRing R(group_catalog("C2"), -7, 1);
    CLift C(R);
    for (int n = 1; n <= 6; ++n) o.expect(nontriviality_check(C, n).nonzero, "C2 Q_n(phi) nonzero, n=" + std::to_string(n));
  }
  {
    TateRing R(group_catalog("C4"), -5, 1);
    CLift C(R);
    o.expect(nontriviality_check(C, 4).nonzero, "C4 Q_4(phi) nonzero");
  }
  o.expect(v4_d8_norm_obstruction().contradiction(), "V4 in D8 norm contradiction");
  return o;
}

Outcome criterion11() {
  Outcome o;
  o.absorb("C2", productive_suite(group_catalog("C2"), -3, 3, 61));
  o.absorb("V4", productive_suite(group_catalog("V4"), -3, 3, 61));
  o.absorb("Q8", productive_suite(group_catalog("Q8"), 1, 4, 61));
  return o;
}

Outcome criterion12() {
  Outcome o;
  using Fn = Table (*)(Outcome&, int);
  const std::pair<const char*, Fn> tabs[] = {{"C2", c2_table}, {"V4", v4_table}, {"Q8", q8_table}, {"D8", d8_table}};
  for (const auto& [name, fn] : tabs) {
    Outcome scratch;
    Table a = fn(scratch, 0), b = fn(scratch, 4);
    o.expect(!a.empty() && a.size() == b.size(), std::string(name) + " table size changes");
    for (const auto& [key, val] : a) {
      auto it = b.find(key);
      o.expect(it != b.end() && it->second == val, std::string(name) + " " + key + " changes when the window grows");
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C2 golden table", [] { Outcome o; c2_table(o, 0); return o; }},
      {"V4 golden table", [] { Outcome o; v4_table(o, 0); return o; }},
      {"Q8 total operations", [] { Outcome o; q8_table(o, 0); return o; }},
      {"D8 operations on phi_1", [] { Outcome o; d8_table(o, 0); return o; }},
      {"Steenrod agreement", criterion5},
      {"engine agreement", criterion6},
      {"Kuenneth", criterion7},
      {"axiom suites", criterion8},
      {"complexes and stable maps", criterion9},
      {"dual operations and norms", criterion10},
      {"productivity", criterion11},
      {"window independence", criterion12},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const int id = int(k) + 1;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (kBudget[id] > 0 && secs > kBudget[id]) {
      o.ok = false;
      o.notes.push_back("over the " + std::to_string(int(kBudget[id])) + " s budget");
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %2d: %-28s checks=%-6ld %.2f s\n", o.ok ? "PASS" : "FAIL", id, criteria[k].first.c_str(),
                o.checked, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
