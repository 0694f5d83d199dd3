#include "tate/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "tate/fp.hpp"

namespace tate {

uint32_t binom_general(long long i, long long j, uint32_t p) {
  if (j < 0) return 0;
  Fp F(p);
  uint32_t sign = 1;
  if (i < 0) {
    // binom(i, j) = (-1)^j binom(j - i - 1, j)
    i = j - i - 1;
    if (j & 1) sign = F.neg(1);
  }
  if (j > i) return 0;
  // Lucas
  uint32_t out = sign;
  while (i > 0 || j > 0) {
    long long a = i % p, b = j % p;
    if (b > a) return 0;
    long long c = 1;
    for (long long k = 0; k < b; ++k) c = c * (a - k) / (k + 1);
    out = F.mul(out, uint32_t(c % p));
    i /= p;
    j /= p;
  }
  return out;
}

namespace {

std::string power_str(const std::string& g, int e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string mono_str(const std::vector<std::pair<std::string, int>>& f) {
  std::string out;
  for (const auto& [g, e] : f) {
    std::string s = power_str(g, e);
    if (s.empty()) continue;
    if (!out.empty()) out += "*";
    out += s;
  }
  return out.empty() ? "1" : out;
}

void add_term(Poly& P, const Mono& m, uint32_t c, uint32_t p) {
  if (!c) return;
  uint32_t& v = P[m];
  v = (v + c) % p;
  if (!v) P.erase(m);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  return i < s.size() &&
         std::all_of(s.begin() + long(i), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// k[s^{+-1}] (x) Lambda(u): C2 has only s (degree 1); other cyclic groups have s in degree 2 and u in degree 1.
// Mono {0, k, e} = s^k u^e.
class CyclicRing : public SymbolicRing {
 public:
  CyclicRing(std::string name, uint32_t p, bool has_u, bool beta_u)
      : SymbolicRing(std::move(name), p), has_u_(has_u), beta_u_(beta_u), ds_(has_u ? 2 : 1) {
    gens_.push_back({"s", ds_, true, false, {0, 1, 0, 0}});
    if (has_u) gens_.push_back({"u", 1, false, true, {0, 0, 1, 0}});
  }
  int degree(const Mono& m) const override { return m[1] * ds_ + m[2]; }
  std::string label(const Mono& m) const override { return mono_str({{"s", m[1]}, {"u", m[2]}}); }
  Poly mul(const Mono& a, const Mono& b) const override {
    if (a[2] + b[2] > 1) return {};
    return mono({0, a[1] + b[1], a[2] + b[2], 0});
  }
  std::vector<std::pair<Mono, int>> factor(const Mono& m) const override {
    std::vector<std::pair<Mono, int>> out{{gens_[0].mono, m[1]}};
    if (m[2]) out.push_back({gens_[1].mono, 1});
    return out;
  }
  Poly q_power(const Mono& g, int e, int trunc) const override {
    Poly out;
    if (g[2]) {  // Q(u) = u, since u^p = 0
      if (e != 1) throw MissingGenerator("exterior generator raised to a power other than 1");
      if (1 >= trunc) out[{0, 0, 1, 0}] = 1;
      return out;
    }
    // Q(s^e) = sum_j binom(e, j) s^{pe - (p-1)j}
    for (long long j = 0;; ++j) {
      int k = int(p_ * e - (long long)(p_ - 1) * j);
      if (k * ds_ < trunc) break;
      add_term(out, {0, k, 0, 0}, binom_general(e, j, p_), p_);
    }
    return out;
  }
  Poly bq_power(const Mono& g, int e, int trunc) const override {
    if (p_ == 2) throw MissingGenerator("beta Q is only defined at odd primes");
    if (!g[2]) return {};  // beta Q(s^i) = 0
    if (e != 1) throw MissingGenerator("exterior generator raised to a power other than 1");
    Poly out;
    if (beta_u_ && ds_ >= trunc) out[{0, 1, 0, 0}] = 1;  // beta(u) = s
    return out;
  }
  std::vector<Mono> basis(int n) const override {
    if (!has_u_) return {{0, n, 0, 0}};
    int k = n >= 0 ? n / 2 : -((-n + 1) / 2);
    return {{0, k, n - 2 * k, 0}};
  }

 private:
  bool has_u_, beta_u_;
  int ds_;
};

// k[s^{+-1}, x, y] / (x^2 + xy + y^2, x^3), |x| = |y| = 1, |s| = 4.  Mono {0, k, i, j} = s^k x^i y^j
// with (i, j) among (0,0), (1,0), (0,1), (2,0), (0,2), (2,1).
class Q8Ring : public SymbolicRing {
 public:
  Q8Ring() : SymbolicRing("Q8", 2) {
    gens_.push_back({"s", 4, true, false, {0, 1, 0, 0}});
    gens_.push_back({"x", 1, false, false, {0, 0, 1, 0}});
    gens_.push_back({"y", 1, false, false, {0, 0, 0, 1}});
  }
  int degree(const Mono& m) const override { return 4 * m[1] + m[2] + m[3]; }
  std::string label(const Mono& m) const override { return mono_str({{"s", m[1]}, {"x", m[2]}, {"y", m[3]}}); }
  Poly mul(const Mono& a, const Mono& b) const override {
    Poly out;
    for (const auto& [ij, c] : reduce(a[2] + b[2], a[3] + b[3])) add_term(out, {0, a[1] + b[1], ij.first, ij.second}, c, 2);
    return out;
  }
  std::vector<std::pair<Mono, int>> factor(const Mono& m) const override {
    return {{gens_[0].mono, m[1]}, {gens_[1].mono, m[2]}, {gens_[2].mono, m[3]}};
  }
  Poly q_power(const Mono& g, int e, int trunc) const override {
    Poly out;
    if (g[1]) {
      for (long long j = 0;; ++j) {
        int k = int(2LL * e - j);
        if (4 * k < trunc) break;
        add_term(out, {0, k, 0, 0}, binom_general(e, j, 2), 2);
      }
      return out;
    }
    // Q(x) = x + x^2, and the same for y
    if (e < 0) throw MissingGenerator("negative power of a non-invertible generator");
    Poly q = add(mono(g), SymbolicRing::mul(mono(g), mono(g)));
    out = unit();
    for (int i = 0; i < e; ++i) out = SymbolicRing::mul(out, q, trunc - 2 * (e - 1 - i));
    for (auto it = out.begin(); it != out.end();) it = degree(it->first) < trunc ? out.erase(it) : std::next(it);
    return out;
  }
  std::vector<Mono> basis(int n) const override {
    int k = n >= 0 ? n / 4 : -((-n + 3) / 4);
    switch (n - 4 * k) {
      case 0: return {{0, k, 0, 0}};
      case 1: return {{0, k, 1, 0}, {0, k, 0, 1}};
      case 2: return {{0, k, 2, 0}, {0, k, 0, 2}};
      default: return {{0, k, 2, 1}};
    }
  }

 private:
  // x^i y^j in the basis of k[x, y] / (x^2 + xy + y^2, x^3)
  static std::map<std::pair<int, int>, uint32_t> reduce(int i, int j) {
    std::map<std::pair<int, int>, uint32_t> out;
    auto put = [&](int a, int b) { out[{a, b}] ^= 1; };
    const int d = i + j;
    if (d == 0 || (d == 1) || (d == 2 && j != 1)) put(i, j);
    else if (d == 2) { put(2, 0); put(0, 2); }         // xy = x^2 + y^2
    else if (d == 3 && (i == 2 || i == 1)) put(2, 1);  // x^2 y = x y^2, x^3 = y^3 = 0
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
  }
};

// Tate cohomology of C2 x C2: k[x, y] in nonnegative degrees, phi_ij in degree -i-j-1.
// Mono {0, a, b, 0} = x^a y^b, {1, i, j, 0} = phi_ij.
class V4Ring : public SymbolicRing {
 public:
  V4Ring() : SymbolicRing("V4", 2), c2_(symbolic_ring("C2", 2)) {
    gens_.push_back({"x", 1, false, false, {0, 1, 0, 0}});
    gens_.push_back({"y", 1, false, false, {0, 0, 1, 0}});
  }
  int degree(const Mono& m) const override { return m[0] ? -m[1] - m[2] - 1 : m[1] + m[2]; }
  std::string label(const Mono& m) const override {
    if (!m[0]) return mono_str({{"x", m[1]}, {"y", m[2]}});
    if (m[1] >= 10 || m[2] >= 10) return "phi{" + std::to_string(m[1]) + "," + std::to_string(m[2]) + "}";
    return "phi" + std::to_string(m[1]) + std::to_string(m[2]);
  }
  Poly mul(const Mono& a, const Mono& b) const override {
    if (a[0] && b[0]) return {};
    if (!a[0] && !b[0]) return mono({0, a[1] + b[1], a[2] + b[2], 0});
    const Mono& pos = a[0] ? b : a;
    const Mono& phi = a[0] ? a : b;
    if (pos[1] > phi[1] || pos[2] > phi[2]) return {};
    return mono({1, phi[1] - pos[1], phi[2] - pos[2], 0});
  }
  std::vector<std::pair<Mono, int>> factor(const Mono& m) const override {
    if (m[0]) return {{m, 1}};
    return {{gens_[0].mono, m[1]}, {gens_[1].mono, m[2]}};
  }
  Poly q_power(const Mono& g, int e, int trunc) const override {
    if (g[0]) {
      // Kuenneth: phi_ij = phi_i (x) phi_j with phi_i = s^{-i-1} in the C2 ring
      if (e != 1) throw MissingGenerator("powers of phi classes vanish");
      KunnethTable K({c2_.get(), c2_.get()});
      Poly out;
      for (const auto& [t, c] : K.total_q({Mono{0, -g[1] - 1, 0, 0}, Mono{0, -g[2] - 1, 0, 0}}, trunc))
        add_term(out, {1, -t[0][1] - 1, -t[1][1] - 1, 0}, c, 2);
      return out;
    }
    if (e < 0) throw MissingGenerator("negative power of a non-invertible generator");
    Poly q = add(mono(g), SymbolicRing::mul(mono(g), mono(g)));
    Poly out = unit();
    for (int i = 0; i < e; ++i) out = SymbolicRing::mul(out, q, trunc - 2 * (e - 1 - i));
    for (auto it = out.begin(); it != out.end();) it = degree(it->first) < trunc ? out.erase(it) : std::next(it);
    return out;
  }
  std::vector<Mono> basis(int n) const override {
    std::vector<Mono> out;
    if (n >= 0)
      for (int a = n; a >= 0; --a) out.push_back({0, a, n - a, 0});
    else
      for (int i = 0; i <= -1 - n; ++i) out.push_back({1, i, -1 - n - i, 0});
    return out;
  }
  bool parse_atom(const std::string& s, Mono& out) const override {
    if (s.rfind("phi", 0) != 0) return false;
    std::string r = s.substr(3);
    int i, j;
    if (r.size() == 2 && std::isdigit(static_cast<unsigned char>(r[0])) && std::isdigit(static_cast<unsigned char>(r[1]))) {
      i = r[0] - '0';
      j = r[1] - '0';
    } else if (r.size() > 2 && r.front() == '{' && r.back() == '}' &&
               std::sscanf(r.c_str(), "{%d,%d}", &i, &j) == 2) {
    } else {
      return false;
    }
    if (i < 0 || j < 0) return false;
    out = {1, i, j, 0};
    return true;
  }

 private:
  std::unique_ptr<SymbolicRing> c2_;
};

// Tate cohomology of D8: k[a, b, c] / (ab) in nonnegative degrees and the dual classes phi_m of the
// monomials m = a^i c^j, b^i c^j.  Mono {kind, letter, i, j}: kind 0 = monomial, 1 = phi; letter 0 = a,
// 1 = b (letter is 0 whenever i = 0).
class D8Ring : public SymbolicRing {
 public:
  D8Ring() : SymbolicRing("D8", 2) {
    gens_.push_back({"a", 1, false, false, {0, 0, 1, 0}});
    gens_.push_back({"b", 1, false, false, {0, 1, 1, 0}});
    gens_.push_back({"c", 2, false, false, {0, 0, 0, 1}});
  }
  int degree(const Mono& m) const override { return m[0] ? -1 - m[2] - 2 * m[3] : m[2] + 2 * m[3]; }
  std::string label(const Mono& m) const override {
    std::string s = mono_str({{m[1] ? "b" : "a", m[2]}, {"c", m[3]}});
    return m[0] ? "phi{" + s + "}" : s;
  }
  static Mono norm(Mono m) {
    if (m[2] == 0) m[1] = 0;
    return m;
  }
  Poly mul(const Mono& a, const Mono& b) const override {
    if (a[0] && b[0]) return {};
    if (!a[0] && !b[0]) {
      if (a[2] && b[2] && a[1] != b[1]) return {};  // ab = 0
      return mono(norm({0, a[2] ? a[1] : b[1], a[2] + b[2], a[3] + b[3]}));
    }
    const Mono& pos = a[0] ? b : a;
    const Mono& phi = a[0] ? a : b;
    if (pos[3] > phi[3] || pos[2] > phi[2]) return {};
    if (pos[2] && pos[1] != phi[1]) return {};
    return mono(norm({1, phi[1], phi[2] - pos[2], phi[3] - pos[3]}));
  }
  std::vector<std::pair<Mono, int>> factor(const Mono& m) const override {
    if (m[0]) {
      if (m[2] || m[3]) throw MissingGenerator("no Q rule for " + label(m) + " (only phi{1} is known)");
      return {{m, 1}};
    }
    return {{m[1] ? gens_[1].mono : gens_[0].mono, m[2]}, {gens_[2].mono, m[3]}};
  }
  Poly q_power(const Mono& g, int e, int trunc) const override {
    if (e < 0) throw MissingGenerator("negative power of a non-invertible generator");
    Poly q;
    if (g[0]) {
      // Q(phi_1) = sum_{i >= 1} phi_{c^i}
      if (e != 1) throw MissingGenerator("powers of phi classes vanish");
      Poly out;
      for (int i = 1; -1 - 2 * i >= trunc; ++i) out[{1, 0, 0, i}] = 1;
      return out;
    }
    if (g[3]) {
      // Q(c) = c + (a + b) c + c^2
      q = mono(g);
      q = add(q, SymbolicRing::mul(add(mono(gens_[0].mono), mono(gens_[1].mono)), mono(g)));
      q = add(q, SymbolicRing::mul(mono(g), mono(g)));
    } else {
      q = add(mono(g), SymbolicRing::mul(mono(g), mono(g)));
    }
    const int dg = degree(g);
    Poly out = unit();
    for (int i = 0; i < e; ++i) out = SymbolicRing::mul(out, q, trunc - 2 * dg * (e - 1 - i));
    for (auto it = out.begin(); it != out.end();) it = degree(it->first) < trunc ? out.erase(it) : std::next(it);
    return out;
  }
  std::vector<Mono> basis(int n) const override {
    std::vector<Mono> out;
    int d = n >= 0 ? n : -1 - n, kind = n >= 0 ? 0 : 1;
    for (int j = d / 2; j >= 0; --j) out.push_back(norm({kind, 0, d - 2 * j, j}));
    for (int j = (d - 1) / 2; j >= 0 && d >= 1; --j) out.push_back({kind, 1, d - 2 * j, j});
    return out;
  }
  bool parse_atom(const std::string& s, Mono& out) const override {
    if (s == "phi1") {
      out = {1, 0, 0, 0};
      return true;
    }
    if (s.size() < 5 || s.rfind("phi{", 0) != 0 || s.back() != '}') return false;
    std::string body = s.substr(4, s.size() - 5);
    Mono m{1, 0, 0, 0};
    if (body != "1") {
      bool seen_a = false, seen_b = false;
      for (const auto& f : split_top(body, '*')) {
        std::string base = f;
        int e = 1;
        if (auto c = f.find('^'); c != std::string::npos) {
          base = f.substr(0, c);
          if (!is_integer(f.substr(c + 1))) return false;
          e = std::stoi(f.substr(c + 1));
        }
        if (e < 1) return false;
        if (base == "a") { seen_a = true; m[2] += e; }
        else if (base == "b") { seen_b = true; m[1] = 1; m[2] += e; }
        else if (base == "c") m[3] += e;
        else return false;
      }
      if (seen_a && seen_b) return false;
    }
    out = norm(m);
    return true;
  }
};

}  // namespace

Poly SymbolicRing::bq_power(const Mono&, int, int) const {
  throw MissingGenerator("no beta Q table for " + name_);
}

bool SymbolicRing::parse_atom(const std::string&, Mono&) const { return false; }

Poly SymbolicRing::unit() const { return mono({0, 0, 0, 0}); }

Poly SymbolicRing::add(const Poly& a, const Poly& b) const {
  Poly out = a;
  for (const auto& [m, c] : b) add_term(out, m, c, p_);
  return out;
}

Poly SymbolicRing::scale(const Poly& a, uint32_t c) const {
  Poly out;
  for (const auto& [m, v] : a) add_term(out, m, uint32_t((uint64_t(v) * c) % p_), p_);
  return out;
}

Poly SymbolicRing::mul(const Poly& a, const Poly& b, int trunc) const {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (degree(ma) + degree(mb) < trunc) continue;
      for (const auto& [m, c] : mul(ma, mb)) add_term(out, m, uint32_t((uint64_t(ca) * cb % p_) * c % p_), p_);
    }
  return out;
}

Poly SymbolicRing::part(const Poly& a, int n) const {
  Poly out;
  for (const auto& [m, c] : a)
    if (degree(m) == n) out[m] = c;
  return out;
}

int SymbolicRing::top_degree(const Poly& a) const {
  if (a.empty()) throw std::invalid_argument("zero has no degree");
  int t = degree(a.begin()->first);
  for (const auto& kv : a) t = std::max(t, degree(kv.first));
  return t;
}

std::string SymbolicRing::describe(const Poly& a) const {
  std::vector<std::pair<Mono, uint32_t>> terms(a.begin(), a.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& u, const auto& v) { return degree(u.first) > degree(v.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c) + "*";
    out += label(m);
  }
  return out.empty() ? "0" : out;
}

Poly SymbolicRing::parse(const std::string& expr) const {
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty expression");
  std::string t;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '-' && i > 0 && s[i - 1] != '^' && s[i - 1] != '+') t += "+-1*";
    else if (s[i] == '-' && (i == 0 || s[i - 1] == '+')) t += "-1*";
    else t += s[i];
  }
  auto gen = [&](const std::string& name) -> const SymGenerator* {
    for (const auto& g : gens_)
      if (g.name == name) return &g;
    return nullptr;
  };
  Fp F(p_);
  Poly total;
  for (const auto& term : split_top(t, '+')) {
    if (term.empty()) throw std::invalid_argument("malformed expression: " + expr);
    Poly prod = unit();
    for (const auto& f : split_top(term, '*')) {
      if (is_integer(f)) {
        prod = scale(prod, F.reduce(std::stoll(f)));
        continue;
      }
      Mono m;
      if (parse_atom(f, m)) {
        prod = mul(prod, mono(m));
        continue;
      }
      std::string base = f;
      int e = 1;
      if (auto c = f.rfind('^'); c != std::string::npos && f.find('}', c) == std::string::npos) {
        base = f.substr(0, c);
        if (!is_integer(f.substr(c + 1))) throw std::invalid_argument("malformed exponent in: " + f);
        e = std::stoi(f.substr(c + 1));
      }
      Poly b;
      if (parse_atom(base, m)) {
        b = mono(m);
      } else if (const SymGenerator* g = gen(base)) {
        if (e < 0 && !g->invertible) throw std::invalid_argument("negative power of " + base);
        if (g->invertible) {
          Mono gm = g->mono;
          for (int k = 1; k < 4; ++k) gm[size_t(k)] *= e;
          prod = mul(prod, mono(gm));
          continue;
        }
        b = mono(g->mono);
      } else {
        throw std::invalid_argument("unknown symbol: " + base);
      }
      if (e < 0) throw std::invalid_argument("negative power of " + base);
      Poly pw = unit();
      for (int i = 0; i < e; ++i) pw = mul(pw, b);
      prod = mul(prod, pw);
    }
    total = add(total, prod);
  }
  return total;
}

int SymbolicRing::upper(const Mono& g, int e) const { return int(p_) * degree(g) * e + 1; }

Poly SymbolicRing::q_mono(const Mono& m, int trunc) const {
  auto fs = factor(m);
  std::vector<int> ub;
  int total_ub = 0;
  for (const auto& [g, e] : fs) {
    ub.push_back(upper(g, e));
    total_ub += ub.back();
  }
  Poly out = unit();
  int rest = total_ub;
  for (size_t k = 0; k < fs.size(); ++k) {
    rest -= ub[k];
    if (fs[k].second == 0) continue;
    // partial products must keep every term that can still reach degree trunc
    Poly f = q_power(fs[k].first, fs[k].second, trunc - (total_ub - ub[k]));
    out = mul(out, f, trunc - rest);
  }
  return out;
}

Poly SymbolicRing::bq_mono(const Mono& m, int trunc) const {
  auto fs = factor(m);
  std::vector<int> ub;
  int total_ub = 0;
  for (const auto& [g, e] : fs) {
    ub.push_back(upper(g, e));
    total_ub += ub.back();
  }
  Poly out;
  int sign_deg = 0;
  for (size_t k = 0; k < fs.size(); ++k) {
    if (fs[k].second == 0) continue;
    // beta Q(f_1 ... f_r) = sum_k (-1)^{|f_1| + ... + |f_{k-1}|} Q(f_1) ... beta Q(f_k) ... Q(f_r)
    Poly term = unit();
    int rest = total_ub;
    for (size_t j = 0; j < fs.size(); ++j) {
      rest -= ub[j];
      if (fs[j].second == 0) continue;
      int tj = trunc - (total_ub - ub[j]);
      term = mul(term, j == k ? bq_power(fs[j].first, fs[j].second, tj) : q_power(fs[j].first, fs[j].second, tj),
                 trunc - rest);
    }
    if (sign_deg & 1) term = scale(term, p_ - 1);
    out = add(out, term);
    sign_deg += degree(fs[k].first) * fs[k].second;
  }
  return out;
}

Poly SymbolicRing::total_q(const Poly& x, int trunc) const {
  Poly out;
  for (const auto& [m, c] : x) out = add(out, scale(q_mono(m, trunc), c));
  for (auto it = out.begin(); it != out.end();) it = degree(it->first) < trunc ? out.erase(it) : std::next(it);
  return out;
}

Poly SymbolicRing::total_bq(const Poly& x, int trunc) const {
  if (p_ == 2) throw MissingGenerator("beta Q is only defined at odd primes");
  Poly out;
  for (const auto& [m, c] : x) out = add(out, scale(bq_mono(m, trunc), c));
  for (auto it = out.begin(); it != out.end();) it = degree(it->first) < trunc ? out.erase(it) : std::next(it);
  return out;
}

int SymbolicRing::q_target(int n, int s) const { return p_ == 2 ? n - s : n - 2 * s * int(p_ - 1); }
int SymbolicRing::bq_target(int n, int s) const { return n - 2 * s * int(p_ - 1) + 1; }

Poly SymbolicRing::Q(const Poly& x, int s) const {
  std::map<int, Poly> parts;
  for (const auto& [m, c] : x) parts[degree(m)][m] = c;
  Poly out;
  for (const auto& [n, xp] : parts) {
    int t = q_target(n, s);
    out = add(out, part(total_q(xp, t), t));
  }
  return out;
}

Poly SymbolicRing::BQ(const Poly& x, int s) const {
  std::map<int, Poly> parts;
  for (const auto& [m, c] : x) parts[degree(m)][m] = c;
  Poly out;
  for (const auto& [n, xp] : parts) {
    int t = bq_target(n, s);
    out = add(out, part(total_bq(xp, t), t));
  }
  return out;
}

std::unique_ptr<SymbolicRing> symbolic_ring(const std::string& name, uint32_t p) {
  if (name == "C2" && p == 2) return std::make_unique<CyclicRing>("C2", 2, false, false);
  if (name == "Q8" && p == 2) return std::make_unique<Q8Ring>();
  if (name == "V4" && p == 2) return std::make_unique<V4Ring>();
  if (name == "D8" && p == 2) return std::make_unique<D8Ring>();
  if (name.size() >= 2 && name[0] == 'C' && is_integer(name.substr(1))) {
    long n = std::stol(name.substr(1));
    if (p == 2 && n >= 4 && (n & (n - 1)) == 0) return std::make_unique<CyclicRing>(name, 2, true, false);
    if (p != 2 && Fp::is_prime(p) && n == long(p)) return std::make_unique<CyclicRing>(name, p, true, true);
  }
  if (name == "Cp" && p != 2 && Fp::is_prime(p)) return std::make_unique<CyclicRing>("C" + std::to_string(p), p, true, true);
  throw std::invalid_argument("no symbolic presentation for " + name + " at p = " + std::to_string(p));
}

Poly solve_inverse_q(const SymbolicRing& R, const SymGenerator& g, int trunc) {
  if (!g.invertible) throw std::invalid_argument("generator " + g.name + " is not invertible");
  const uint32_t p = R.prime();
  Fp F(p);
  const int dg = g.degree;
  auto power = [&](int k) {
    Mono m = g.mono;
    for (int i = 1; i < 4; ++i) m[size_t(i)] *= k;
    return m;
  };
  // X = sum_k x_k g^{-p-k}; Q(g) = sum_k q_k g^{p-k}; solve sum_{a+b=k} q_a x_b = [k = 0]
  const int kmax = (-int(p) * dg - trunc) / dg;
  if (kmax < 0) return {};
  Poly Qg = R.total_q(R.mono(g.mono), (int(p) - kmax - 1) * dg);
  std::vector<uint32_t> q(size_t(kmax) + 1, 0), x(size_t(kmax) + 1, 0);
  for (int k = 0; k <= kmax; ++k) {
    auto it = Qg.find(power(int(p) - k));
    if (it != Qg.end()) q[size_t(k)] = it->second;
  }
  if (!q[0]) throw std::invalid_argument("Q(" + g.name + ") has no unit top term");
  const uint32_t q0inv = F.inv(q[0]);
  Poly out;
  for (int k = 0; k <= kmax; ++k) {
    uint32_t s = k == 0 ? 1 : 0;
    for (int a = 1; a <= k; ++a) s = F.sub(s, F.mul(q[size_t(a)], x[size_t(k - a)]));
    x[size_t(k)] = F.mul(s, q0inv);
    if (x[size_t(k)]) out[power(-int(p) - k)] = x[size_t(k)];
  }
  return out;
}

namespace {
// (a, b) = binom(a + b, b), zero when a or b is negative
uint32_t adem_pair(long long a, long long b, uint32_t p) {
  if (a < 0 || b < 0) return 0;
  return binom_general(a + b, b, p);
}
uint32_t sign_of(long long e, uint32_t p) { return (e % 2 == 0) ? 1 : p - 1; }
}  // namespace

AdemReport adem_check(const SymbolicRing& R, int r, int s, const Poly& x) {
  const uint32_t p = R.prime();
  const long long P = p;
  if (!(r > P * s)) throw std::invalid_argument("Adem relation needs r > p s");
  AdemReport rep;
  rep.lhs = R.Q(R.Q(x, s), r);
  // (pi - r, r - (p-1)s - i - 1) vanishes unless r/p <= i <= r - (p-1)s - 1
  long long ilo = (r >= 0) ? (r + P - 1) / P : -((-r) / P);
  long long ihi = r - (P - 1) * s - 1;
  for (long long i = ilo; i <= ihi; ++i) {
    uint32_t c = adem_pair(P * i - r, r - (P - 1) * s - i - 1, p);
    if (!c) continue;
    c = uint32_t(uint64_t(c) * sign_of(r + i, p) % p);
    rep.rhs = R.add(rep.rhs, R.scale(R.Q(R.Q(x, int(i)), int(r + s - i)), c));
  }
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

AdemReport adem_beta_check(const SymbolicRing& R, int r, int s, const Poly& x) {
  const uint32_t p = R.prime();
  const long long P = p;
  if (p == 2) throw std::invalid_argument("beta form needs an odd prime");
  if (!(r >= P * s)) throw std::invalid_argument("Adem relation needs r >= p s");
  AdemReport rep;
  rep.lhs = R.Q(R.BQ(x, s), r);
  long long ilo = (r >= 0) ? (r + P - 1) / P : -((-r) / P);
  long long ihi = r - (P - 1) * s;
  for (long long i = ilo; i <= ihi; ++i) {
    uint32_t c1 = adem_pair(P * i - r, r - (P - 1) * s - i, p);
    uint32_t c2 = adem_pair(P * i - r - 1, r - (P - 1) * s - i, p);
    uint32_t sg = sign_of(r + i, p);
    if (c1) rep.rhs = R.add(rep.rhs, R.scale(R.BQ(R.Q(x, int(i)), int(r + s - i)), uint32_t(uint64_t(c1) * sg % p)));
    if (c2)
      rep.rhs = R.add(rep.rhs, R.scale(R.Q(R.BQ(x, int(i)), int(r + s - i)), uint32_t(uint64_t(c2) * (p - sg) % p)));
  }
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

bool cartan_check(const SymbolicRing& R, const Poly& x, const Poly& y, int trunc) {
  Poly xy = R.mul(x, y);
  Poly lhs = R.total_q(xy, trunc);
  // factors of top degree at most p|x|, p|y|: truncate each against the other's bound
  auto bound = [&](const Poly& a) { return a.empty() ? 0 : int(R.prime()) * R.top_degree(a) + 1; };
  Poly qx = R.total_q(x, trunc - bound(y)), qy = R.total_q(y, trunc - bound(x));
  Poly rhs = R.mul(qx, qy, trunc);
  if (lhs != rhs) return false;
  if (R.prime() == 2) return true;
  if (x.empty() || y.empty()) return true;
  Poly blhs = R.total_bq(xy, trunc);
  Poly bx = R.total_bq(x, trunc - bound(y)), by = R.total_bq(y, trunc - bound(x));
  Poly brhs = R.add(R.mul(bx, qy, trunc), R.scale(R.mul(qx, by, trunc), (R.top_degree(x) % 2) ? R.prime() - 1 : 1));
  return blhs == brhs;
}

KunnethTable::KunnethTable(std::vector<const SymbolicRing*> factors) : f_(std::move(factors)) {
  if (f_.empty()) throw std::invalid_argument("empty Kuenneth product");
  for (auto* r : f_)
    if (r->prime() != f_[0]->prime()) throw TruncationMismatch("factors over different primes");
}

int KunnethTable::degree(const Tensor& t) const {
  int d = -1;
  for (size_t k = 0; k < f_.size(); ++k) d += f_[k]->degree(t[k]) + 1;
  return d;
}

std::string KunnethTable::label(const Tensor& t) const {
  std::string out;
  for (size_t k = 0; k < f_.size(); ++k) out += (k ? "(x)" : "") + f_[k]->label(t[k]);
  return out;
}

TensorPoly KunnethTable::total_q(const Tensor& t, int trunc) const {
  if (t.size() != f_.size()) throw std::invalid_argument("tensor arity mismatch");
  const uint32_t p = f_[0]->prime();
  std::vector<int> ub;
  int total = 0;
  for (size_t k = 0; k < f_.size(); ++k) {
    int d = f_[k]->degree(t[k]);
    if (d >= 0) throw std::invalid_argument("Kuenneth tables take negative-degree classes");
    ub.push_back(int(p) * d + 1);
    total += ub.back();
  }
  TensorPoly out{{Tensor{}, 1}};
  for (size_t k = 0; k < f_.size(); ++k) {
    // sum over factors of (degree + 1) must stay >= trunc + 1
    int tk = trunc - (total - ub[k]) - int(f_.size()) + 1;
    Poly q = f_[k]->total_q(Poly{{t[k], 1}}, tk);
    TensorPoly next;
    for (const auto& [pref, c] : out)
      for (const auto& [m, cm] : q) {
        Tensor nt = pref;
        nt.push_back(m);
        uint32_t& v = next[nt];
        v = uint32_t((v + uint64_t(c) * cm) % p);
        if (!v) next.erase(nt);
      }
    out = std::move(next);
  }
  for (auto it = out.begin(); it != out.end();) it = degree(it->first) < trunc ? out.erase(it) : std::next(it);
  return out;
}

TensorPoly KunnethTable::Q(const Tensor& t, int s) const {
  const uint32_t p = f_[0]->prime();
  int target = p == 2 ? degree(t) - s : degree(t) - 2 * s * int(p - 1);
  TensorPoly out;
  for (const auto& [u, c] : total_q(t, target))
    if (degree(u) == target) out[u] = c;
  return out;
}

}  // namespace tate
