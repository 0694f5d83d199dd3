#include "tate/named.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>

#include "tate/power_ops.hpp"

namespace tate {

std::string ring_kind(const GroupTable& G, uint32_t p) {
  if (!G.is_p_group(int(p)) || G.n == 1) return "generic";
  if (G.exponent() == G.n) return G.n == 2 ? "C2" : "cyclic";
  if (p != 2) return "generic";
  if (G.n == 4) return "V4";
  if (G.n == 8 && !G.is_abelian()) {
    int involutions = 0;
    for (int g = 0; g < G.n; ++g) involutions += G.element_order(g) == 2;
    return involutions == 1 ? "Q8" : "D8";
  }
  return "generic";
}

namespace {

std::string power_str(const std::string& g, int e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

// "a^2*c", "1" for the empty monomial
std::string mono_str(const std::vector<std::pair<std::string, int>>& factors) {
  std::string out;
  for (const auto& [g, e] : factors) {
    std::string f = power_str(g, e);
    if (f.empty()) continue;
    if (!out.empty()) out += "*";
    out += f;
  }
  return out.empty() ? "1" : out;
}

uint64_t raw_value(const TateClass& a) {
  uint64_t v = 0;
  for (int j = 0; j < a.v.cols(); ++j) v |= uint64_t(a.v(0, j) != 0) << j;
  return v;
}

TateClass scaled(const TateClass& a, uint32_t s) { return {a.degree, a.v.scaled(s)}; }

class Builder {
 public:
  Builder(const TateRing& R, NamedBasis& B) : R_(R), B_(B) {}

  TateClass pow(const TateClass& x, int e) {
    TateClass out = R_.unit();
    for (int i = 0; i < e; ++i) out = R_.cup(out, x);
    return out;
  }
  // named inverse of a class spanning a one-dimensional degree
  TateClass inverse_of(const TateClass& s) {
    TateClass t = R_.basis(-s.degree, 0);
    uint32_t mu = R_.cup(s, t).v(0, 0);
    if (!mu) throw std::logic_error("generator is not invertible");
    return scaled(t, Fp(R_.prime()).inv(mu));
  }
  // s^k * c, multiplying one factor at a time so partial products stay between |c| and the result degree
  TateClass times_spow(const TateClass& s, const TateClass& sinv, int k, TateClass c) {
    for (int i = 0; i < std::abs(k); ++i) c = R_.cup(c, k > 0 ? s : sinv);
    return c;
  }

  void set_degree(int n, const std::vector<TateClass>& classes, std::vector<std::string> labels) {
    Mat M(int(classes.size()), R_.dim(n), R_.prime());
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) M.at(i, j) = classes[i].v(0, j);
    auto inv = inverse(M);
    if (!inv) throw std::logic_error("named classes do not form a basis in degree " + std::to_string(n));
    B_.to_raw[n] = M;
    B_.from_raw[n] = *inv;
    B_.labels[n] = std::move(labels);
  }

  // negative degree -1-n: the basis dual (under the pairing) to the named positive basis of degree n,
  // with entry order given by `order` (order[k] = index of the positive monomial it is dual to)
  void set_dual(int n, const std::vector<TateClass>& mono, const std::vector<int>& order,
                const std::vector<std::string>& labels) {
    Mat M(int(mono.size()), R_.dim(n), R_.prime());
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) M.at(i, j) = mono[i].v(0, j);
    auto inv = inverse(M * R_.gram(n));
    if (!inv) throw std::logic_error("pairing is degenerate in degree " + std::to_string(n));
    Mat Phi = inv->transpose();
    std::vector<TateClass> out;
    for (int k : order) out.push_back({-1 - n, Phi.select_rows({k})});
    set_degree(-1 - n, out, labels);
  }

 private:
  const TateRing& R_;
  NamedBasis& B_;
};

void build_generic(const TateRing& R, NamedBasis& B) {
  for (int n = B.lo; n <= B.hi; ++n) {
    B.to_raw[n] = Mat::identity(R.dim(n), R.prime());
    B.from_raw[n] = B.to_raw[n];
    auto& L = B.labels[n];
    for (int j = 0; j < R.dim(n); ++j) L.push_back("h" + std::to_string(n) + "_" + std::to_string(j));
  }
}

// C2 (s in degree 1) and the other cyclic groups (u in degree 1, s in degree 2)
void build_cyclic(const TateRing& R, NamedBasis& B, bool c2) {
  Builder b(R, B);
  TateClass s = R.basis(c2 ? 1 : 2, 0);
  TateClass sinv = b.inverse_of(s);
  B.generators["s"] = s;
  B.generators["s^-1"] = sinv;
  TateClass u;
  if (!c2) {
    u = R.basis(1, 0);
    B.generators["u"] = u;
  }
  for (int n = B.lo; n <= B.hi; ++n) {
    int k = c2 ? n : int(std::floor(n / 2.0));
    int r = c2 ? 0 : n - 2 * k;
    TateClass c = b.times_spow(s, sinv, k, r ? u : R.unit());
    b.set_degree(n, {c}, {mono_str({{"s", k}, {"u", r}})});
  }
}

void build_v4(const TateRing& R, NamedBasis& B) {
  Builder b(R, B);
  GroupPtr G = R.group();
  GroupPtr C2 = cyclic_group(2);
  TateRing K(C2, -1, 1, 2);
  auto res_to = [&](int g) {
    Embedding e{C2, G, {G->identity, g}};
    return R.restriction_matrix(1, K, e);
  };
  Mat r1 = res_to(2), r2 = res_to(1);
  TateClass x, y;
  for (int v = 1; v < 4; ++v) {
    TateClass c = R.from_vector(1, {v & 1, v >> 1});
    bool n1 = !(c.v * r1).is_zero(), n2 = !(c.v * r2).is_zero();
    if (n1 && !n2) x = c;
    if (n2 && !n1) y = c;
  }
  if (x.v.cols() == 0 || y.v.cols() == 0) throw std::logic_error("could not match x and y for V4");
  B.generators["x"] = x;
  B.generators["y"] = y;
  auto phi = [](int i, int j) {
    if (i >= 10 || j >= 10) return "phi{" + std::to_string(i) + "," + std::to_string(j) + "}";
    return "phi" + std::to_string(i) + std::to_string(j);
  };
  auto monomials = [&](int n, std::vector<std::string>* labels) {
    std::vector<TateClass> m;
    for (int i = n; i >= 0; --i) {
      m.push_back(R.cup(b.pow(x, i), b.pow(y, n - i)));
      if (labels) labels->push_back(mono_str({{"x", i}, {"y", n - i}}));
    }
    return m;
  };
  for (int n = std::max(B.lo, 0); n <= B.hi; ++n) {
    std::vector<std::string> L;
    auto m = monomials(n, &L);
    b.set_degree(n, m, L);
  }
  for (int d = B.lo; d <= std::min(B.hi, -1); ++d) {
    int n = -1 - d;
    auto m = monomials(n, nullptr);
    std::vector<int> order;
    std::vector<std::string> L;
    for (int i = 0; i <= n; ++i) {
      order.push_back(n - i);  // monomial index of x^i y^(n-i)
      L.push_back(phi(i, n - i));
    }
    b.set_dual(n, m, order, L);
  }
}

void build_q8(const TateRing& R, NamedBasis& B) {
  Builder b(R, B);
  TateClass x = R.basis(1, 0), y = R.basis(1, 1), s = R.basis(4, 0);
  TateClass sinv = b.inverse_of(s);
  B.generators["x"] = x;
  B.generators["y"] = y;
  B.generators["s"] = s;
  B.generators["s^-1"] = sinv;
  // per residue r = n mod 4: the monomials in x, y that complete the basis
  const std::vector<std::vector<std::pair<int, int>>> tail = {{{0, 0}}, {{1, 0}, {0, 1}}, {{2, 0}, {0, 2}}, {{2, 1}}};
  for (int n = B.lo; n <= B.hi; ++n) {
    int k = int(std::floor(n / 4.0)), r = n - 4 * k;
    std::vector<TateClass> cls;
    std::vector<std::string> L;
    for (auto [i, j] : tail[r]) {
      cls.push_back(b.times_spow(s, sinv, k, R.cup(b.pow(x, i), b.pow(y, j))));
      L.push_back(mono_str({{"s", k}, {"x", i}, {"y", j}}));
    }
    b.set_degree(n, cls, L);
  }
}

struct D8Mono {
  int letter;  // 0: a, 1: b (only meaningful when i > 0)
  int i, j;
};

std::vector<D8Mono> d8_monomials(int n) {
  std::vector<D8Mono> out;
  for (int j = n / 2; j >= 0; --j) out.push_back({0, n - 2 * j, j});
  for (int j = (n - 1) / 2; j >= 0 && n >= 1; --j) out.push_back({1, n - 2 * j, j});
  return out;
}

std::string d8_str(const D8Mono& m) { return mono_str({{m.letter ? "b" : "a", m.i}, {"c", m.j}}); }

void build_d8(const TateRing& R, NamedBasis& B) {
  Builder bld(R, B);
  D8Generators g = d8_generators(R);
  B.generators["a"] = g.a;
  B.generators["b"] = g.b;
  B.generators["c"] = g.c;
  auto eval = [&](const D8Mono& m) {
    return R.cup(bld.pow(m.letter ? g.b : g.a, m.i), bld.pow(g.c, m.j));
  };
  for (int n = std::max(B.lo, 0); n <= B.hi; ++n) {
    std::vector<TateClass> cls;
    std::vector<std::string> L;
    for (const auto& m : d8_monomials(n)) {
      cls.push_back(eval(m));
      L.push_back(d8_str(m));
    }
    bld.set_degree(n, cls, L);
  }
  for (int d = B.lo; d <= std::min(B.hi, -1); ++d) {
    int n = -1 - d;
    std::vector<TateClass> cls;
    std::vector<int> order;
    std::vector<std::string> L;
    for (const auto& m : d8_monomials(n)) {
      order.push_back(int(cls.size()));
      cls.push_back(eval(m));
      L.push_back("phi{" + d8_str(m) + "}");
    }
    bld.set_dual(n, cls, order, L);
  }
}

// split on `sep` outside braces
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
  if (i == s.size()) return false;
  return std::all_of(s.begin() + long(i), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

D8Generators d8_generators(const TateRing& R) {
  if (R.dim(1) != 2 || R.dim(2) != 3) throw std::logic_error("not a D8 cohomology ring");
  std::vector<TateClass> h1;
  for (int v = 1; v < 4; ++v) h1.push_back(R.from_vector(1, {v & 1, v >> 1}));
  D8Generators g;
  bool found = false;
  for (size_t i = 0; i < h1.size() && !found; ++i)
    for (size_t j = i + 1; j < h1.size() && !found; ++j)
      if (R.cup(h1[i], h1[j]).is_zero()) {
        g.a = h1[i];
        g.b = h1[j];
        found = true;
      }
  if (!found) throw std::logic_error("no pair of degree-one classes with zero product");
  if (raw_value(g.b) < raw_value(g.a)) std::swap(g.a, g.b);
  TateClass a2 = R.cup(g.a, g.a), b2 = R.cup(g.b, g.b), apb = g.a + g.b;
  CLift C(R);
  std::vector<TateClass> candidates;
  for (int v = 1; v < 8; ++v) {
    TateClass c = R.from_vector(2, {v & 1, (v >> 1) & 1, v >> 2});
    Mat M = Mat::vstack(Mat::vstack(a2.v, b2.v), c.v);
    if (rank_of(M) == 3) candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const TateClass& u, const TateClass& v) { return raw_value(u) < raw_value(v); });
  for (const auto& c : candidates)
    if (C.Q(c, -1) == R.cup(apb, c)) {
      g.c = c;
      g.c_pinned = true;
      return g;
    }
  g.c = candidates.at(0);
  return g;
}

NamedBasis named_basis(const TateRing& R) {
  const int L = R.res().lo, U = R.res().hi;
  return named_basis(R, std::max(L, -1 - U), std::min(U, -1 - L));
}

NamedBasis named_basis(const TateRing& R, int lo, int hi) {
  NamedBasis B;
  B.kind = ring_kind(*R.group(), R.prime());
  B.lo = lo;
  B.hi = hi;
  if (B.kind == "C2") build_cyclic(R, B, true);
  else if (B.kind == "cyclic") build_cyclic(R, B, false);
  else if (B.kind == "V4") build_v4(R, B);
  else if (B.kind == "Q8") build_q8(R, B);
  else if (B.kind == "D8") build_d8(R, B);
  else build_generic(R, B);
  return B;
}

std::vector<uint32_t> NamedBasis::coords(const TateClass& a) const {
  auto it = from_raw.find(a.degree);
  if (it == from_raw.end()) throw WindowError("degree " + std::to_string(a.degree) + " has no named basis");
  Mat c = a.v * it->second;
  std::vector<uint32_t> out(size_t(c.cols()));
  for (int j = 0; j < c.cols(); ++j) out[size_t(j)] = c(0, j);
  return out;
}

TateClass NamedBasis::element(int n, int j) const {
  auto it = to_raw.find(n);
  if (it == to_raw.end()) throw WindowError("degree " + std::to_string(n) + " has no named basis");
  return {n, it->second.select_rows({j})};
}

int NamedBasis::degree_of(const std::string& label) const {
  for (const auto& [n, L] : labels)
    for (const auto& l : L)
      if (l == label) return n;
  if (kind == "D8" && label == "phi1") return -1;
  throw UnknownLabel("unknown class label: " + label);
}

TateClass NamedBasis::get(const std::string& label) const {
  std::string key = (kind == "D8" && label == "phi1") ? "phi{1}" : label;
  for (const auto& [n, L] : labels)
    for (size_t j = 0; j < L.size(); ++j)
      if (L[j] == key) return element(n, int(j));
  throw UnknownLabel("unknown class label: " + label);
}

std::string NamedBasis::describe(const TateClass& a) const {
  auto c = coords(a);
  const auto& L = labels.at(a.degree);
  std::string out;
  for (size_t j = 0; j < c.size(); ++j) {
    if (!c[j]) continue;
    if (!out.empty()) out += "+";
    if (c[j] != 1) out += std::to_string(c[j]) + "*";
    out += L[j];
  }
  return out.empty() ? "0" : out;
}

TateClass parse_class(const NamedBasis& B, const TateRing& R, const std::string& expr) {
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw UnknownLabel("empty class expression");
  const Fp F(R.prime());
  // subtraction becomes "+-1*"
  std::string t;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '-' && i > 0 && s[i - 1] != '^' && s[i - 1] != '+') t += "+-1*";
    else if (s[i] == '-' && (i == 0 || s[i - 1] == '+')) t += "-1*";
    else t += s[i];
  }
  auto atom = [&](const std::string& name) -> TateClass {
    if (auto it = B.generators.find(name); it != B.generators.end()) return it->second;
    return B.get(name);
  };
  auto power = [&](const TateClass& x, int e, const std::string& name) {
    if (e < 0) {
      auto it = B.generators.find(name + "^-1");
      if (it == B.generators.end()) throw UnknownLabel("negative power of a non-invertible class: " + name);
      TateClass out = R.unit();
      for (int i = 0; i < -e; ++i) out = R.cup(out, it->second);
      return out;
    }
    TateClass out = R.unit();
    for (int i = 0; i < e; ++i) out = R.cup(out, x);
    return out;
  };
  std::optional<TateClass> total;
  for (const auto& term : split_top(t, '+')) {
    if (term.empty()) throw UnknownLabel("malformed class expression: " + expr);
    uint32_t coef = 1;
    std::optional<TateClass> prod;
    for (const auto& f : split_top(term, '*')) {
      if (is_integer(f)) {
        coef = F.mul(coef, F.reduce(std::stoll(f)));
        continue;
      }
      TateClass x;
      bool labelled = false;
      for (const auto& [n, L] : B.labels)
        if (std::find(L.begin(), L.end(), f) != L.end()) labelled = true;
      if (labelled || B.generators.count(f) || (B.kind == "D8" && f == "phi1")) {
        x = atom(f);
      } else {
        size_t caret = f.rfind('^');
        if (caret == std::string::npos || f.find('}', caret) != std::string::npos)
          throw UnknownLabel("unknown class label: " + f);
        std::string base = f.substr(0, caret), ex = f.substr(caret + 1);
        if (!is_integer(ex)) throw UnknownLabel("malformed exponent in: " + f);
        x = power(atom(base), std::stoi(ex), base);
      }
      prod = prod ? R.cup(*prod, x) : x;
    }
    TateClass v = prod ? *prod : R.unit();
    v = scaled(v, coef);
    if (!total) total = v;
    else if (total->degree != v.degree) throw DegreeMismatch("inhomogeneous class expression: " + expr);
    else total = *total + v;
  }
  return *total;
}

}  // namespace tate
