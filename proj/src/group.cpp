#include "tate/group.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tate {

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((*this)(a, b) != (*this)(b, a)) return false;
  return true;
}

int GroupTable::element_order(int g) const {
  int k = 1, x = g;
  while (x != identity) {
    x = (*this)(x, g);
    ++k;
  }
  return k;
}

int GroupTable::prime_power_base() const {
  if (n == 1) return 1;
  int q = 2;
  while (n % q) ++q;
  int m = n;
  while (m % q == 0) m /= q;
  return m == 1 ? q : 0;
}

bool GroupTable::is_p_group(int p) const { return n > 1 && prime_power_base() == p; }

std::vector<int> GroupTable::generators() const {
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  in[identity] = 1;
  int covered = 1;
  for (int g = 0; g < n && covered < n; ++g) {
    if (in[g]) continue;
    gens.push_back(g);
    // closure of the current subgroup with g
    std::vector<int> elems;
    for (int h = 0; h < n; ++h)
      if (in[h]) elems.push_back(h);
    bool grew = true;
    in[g] = 1;
    elems.push_back(g);
    while (grew) {
      grew = false;
      size_t sz = elems.size();
      for (size_t i = 0; i < sz; ++i)
        for (int s : gens) {
          int x = (*this)(elems[i], s);
          if (!in[x]) { in[x] = 1; elems.push_back(x); grew = true; }
        }
    }
    covered = int(elems.size());
  }
  return gens;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int g = 0; g < n; ++g) {
    int o = element_order(g);
    int a = e, b = o;
    while (b) { int t = a % b; a = b; b = t; }
    e = e / a * o;
  }
  return e;
}

void GroupTable::validate() const {
  if (n < 1 || int(mult.size()) != n * n) throw MalformedTable("table size is not n*n");
  for (int v : mult)
    if (v < 0 || v >= n) throw MalformedTable("table entry out of range");
  for (int a = 0; a < n; ++a) {
    if ((*this)(identity, a) != a || (*this)(a, identity) != a) throw MalformedTable("identity law fails");
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen[(*this)(a, b)]) throw MalformedTable("row is not a permutation");
      seen[(*this)(a, b)] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c))) throw MalformedTable("not associative");
  for (int a = 0; a < n; ++a)
    if ((*this)(a, inv[a]) != identity || (*this)(inv[a], a) != identity) throw MalformedTable("inverse law fails");
  std::set<std::string> uniq(names.begin(), names.end());
  if (int(names.size()) != n || int(uniq.size()) != n) throw MalformedTable("element names must be unique");
}

GroupPtr make_group(std::string name, int n, std::vector<int> mult, std::vector<std::string> names) {
  auto g = std::make_shared<GroupTable>();
  g->name = std::move(name);
  g->n = n;
  g->mult = std::move(mult);
  if (int(g->mult.size()) != n * n) throw MalformedTable("table size is not n*n");
  g->identity = -1;
  for (int e = 0; e < n && g->identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g->mult[size_t(e) * n + a] == a && g->mult[size_t(a) * n + e] == a;
    if (ok) g->identity = e;
  }
  if (g->identity < 0) throw MalformedTable("no identity element");
  g->inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->mult[size_t(a) * n + b] == g->identity) g->inv[a] = b;
  for (int a = 0; a < n; ++a)
    if (g->inv[a] < 0) throw MalformedTable("missing inverse");
  if (names.empty())
    for (int a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
  g->names = std::move(names);
  g->validate();
  return g;
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw UnknownGroup("cyclic order must be positive");
  std::vector<int> m(size_t(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m[size_t(a) * n + b] = (a + b) % n;
    names.push_back(a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a));
  }
  return make_group("C" + std::to_string(n), n, m, names);
}

GroupPtr quaternion_group() {
  // index 2u+s: unit u in {1,i,j,k}, sign s (1 means negative)
  static const int tab[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  const char* un[4] = {"1", "i", "j", "k"};
  std::vector<int> m(64);
  std::vector<std::string> names;
  for (int a = 0; a < 8; ++a) {
    names.push_back(std::string(a & 1 ? "-" : "") + un[a >> 1]);
    for (int b = 0; b < 8; ++b) {
      int ua = a >> 1, sa = a & 1, ub = b >> 1, sb = b & 1;
      int u = tab[ua][ub][0], s = tab[ua][ub][1] ^ sa ^ sb;
      m[a * 8 + b] = 2 * u + s;
    }
  }
  return make_group("Q8", 8, m, names);
}

GroupPtr dihedral8_group() {
  // index a + 4b for r^a s^b;  s r = r^{-1} s
  std::vector<int> m(64);
  std::vector<std::string> names;
  for (int x = 0; x < 8; ++x) {
    int a = x % 4, b = x / 4;
    std::string nm = a == 0 ? "" : a == 1 ? "r" : "r^" + std::to_string(a);
    if (b) nm += "s";
    names.push_back(nm.empty() ? "1" : nm);
    for (int y = 0; y < 8; ++y) {
      int c = y % 4, d = y / 4;
      int e = ((b ? a - c : a + c) % 4 + 4) % 4;
      m[x * 8 + y] = e + 4 * ((b + d) % 2);
    }
  }
  return make_group("D8", 8, m, names);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int n1 = a->n, n2 = b->n, n = n1 * n2;
  std::vector<int> m(size_t(n) * n);
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    int x1 = x / n2, x2 = x % n2;
    names.push_back("(" + a->names[x1] + "," + b->names[x2] + ")");
    for (int y = 0; y < n; ++y) {
      int y1 = y / n2, y2 = y % n2;
      m[size_t(x) * n + y] = (*a)(x1, y1) * n2 + (*b)(x2, y2);
    }
  }
  return make_group(a->name + "x" + b->name, n, m, names);
}

namespace {
GroupPtr atom(const std::string& s) {
  if (s == "V4") {
    auto c2 = cyclic_group(2);
    auto v = direct_product(c2, c2);
    auto g = std::make_shared<GroupTable>(*v);
    g->name = "V4";
    g->names = {"1", "b", "a", "ab"};
    return g;
  }
  if (s == "Q8") return quaternion_group();
  if (s == "D8") return dihedral8_group();
  if (s.size() > 4 && s.rfind("Cp(", 0) == 0 && s.back() == ')') {
    int p = std::stoi(s.substr(3, s.size() - 4));
    auto g = std::make_shared<GroupTable>(*cyclic_group(p));
    return g;
  }
  if (s.size() >= 2 && s[0] == 'C') {
    for (size_t i = 1; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) throw UnknownGroup("unknown group: " + s);
    int n = std::stoi(s.substr(1));
    if (n < 1 || n > 64) throw UnknownGroup("cyclic order out of range: " + s);
    return cyclic_group(n);
  }
  throw UnknownGroup("unknown group: " + s);
}
}  // namespace

GroupPtr group_catalog(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x' || ch == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts)
    if (p.empty()) throw UnknownGroup("malformed product expression: " + name);
  GroupPtr g = atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, atom(parts[i]));
  if (g->n > 64) throw UnknownGroup("group too large for the desk-scale catalog: " + name);
  return g;
}

GroupPtr parse_group_table(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<int> mult;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      if (first != "order" || !(ls >> n) || n < 1) throw MalformedTable("first line must be 'order n'");
      continue;
    }
    if (first == "names:") {
      std::string w;
      while (ls >> w) names.push_back(w);
      continue;
    }
    std::istringstream row(line);
    int v, cnt = 0;
    std::string tok;
    while (row >> tok) {
      try {
        size_t pos;
        v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw MalformedTable("bad table entry: " + tok);
      } catch (const std::logic_error&) {
        throw MalformedTable("bad table entry: " + tok);
      }
      mult.push_back(v);
      ++cnt;
    }
    if (cnt != n) throw MalformedTable("table row has wrong length");
  }
  if (n < 0) throw MalformedTable("empty table file");
  if (int(mult.size()) != n * n) throw MalformedTable("table must have n rows");
  for (int v : mult)
    if (v < 0 || v >= n) throw MalformedTable("table entry out of range");
  for (int a = 0; a < n; ++a)
    if (mult[a] != a || mult[size_t(a) * n] != a) throw MalformedTable("identity must be index 0");
  if (!names.empty() && int(names.size()) != n) throw MalformedTable("names line must list n labels");
  return make_group(name, n, mult, names);
}

GroupPtr load_group_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MalformedTable("cannot open table file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_group_table(ss.str(), path);
}

void Embedding::validate() const {
  if (int(map.size()) != source->n) throw std::invalid_argument("embedding map has wrong length");
  std::vector<char> seen(target->n, 0);
  for (int v : map) {
    if (v < 0 || v >= target->n || seen[v]) throw std::invalid_argument("embedding is not injective");
    seen[v] = 1;
  }
  for (int a = 0; a < source->n; ++a)
    for (int b = 0; b < source->n; ++b)
      if (map[(*source)(a, b)] != (*target)(map[a], map[b])) throw std::invalid_argument("embedding is not a homomorphism");
}

Embedding factor_inclusion(const GroupPtr& prod, const GroupPtr& a, const GroupPtr& b, int which) {
  Embedding e;
  e.target = prod;
  e.source = which == 0 ? a : b;
  for (int g = 0; g < e.source->n; ++g)
    e.map.push_back(which == 0 ? g * b->n + b->identity : a->identity * b->n + g);
  e.validate();
  return e;
}

Embedding identity_embedding(const GroupPtr& g) {
  Embedding e{g, g, {}};
  for (int x = 0; x < g->n; ++x) e.map.push_back(x);
  return e;
}

}  // namespace tate
