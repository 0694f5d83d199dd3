// tate: command-line front end for the Tate cohomology and power operation library.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tate/duality.hpp"
#include "tate/kunneth.hpp"
#include "tate/named.hpp"
#include "tate/productive.hpp"
#include "tate/suites.hpp"
#include "tate/symbolic.hpp"

using namespace tate;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string group, table_file, window, srange, cls, format = "json", suite;
  uint32_t prime = 2;
  int depth = 4;
  uint64_t seed = 1;
  bool products = false;
};

// a flat table for csv and text output; json always carries the full document
struct Output {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool failed = false;
};

std::pair<int, int> parse_range(const std::string& s, const char* flag) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError(std::string(flag) + " expects A:B");
  try {
    size_t p1 = 0, p2 = 0;
    int a = std::stoi(s.substr(0, colon), &p1), b = std::stoi(s.substr(colon + 1), &p2);
    if (p1 != colon || p2 != s.size() - colon - 1) throw UsageError(std::string(flag) + " expects A:B");
    if (a > b) throw UsageError(std::string(flag) + " needs A <= B");
    return {a, b};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError(std::string(flag) + " expects integers A:B");
  }
}

std::pair<int, int> window_of(const RunConfig& c, std::pair<int, int> dflt) {
  if (c.window.empty()) return dflt;
  auto w = parse_range(c.window, "--window");
  if (w.first > 0 || w.second < 0) throw UsageError("--window must satisfy A <= 0 <= B");
  return w;
}

GroupPtr load_group(const RunConfig& c) {
  if (!c.table_file.empty()) {
    if (!c.group.empty()) throw UsageError("give --group or --table-file, not both");
    return load_group_table(c.table_file);
  }
  if (c.group.empty()) throw UsageError("--group or --table-file is required");
  return group_catalog(c.group);
}

void need_p2(const RunConfig& c) {
  if (c.prime != 2) throw UsageError("the chain engines run at p = 2 only; use 'symbolic' for odd primes");
}

std::string group_name(const RunConfig& c, const GroupPtr& G) { return c.group.empty() ? G->name : c.group; }

Json report_json(const std::string& suite, const CheckReport& r) {
  Json j;
  j["suite"] = suite;
  j["ok"] = r.ok;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  return j;
}

// ---------- subcommands ----------

Output cmd_resolve(const RunConfig& c) {
  auto G = load_group(c);
  auto [lo, hi] = window_of(c, {-4, 4});
  if (lo == 0) throw UsageError("resolve needs a window reaching degree -1");
  auto R = complete_resolution(G, -lo, hi, c.prime);
  Output o;
  o.doc = Json::parse(resolution_json(R));
  o.header = {"degree", "rank", "dim"};
  for (int m = R.lo; m <= R.hi; ++m)
    o.rows.push_back({std::to_string(m), std::to_string(R.rank(m)), std::to_string(R.dim(m))});
  return o;
}

Output cmd_ring(const RunConfig& c) {
  need_p2(c);
  auto G = load_group(c);
  auto [lo, hi] = window_of(c, {-4, 4});
  TateRing R(G, lo, hi);
  auto B = named_basis(R, lo, hi);
  Output o;
  o.doc["group"] = group_name(c, G);
  o.doc["order"] = G->n;
  o.doc["prime"] = 2;
  o.doc["kind"] = B.kind;
  o.doc["window"] = {lo, hi};
  Json degs = Json::array();
  o.header = {"degree", "dim", "basis"};
  for (int n = lo; n <= hi; ++n) {
    Json d;
    d["degree"] = n;
    d["dim"] = R.dim(n);
    d["basis"] = B.labels.at(n);
    degs.push_back(d);
    std::string joined;
    for (const auto& l : B.labels.at(n)) joined += (joined.empty() ? "" : " ") + l;
    o.rows.push_back({std::to_string(n), std::to_string(R.dim(n)), joined});
  }
  o.doc["degrees"] = degs;
  if (c.products) {
    Json prods = Json::array();
    for (int p = lo; p <= hi; ++p)
      for (int q = p; q <= hi && p + q <= hi; ++q) {
        if (p + q < lo) continue;
        for (int a = 0; a < R.dim(p); ++a)
          for (int b = (p == q ? a : 0); b < R.dim(q); ++b)
            prods.push_back({{"left", B.labels.at(p)[a]},
                             {"right", B.labels.at(q)[b]},
                             {"product", B.describe(R.cup(B.element(p, a), B.element(q, b)))}});
      }
    o.doc["products"] = prods;
  }
  return o;
}

// class window for a class and a range of operations: the explicit window, or one grown to fit
struct Located {
  std::unique_ptr<TateRing> R;
  NamedBasis B;
  TateClass x;
};

Located locate(const GroupPtr& G, const RunConfig& c, int need_lo_from_deg, int need_hi_from_deg) {
  if (c.cls.empty()) throw UsageError("--class is required");
  Located L;
  if (!c.window.empty()) {
    auto [lo, hi] = window_of(c, {0, 0});
    L.R = std::make_unique<TateRing>(G, lo, hi);
    L.B = named_basis(*L.R, lo, hi);
    L.x = parse_class(L.B, *L.R, c.cls);
    const int d = L.x.degree;
    if (d - need_lo_from_deg < lo || d + need_hi_from_deg > hi)
      throw WindowError("--window does not contain every requested result degree");
    return L;
  }
  int d = 0;
  bool found = false;
  for (int w : {4, 10, 20}) {
    try {
      TateRing probe(G, -w, w);
      auto PB = named_basis(probe, -w, w);
      d = parse_class(PB, probe, c.cls).degree;
      found = true;
      break;
    } catch (const UnknownLabel&) {
    }
  }
  if (!found) throw UnknownLabel("cannot name the class " + c.cls);
  const int lo = std::min({0, d, d - need_lo_from_deg}), hi = std::max({0, d, d + need_hi_from_deg});
  L.R = std::make_unique<TateRing>(G, lo, hi);
  L.B = named_basis(*L.R, lo, hi);
  L.x = parse_class(L.B, *L.R, c.cls);
  return L;
}

Output cmd_qops(const RunConfig& c) {
  need_p2(c);
  auto G = load_group(c);
  if (c.srange.empty()) throw UsageError("--s is required");
  auto [smin, smax] = parse_range(c.srange, "--s");
  Located L = locate(G, c, smax, -smin);
  CLift C(*L.R);
  Output o;
  o.doc["group"] = group_name(c, G);
  o.doc["class"] = c.cls;
  o.doc["normalized"] = L.B.describe(L.x);
  o.doc["degree"] = L.x.degree;
  o.doc["window"] = {L.R->lo(), L.R->hi()};
  Json res = Json::array();
  o.header = {"class", "s", "degree", "result"};
  for (int s = smin; s <= smax; ++s) {
    std::string v = L.B.describe(C.Q(L.x, s));
    res.push_back({{"s", s}, {"degree", L.x.degree - s}, {"result", v}});
    o.rows.push_back({c.cls, std::to_string(s), std::to_string(L.x.degree - s), v});
  }
  o.doc["results"] = res;
  return o;
}

Output cmd_symbolic(const RunConfig& c) {
  if (c.group.empty()) throw UsageError("symbolic needs a catalog ring name in --group");
  if (c.cls.empty()) throw UsageError("--class is required");
  auto S = symbolic_ring(c.group, c.prime);
  Poly x = S->parse(c.cls);
  Output o;
  o.doc["ring"] = S->name();
  o.doc["prime"] = S->prime();
  o.doc["class"] = S->describe(x);
  if (x.empty()) throw UsageError("the class is zero");
  const int d = S->top_degree(x);
  o.doc["degree"] = d;
  // by default start at the first index that can be nonzero on a class of degree d
  int smin = std::min(0, -d), smax = smin + c.depth;
  if (!c.srange.empty()) std::tie(smin, smax) = parse_range(c.srange, "--s");
  const bool odd = S->prime() != 2;
  Json qs = Json::array();
  o.header = {"op", "s", "degree", "result"};
  for (int s = smin; s <= smax; ++s) {
    std::string v = S->describe(S->Q(x, s));
    qs.push_back({{"s", s}, {"degree", S->q_target(d, s)}, {"result", v}});
    o.rows.push_back({"Q", std::to_string(s), std::to_string(S->q_target(d, s)), v});
  }
  o.doc["Q"] = qs;
  if (odd) {
    Json bq = Json::array();
    for (int s = smin; s <= smax; ++s) {
      std::string v = S->describe(S->BQ(x, s));
      bq.push_back({{"s", s}, {"degree", S->bq_target(d, s)}, {"result", v}});
      o.rows.push_back({"betaQ", std::to_string(s), std::to_string(S->bq_target(d, s)), v});
    }
    o.doc["betaQ"] = bq;
  }
  // total operation down to degree trunc
  const int trunc = S->q_target(d, smax);
  o.doc["total_truncation"] = trunc;
  o.doc["total"] = S->describe(S->total_q(x, trunc));
  return o;
}

Output cmd_kunneth(const RunConfig& c) {
  need_p2(c);
  if (c.group.empty()) throw UsageError("kunneth needs --group A x B, for example C2xC2");
  SuiteOptions opt;
  opt.group = c.group;
  opt.depth = c.depth;
  opt.lo = window_of(c, {-4, 0}).first;
  CheckReport r = run_named_suite("kunneth", opt);
  Output o;
  o.doc = report_json("kunneth", r);
  o.doc["group"] = c.group;
  o.failed = !r.ok;
  o.header = {"suite", "ok", "checked"};
  o.rows.push_back({"kunneth", r.ok ? "true" : "false", std::to_string(r.checked)});
  return o;
}

Output cmd_dual(const RunConfig& c) {
  need_p2(c);
  auto G = load_group(c);
  Output o;
  o.doc["group"] = group_name(c, G);
  o.header = {"i", "j", "source", "result"};
  if (!c.cls.empty()) {
    // Q_i^*(x) for every i <= |x|
    Located L = locate(G, c, 0, 0);
    const int n = L.x.degree;
    if (n < 0) throw UsageError("dual operations act on classes of degree >= 0");
    TateRing R(G, -1 - n, std::max(n, 1));
    CLift C(R);
    auto B = named_basis(R, -1 - n, std::max(n, 1));
    TateClass x = parse_class(B, R, c.cls);
    o.doc["class"] = c.cls;
    o.doc["degree"] = n;
    Json res = Json::array();
    for (int i = 0; i <= n; ++i) {
      std::string v = B.describe(dual_q(C, i, n - i).apply(x));
      res.push_back({{"i", i}, {"degree", n - i}, {"result", v}});
      o.rows.push_back({std::to_string(i), std::to_string(n - i), c.cls, v});
    }
    o.doc["results"] = res;
    return o;
  }
  int imin = 0, imax = 2;
  if (!c.srange.empty()) std::tie(imin, imax) = parse_range(c.srange, "--s");
  if (imin < 0) throw UsageError("dual operations need i >= 0");
  const int top = imax + c.depth;
  TateRing R(G, -1 - top, std::max(top, 1));
  CLift C(R);
  auto B = named_basis(R, -1 - top, std::max(top, 1));
  Json ops = Json::array();
  for (int i = imin; i <= imax; ++i)
    for (int j = 0; j <= c.depth; ++j) {
      auto D = dual_q(C, i, j);
      Json m;
      for (int a = 0; a < R.dim(i + j); ++a) {
        const std::string& src = B.labels.at(i + j)[a];
        std::string v = B.describe(D.apply(B.element(i + j, a)));
        m[src] = v;
        o.rows.push_back({std::to_string(i), std::to_string(j), src, v});
      }
      ops.push_back({{"i", i}, {"j", j}, {"values", m}});
    }
  o.doc["operations"] = ops;
  return o;
}

Output cmd_norm(const RunConfig& c) {
  need_p2(c);
  auto K = load_group(c);
  if (c.cls.empty()) throw UsageError("--class is required");
  Located L = locate(K, c, 0, 0);
  const int n = L.x.degree;
  if (n < 0) throw UsageError("the norm acts on classes of degree >= 0");
  auto Z = cyclic_group(2);
  auto GP = direct_product(Z, K);
  TateRing RZ(Z, -1, std::max(2 * n, 1)), RK(K, -1 - n, std::max(n, 1)), RG(GP, -1 - 2 * n, std::max(2 * n, 1));
  CLift CK(RK), CG(RG);
  auto BK = named_basis(RK, -1 - n, std::max(n, 1));
  TateClass x = parse_class(BK, RK, c.cls);
  DirectFactorNorm N(RZ, RK, CK, RG, std::max(2 * n, 1));
  TateClass y = N.norm(x);
  auto BG = named_basis(RG, 0, std::max(2 * n, 1));
  Output o;
  o.doc["group"] = group_name(c, K);
  o.doc["product"] = GP->name;
  o.doc["product_basis"] = BG.kind;
  o.doc["class"] = c.cls;
  o.doc["degree"] = n;
  o.doc["norm"] = BG.describe(y);
  const uint32_t a = dual_q_to_unit(CK, x), b = dual_q_to_unit(CG, y);
  o.doc["dual_to_unit"] = a;
  o.doc["dual_of_norm_to_unit"] = b;
  o.doc["compatible"] = a == b;
  o.header = {"class", "norm", "compatible"};
  o.rows.push_back({c.cls, BG.describe(y), a == b ? "true" : "false"});
  return o;
}

Output cmd_productive(const RunConfig& c) {
  need_p2(c);
  auto G = load_group(c);
  auto [lo, hi] = window_of(c, {-3, 3});
  TateRing R = productive_ring(G, lo, hi);
  CLift C(R);
  auto B = named_basis(R, lo, hi);
  auto rep = productivity_battery(C, lo, hi, c.seed);
  Output o;
  o.doc["group"] = group_name(c, G);
  o.doc["window"] = {lo, hi};
  o.doc["seed"] = c.seed;
  Json vs = Json::array();
  o.header = {"degree", "class", "annihilates", "divisible", "agree"};
  for (const auto& v : rep.verdicts) {
    std::string name = B.describe(v.zeta);
    vs.push_back({{"degree", v.zeta.degree},
                  {"class", name},
                  {"annihilates", v.annihilates},
                  {"divisible", v.divisible},
                  {"agree", v.agree()}});
    o.rows.push_back({std::to_string(v.zeta.degree), name, v.annihilates ? "true" : "false",
                      v.divisible ? "true" : "false", v.agree() ? "true" : "false"});
  }
  o.doc["verdicts"] = vs;
  o.doc["disagreements"] = rep.disagreements;
  o.failed = !rep.ok();
  return o;
}

const std::vector<std::string>& kSuites = suite_names();

CheckReport run_suite(const std::string& suite, const RunConfig& c) {
  SuiteOptions o;
  o.group = c.group;
  o.prime = c.prime;
  o.depth = c.depth;
  o.seed = c.seed;
  if (!(suite == "adem" && c.prime != 2) && suite != "kunneth") o.G = load_group(c);
  std::tie(o.lo, o.hi) = window_of(c, {-3, 3});
  return run_named_suite(suite, o);
}

Output cmd_verify(const RunConfig& c) {
  if (c.suite.empty()) throw UsageError("--suite is required");
  std::vector<std::string> suites;
  if (c.suite == "all")
    suites = kSuites;
  else
    suites.push_back(c.suite);
  Output o;
  Json reps = Json::array();
  o.header = {"suite", "ok", "checked"};
  bool ok = true;
  for (const auto& s : suites) {
    if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) throw UsageError("unknown suite: " + s);
    const bool product = c.group == "V4" || c.group.find('x') != std::string::npos;
    if (c.suite == "all" && ((s == "kunneth" && !product) || (s == "thm52c" && c.group.empty()))) {
      reps.push_back({{"suite", s}, {"skipped", true}});
      o.rows.push_back({s, "skipped", "0"});
      continue;
    }
    CheckReport r = run_suite(s, c);
    ok = ok && r.ok;
    reps.push_back(report_json(s, r));
    o.rows.push_back({s, r.ok ? "true" : "false", std::to_string(r.checked)});
  }
  o.doc["group"] = c.group.empty() ? c.table_file : c.group;
  o.doc["seed"] = c.seed;
  o.doc["ok"] = ok;
  o.doc["suites"] = reps;
  o.failed = !ok;
  return o;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit(const Output& o, const std::string& format) {
  if (format == "json") {
    std::cout << o.doc.dump(2) << "\n";
    return;
  }
  if (o.header.empty()) throw UsageError("this subcommand has no flat table; use --format json");
  if (format == "csv") {
    for (size_t k = 0; k < o.header.size(); ++k) std::cout << (k ? "," : "") << o.header[k];
    std::cout << "\n";
    for (const auto& r : o.rows) {
      for (size_t k = 0; k < r.size(); ++k) std::cout << (k ? "," : "") << csv_cell(r[k]);
      std::cout << "\n";
    }
    return;
  }
  std::vector<size_t> w(o.header.size());
  for (size_t k = 0; k < w.size(); ++k) w[k] = o.header[k].size();
  for (const auto& r : o.rows)
    for (size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (size_t k = 0; k < r.size(); ++k) {
      s += r[k];
      if (k + 1 < r.size()) s += std::string(w[k] - r[k].size() + 2, ' ');
    }
    std::cout << s << "\n";
  };
  line(o.header);
  for (const auto& r : o.rows) line(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate cohomology of finite groups and its power operations"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* s) {
    s->add_option("--group", cfg.group, "catalog group (C2, C4, C8, Cn, V4, Q8, D8) or product such as C2xC4");
    s->add_option("--table-file", cfg.table_file, "group multiplication table file");
    s->add_option("--prime", cfg.prime, "coefficient prime");
    s->add_option("--window", cfg.window, "degree window A:B with A <= 0 <= B");
    s->add_option("--depth", cfg.depth, "operation or comparison depth");
    s->add_option("--class", cfg.cls, "class expression such as phi00, x*y+y^2, s^-1");
    s->add_option("--s", cfg.srange, "operation index range A:B");
    s->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--seed", cfg.seed, "seed for sampled suites");
  };
  struct Sub {
    const char* name;
    const char* help;
    Output (*run)(const RunConfig&);
  };
  const Sub subs[] = {
      {"resolve", "complete resolution in a window", cmd_resolve},
      {"ring", "Tate cohomology dimensions and named bases", cmd_ring},
      {"qops", "chain-level operations Q_s on one class", cmd_qops},
      {"symbolic", "axiomatic total operation on a catalog ring", cmd_symbolic},
      {"kunneth", "Kuenneth check on a product of two groups", cmd_kunneth},
      {"dual", "dual operations on ordinary cohomology", cmd_dual},
      {"norm", "norm of a class into C2 x K", cmd_norm},
      {"productive", "annihilation and divisibility verdicts", cmd_productive},
      {"verify", "property suite", cmd_verify},
  };
  std::map<CLI::App*, const Sub*> by_app;
  for (const auto& s : subs) {
    CLI::App* a = app.add_subcommand(s.name, s.help);
    common(a);
    if (std::string(s.name) == "ring") a->add_flag("--products", cfg.products, "list products of basis pairs");
    if (std::string(s.name) == "verify") {
      std::vector<std::string> names = kSuites;
      names.push_back("all");
      a->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(names));
    }
    by_app[a] = &s;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto& [a, s] : by_app)
      if (a->parsed()) {
        Output o = s->run(cfg);
        emit(o, cfg.format);
        return o.failed ? 1 : 0;
      }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
