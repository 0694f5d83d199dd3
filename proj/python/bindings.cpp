#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tate/duality.hpp"
#include "tate/named.hpp"
#include "tate/productive.hpp"
#include "tate/suites.hpp"
#include "tate/symbolic.hpp"

namespace py = pybind11;
using namespace tate;

namespace {

struct PyGroup {
  GroupPtr g;
  std::string label;  // catalog name when there is one
};

// a ring together with its engine and named basis; the engine keeps a reference to the ring
struct PyRing {
  PyGroup group;
  std::unique_ptr<TateRing> R;
  std::unique_ptr<CLift> C;
  NamedBasis B;

  PyRing(PyGroup g, int lo, int hi) : group(std::move(g)) {
    R = std::make_unique<TateRing>(group.g, lo, hi);
    C = std::make_unique<CLift>(*R);
    B = named_basis(*R, lo, hi);
  }
  void own(const TateClass& x) const {
    if (x.degree < R->res().lo || x.degree > R->res().hi || x.v.cols() != R->dim(x.degree))
      throw std::invalid_argument("class does not belong to this ring");
  }
};

std::vector<int> coords(const TateClass& x) {
  std::vector<int> out;
  for (int j = 0; j < x.v.cols(); ++j) out.push_back(x.v(0, j));
  return out;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["checked"] = r.checked;
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tate cohomology rings and power operations";

  py::class_<PyGroup>(m, "Group")
      .def_static("catalog", [](const std::string& name) { return PyGroup{group_catalog(name), name}; })
      .def_static("from_table", [](const std::string& text) { return PyGroup{parse_group_table(text), ""}; })
      .def_static("load", [](const std::string& path) { return PyGroup{load_group_table(path), ""}; })
      .def_property_readonly("name", [](const PyGroup& g) { return g.label.empty() ? g.g->name : g.label; })
      .def_property_readonly("order", [](const PyGroup& g) { return g.g->n; })
      .def_property_readonly("element_names", [](const PyGroup& g) { return g.g->names; })
      .def("mul", [](const PyGroup& g, int a, int b) {
        if (a < 0 || b < 0 || a >= g.g->n || b >= g.g->n) throw py::index_error("element index");
        return (*g.g)(a, b);
      })
      .def("__repr__", [](const PyGroup& g) { return "<Group " + g.g->name + " of order " + std::to_string(g.g->n) + ">"; });

  py::class_<TateClass>(m, "TateClass")
      .def_readonly("degree", &TateClass::degree)
      .def_property_readonly("coords", &coords)
      .def("is_zero", &TateClass::is_zero)
      .def("__add__", [](const TateClass& a, const TateClass& b) {
        if (a.degree != b.degree || a.v.cols() != b.v.cols()) throw std::invalid_argument("degrees differ");
        return a + b;
      })
      .def("__eq__", [](const TateClass& a, const TateClass& b) { return a == b; })
      .def("__repr__", [](const TateClass& a) { return "<TateClass " + class_str(a) + ">"; });

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](const PyGroup& g, int lo, int hi) { return std::make_unique<PyRing>(g, lo, hi); }),
           py::arg("group"), py::arg("lo"), py::arg("hi"))
      .def(py::init([](const std::string& name, int lo, int hi) {
             return std::make_unique<PyRing>(PyGroup{group_catalog(name), name}, lo, hi);
           }),
           py::arg("group"), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("lo", [](const PyRing& r) { return r.R->lo(); })
      .def_property_readonly("hi", [](const PyRing& r) { return r.R->hi(); })
      .def_property_readonly("kind", [](const PyRing& r) { return r.B.kind; })
      .def("dim", [](const PyRing& r, int n) { return r.R->dim(n); })
      .def("labels", [](const PyRing& r, int n) {
        if (!r.B.covers(n)) throw py::index_error("degree outside the named window");
        return r.B.labels.at(n);
      })
      .def("basis", [](const PyRing& r, int n, int j) { return r.R->basis(n, j); })
      .def("unit", [](const PyRing& r) { return r.R->unit(); })
      .def("canonical_minus_one", [](const PyRing& r) { return r.R->canonical_minus_one(); })
      .def("parse", [](const PyRing& r, const std::string& e) { return parse_class(r.B, *r.R, e); })
      .def("describe", [](const PyRing& r, const TateClass& x) {
        r.own(x);
        return r.B.describe(x);
      })
      .def("cup", [](const PyRing& r, const TateClass& a, const TateClass& b) {
        r.own(a);
        r.own(b);
        return r.R->cup(a, b);
      })
      .def("pairing", [](const PyRing& r, const TateClass& a, const TateClass& b) {
        r.own(a);
        r.own(b);
        return r.R->pairing(a, b);
      })
      .def("Q", [](const PyRing& r, const TateClass& x, int s) {
        r.own(x);
        return r.C->Q(x, s);
      })
      .def("P", [](const PyRing& r, const TateClass& x, int i) {
        r.own(x);
        return r.C->P(x, i);
      })
      .def("Sq", [](const PyRing& r, const TateClass& x, int k) {
        r.own(x);
        if (x.degree < 0) throw std::invalid_argument("Steenrod squares act on degrees >= 0");
        return r.C->Q(x, -k);
      })
      .def("dual_q", [](const PyRing& r, const TateClass& x, int i) {
        r.own(x);
        return dual_q(*r.C, i, x.degree - i).apply(x);
      })
      .def("q_table", [](const PyRing& r, int smin, int smax) { return q_table(*r.C, r.B, r.R->lo(), r.R->hi(), smin, smax); });

  m.def("resolution_json", [](const std::string& group, int N, int M) {
    return resolution_json(complete_resolution(group_catalog(group), N, M));
  });
  m.def(
      "symbolic_q",
      [](const std::string& ring, const std::string& expr, int s, uint32_t p) {
        auto S = symbolic_ring(ring, p);
        return S->describe(S->Q(S->parse(expr), s));
      },
      py::arg("ring"), py::arg("expr"), py::arg("s"), py::arg("p") = 2);
  m.def(
      "symbolic_total",
      [](const std::string& ring, const std::string& expr, int trunc, uint32_t p) {
        auto S = symbolic_ring(ring, p);
        return S->describe(S->total_q(S->parse(expr), trunc));
      },
      py::arg("ring"), py::arg("expr"), py::arg("trunc"), py::arg("p") = 2);
  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, const std::string& group, int lo, int hi, int depth, uint64_t seed, uint32_t p) {
        SuiteOptions o;
        o.group = group;
        o.lo = lo;
        o.hi = hi;
        o.depth = depth;
        o.seed = seed;
        o.prime = p;
        if (p == 2 && suite != "kunneth") o.G = group_catalog(group);
        return report_dict(run_named_suite(suite, o));
      },
      py::arg("suite"), py::arg("group"), py::arg("lo") = -3, py::arg("hi") = 3, py::arg("depth") = 4,
      py::arg("seed") = 1, py::arg("p") = 2);
  m.def(
      "productive",
      [](const std::string& group, int lo, int hi, uint64_t seed) {
        TateRing R = productive_ring(group_catalog(group), lo, hi);
        CLift C(R);
        auto B = named_basis(R, lo, hi);
        py::list out;
        for (const auto& v : productivity_battery(C, lo, hi, seed).verdicts) {
          py::dict d;
          d["degree"] = v.zeta.degree;
          d["class"] = B.describe(v.zeta);
          d["annihilates"] = v.annihilates;
          d["divisible"] = v.divisible;
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("lo"), py::arg("hi"), py::arg("seed") = 61);
}
