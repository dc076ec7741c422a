#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jdv/bounds_report.hpp"
#include "jdv/constructions.hpp"
#include "jdv/errors.hpp"
#include "jdv/graph.hpp"
#include "jdv/jdv.hpp"
#include "jdv/jdv_io.hpp"
#include "jdv/oracle.hpp"
#include "jdv/relaxations.hpp"
#include "jdv/second_bound.hpp"

namespace py = pybind11;
using namespace jdv;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Jdv make_jdv(int n, const std::map<std::pair<int, int>, std::int64_t>& entries) {
  Jdv j(n);
  for (const auto& [pos, count] : entries) j.set(pos.first, pos.second, count);
  return j;
}

std::map<std::pair<int, int>, std::int64_t> jdv_entries(const Jdv& j) {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [pos, count] : j.entries()) out[{pos.low, pos.high}] = count;
  return out;
}

py::dict point_dict(const FPoint& p) {
  py::dict d;
  d["Y"] = p.y;
  d["Z"] = p.z;
  d["S"] = p.s;
  d["M"] = p.m;
  d["f_value"] = p.value;
  return d;
}

py::dict diagnostics_dict(const SecondBoundDiagnostics& s) {
  py::dict d;
  d["n"] = s.n;
  d["isolated"] = s.isolated;
  d["support_size"] = s.support_size;
  d["D"] = s.class_degree;
  d["B"] = s.b;
  d["m"] = s.distinct;
  d["s"] = s.singles;
  d["multiple_mass"] = s.multiple_mass;
  d["y"] = s.y;
  d["z_sq"] = s.z_sq;
  d["g_value"] = s.g_value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of jdvkit.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("__len__", &Graph::size)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.size()) + ")";
      });

  py::class_<Jdv>(m, "Jdv")
      .def(py::init(&make_jdv), py::arg("n"), py::arg("entries"))
      .def_property_readonly("n", &Jdv::n)
      .def_property_readonly("entries", &jdv_entries)
      .def("to_json", [](const Jdv& j) { return to_json(j).dump(); })
      .def_static("from_json", [](const std::string& text) { return parse_jdv(text); })
      .def("__eq__", [](const Jdv& a, const Jdv& b) { return a == b; });

  m.def("degree_profile", [](const Graph& g) {
    const DegreeProfile p = degree_profile(g);
    py::dict d;
    d["class_sizes"] = p.class_sizes;
    d["isolated"] = p.isolated;
    d["distinct"] = p.distinct;
    d["singles"] = p.singles;
    d["multiples"] = p.multiples;
    return d;
  });

  m.def("jdv_of", &jdv_of);
  m.def("support", [](const Jdv& j) {
    std::vector<std::pair<int, int>> out;
    for (const DegreePair& p : support(j)) out.emplace_back(p.low, p.high);
    return out;
  });
  m.def("weighted_degree_sum", [](const Jdv& j) { return fraction(weighted_degree_sum(j)); });
  m.def(
      "check_graphical",
      [](const Jdv& j, bool strict) {
        const GraphicalityVerdict v = check_graphical(j, strict);
        py::dict d;
        d["graphical"] = v.graphical;
        d["class_sizes"] = v.class_sizes;
        d["violation"] = v.first_violation ? py::object(py::str(to_string(*v.first_violation))) : py::none();
        return d;
      },
      py::arg("jdv"), py::arg("strict_vertex_budget") = false);

  m.def("half_graph", &half_graph, py::arg("n"));
  m.def("augmented_half_graph", &augmented_half_graph, py::arg("n"));
  m.def("half_graph_support_size", &half_graph_support_size, py::arg("n"));

  m.def("pair_weights", [](int n) {
    py::list out;
    for (const WeightedPair& p : pair_weights(n)) out.append(py::make_tuple(p.low, p.high, fraction(p.weight)));
    return out;
  });
  m.def("solve_discrete_relaxation", [](int n) {
    const RelaxationSolution s = solve_discrete_relaxation(n);
    py::dict d;
    d["n"] = s.n;
    d["cardinality"] = s.cardinality;
    d["weight_sum"] = fraction(s.weight_sum);
    d["alpha"] = fraction(s.alpha);
    std::vector<std::pair<int, int>> chosen;
    for (const WeightedPair& p : s.chosen) chosen.emplace_back(p.low, p.high);
    d["chosen"] = chosen;
    return d;
  });
  m.def("solve_beta0", &solve_beta0, py::arg("tolerance") = 1e-12);
  m.def("limit_constant", &limit_constant, py::arg("beta0"));
  m.def("alpha_prime", [](int n) {
    const ContinuousBound b = alpha_prime(n);
    py::dict d;
    d["n"] = b.n;
    d["beta0"] = b.beta0;
    d["limit_constant"] = b.limit_constant;
    d["alpha_prime"] = b.alpha_prime;
    d["lemma_bound"] = b.lemma_bound;
    return d;
  });
  m.def("continuous_feasibility", &continuous_feasibility, py::arg("n"), py::arg("c"));

  m.def("diagnostics", [](const Graph& g) { return diagnostics_dict(diagnostics(g)); });
  m.def("degree_sum_bound", [](int n, int mm) { return fraction(degree_sum_bound(n, mm)); });
  m.def(
      "maximize_f",
      [](double step) {
        const FOptimum opt = maximize_f(step);
        py::dict d;
        d["optimum"] = point_dict(opt.best);
        d["low_branch"] = point_dict(opt.low_branch);
        d["high_branch"] = point_dict(opt.high_branch);
        d["numeric_value"] = opt.numeric_value;
        return d;
      },
      py::arg("grid_step") = 1e-3);
  m.def("verify_chain", [](const Graph& g) {
    const ChainReport r = verify_chain(g);
    py::list links;
    for (const ChainLink& l : r.links) {
      py::dict d;
      d["name"] = l.name;
      d["applicable"] = l.applicable;
      d["pass"] = l.pass;
      d["lhs"] = l.lhs;
      d["rhs"] = l.rhs;
      d["detail"] = l.detail;
      links.append(d);
    }
    py::dict d;
    d["diagnostics"] = diagnostics_dict(r.diagnostics);
    d["links"] = links;
    d["all_pass"] = r.all_pass();
    return d;
  });

  m.def(
      "max_support_exhaustive",
      [](int n, int cap, int workers) {
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = max_support_exhaustive(n, cap, workers);
        }
        py::dict d;
        d["n"] = r.n;
        d["max_support"] = r.max_support;
        d["witness"] = r.witness;
        d["graphs_scanned"] = r.graphs_scanned;
        return d;
      },
      py::arg("n"), py::arg("cap") = kDefaultOracleCap, py::arg("workers") = 1);

  m.def(
      "bound_reports",
      [](int n_min, int n_max) {
        py::list out;
        for (const BoundReport& r : bound_reports(n_min, n_max)) {
          py::dict d;
          d["n"] = r.n;
          d["alpha_n"] = fraction(r.alpha);
          d["alpha_prime_n"] = r.alpha_prime;
          d["lemma_bound"] = r.lemma_bound;
          d["limit_constant"] = r.limit_constant;
          d["half_graph_ratio"] = r.half_graph_ratio;
          out.append(d);
        }
        return out;
      },
      py::arg("n_min") = 2, py::arg("n_max") = 100);
  m.def(
      "bounds_csv",
      [](int n_min, int n_max) {
        std::ostringstream out;
        write_bounds_csv(out, bound_reports(n_min, n_max));
        return out.str();
      },
      py::arg("n_min") = 2, py::arg("n_max") = 100);
}
