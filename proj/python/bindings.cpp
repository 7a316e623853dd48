#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wcw/errors.hpp"
#include "wcw/reductions.hpp"
#include "wcw/wcw_space.hpp"
#include "wcw/witness.hpp"

namespace py = pybind11;

namespace {

using namespace wcw;

std::vector<int> members(const VertexSet& s) { return s.members(); }

std::optional<std::vector<int>> members(const std::optional<VertexSet>& s) {
  if (!s) return std::nullopt;
  return s->members();
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return Graph(n, list);
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

EnumerationBudget make_budget(std::size_t max_sets, std::size_t max_subsets) {
  EnumerationBudget budget;
  budget.max_sets = max_sets;
  budget.max_subsets = max_subsets;
  budget.validate();
  return budget;
}

CnfInstance make_cnf(int n_vars, const std::vector<std::vector<int>>& clauses) {
  CnfInstance instance(n_vars);
  for (const auto& clause : clauses) {
    std::vector<Literal> literals;
    for (int l : clause) literals.push_back(Literal::from_dimacs(l));
    instance.add_clause(Clause(std::move(literals)));
  }
  return instance;
}

std::vector<std::vector<int>> dimacs_clauses(const CnfInstance& instance) {
  std::vector<std::vector<int>> out;
  for (const Clause& c : instance.clauses()) {
    std::vector<int> row;
    for (Literal l : c) row.push_back(l.dimacs());
    out.push_back(std::move(row));
  }
  return out;
}

py::list space_rows(const WeightSpace& space) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::list rows;
  for (const auto& vector : space.basis()) {
    py::list row;
    for (const auto& entry : vector) row.append(fraction(format_rational(entry)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Well-covered graphs, WCW(G) weight spaces and hardness reductions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);

  py::class_<EnumerationBudget>(m, "Budget")
      .def(py::init(&make_budget), py::arg("max_sets") = EnumerationBudget{}.max_sets,
           py::arg("max_subsets") = EnumerationBudget{}.max_subsets)
      .def_readonly("max_sets", &EnumerationBudget::max_sets)
      .def_readonly("max_subsets", &EnumerationBudget::max_subsets);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &edge_pairs)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return members(g.neighbors(v)); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("serialize_graph", &serialize_graph);
  m.def("is_bipartite", [](const Graph& g) { return is_bipartite(g).has_value(); });
  m.def("contains_cycle", &contains_cycle_k, py::arg("g"), py::arg("k"));
  m.def("is_k1t_free", &is_k1t_free, py::arg("g"), py::arg("t"));

  m.def(
      "maximal_independent_sets",
      [](const Graph& g, const EnumerationBudget& budget) {
        std::vector<std::vector<int>> out;
        for (const auto& s : enumerate_maximal_is(g, budget)) out.push_back(s.members());
        return out;
      },
      py::arg("g"), py::arg("budget") = EnumerationBudget{});

  m.def(
      "is_well_covered",
      [](const Graph& g, const EnumerationBudget& budget) -> py::object {
        const auto verdict = is_well_covered(g, budget);
        if (verdict.holds()) return py::none();
        return py::make_tuple(members(verdict.counterexample->first), members(verdict.counterexample->second));
      },
      py::arg("g"), py::arg("budget") = EnumerationBudget{},
      "None when every maximal independent set has the same size, otherwise a pair of sets of different sizes.");

  m.def(
      "wcw_basis",
      [](const Graph& g, const std::string& method, const EnumerationBudget& budget) {
        const auto parsed = parse_wcw_method(method);
        if (!parsed) throw std::invalid_argument("unknown method '" + method + "'");
        return space_rows(compute_wcw(g, *parsed, budget));
      },
      py::arg("g"), py::arg("method") = "local", py::arg("budget") = EnumerationBudget{},
      "Canonical basis (reduced row echelon form) of WCW(G) as lists of Fractions.");

  m.def(
      "is_relating",
      [](const Graph& g, int x, int y, const EnumerationBudget& budget) {
        return members(is_relating(g, x, y, budget));
      },
      py::arg("g"), py::arg("x"), py::arg("y"), py::arg("budget") = EnumerationBudget{});

  m.def(
      "is_generating",
      [](const Graph& g, const std::vector<int>& bx, const std::vector<int>& by, const EnumerationBudget& budget) {
        const Bipartition b(VertexSet(g.order(), bx), VertexSet(g.order(), by));
        return members(is_generating(g, b, budget));
      },
      py::arg("g"), py::arg("bx"), py::arg("by"), py::arg("budget") = EnumerationBudget{});

  py::class_<CnfInstance>(m, "Cnf")
      .def(py::init(&make_cnf), py::arg("n_vars"), py::arg("clauses"))
      .def_property_readonly("n_vars", &CnfInstance::n_vars)
      .def_property_readonly("clauses", &dimacs_clauses)
      .def("__len__", &CnfInstance::size);

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def(
      "serialize_dimacs", [](const CnfInstance& c, const std::string& kind) { return serialize_dimacs(c, kind); },
      py::arg("cnf"), py::arg("kind") = "");
  m.def("is_usat", &validate_usat);
  m.def("is_3sat", &validate_3sat);
  m.def("is_dsat", [](const CnfInstance& c) { return !validate_dsat(c).has_value(); });
  m.def(
      "solve",
      [](const CnfInstance& c, int var_cap) -> std::optional<std::vector<bool>> {
        auto model = solve(c, var_cap);
        if (!model) return std::nullopt;
        return model->values;
      },
      py::arg("cnf"), py::arg("var_cap") = kDefaultSolverVarCap);

  m.def("sat_to_usat", [](const CnfInstance& c) { return sat_to_usat(c).instance; });
  m.def("threesat_to_dsat", [](const CnfInstance& c) { return threesat_to_dsat(c).instance; });
  m.def(
      "usat_to_re",
      [](const CnfInstance& c) {
        ReInstance re = usat_to_re(c);
        return py::make_tuple(re.graph, re.x, re.y);
      },
      "Returns (graph, x, y); xy is the edge to test with is_relating.");
  m.def(
      "dsat_to_gs",
      [](const CnfInstance& c) {
        GsInstance gs = dsat_to_gs(c);
        return py::make_tuple(gs.graph, members(gs.designated.x()), members(gs.designated.y()));
      },
      "Returns (graph, bx, by); (bx, by) is the subgraph to test with is_generating.");
}
