#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dwl/approx_dpw.hpp"
#include "dwl/approx_dtw.hpp"
#include "dwl/families.hpp"
#include "dwl/io.hpp"
#include "dwl/oracles.hpp"
#include "dwl/separator.hpp"

namespace py = pybind11;
using namespace dwl;

namespace {

Rational rational_from_py(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  if (py::isinstance<py::tuple>(obj)) {
    auto t = obj.cast<std::pair<long long, long long>>();
    return Rational(t.first, t.second);
  }
  if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<long long>(), 1);
  throw InvalidInputError("alpha: pass a string like '3/4' or a (num, den) tuple");
}

py::list report_to_list(const ValidationReport& r) {
  py::list out;
  for (const auto& v : r.verdicts)
    out.append(py::make_tuple(v.condition, v.pass,
                              v.witness ? py::cast(v.witness->to_string()) : py::none()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "digraph width decompositions";

  py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, std::vector<Arc>>(), py::arg("n"), py::arg("arcs"))
      .def_static("over_vertices", &Digraph::over_vertices, py::arg("vertices"), py::arg("arcs"))
      .def_property_readonly("n", &Digraph::vertex_count)
      .def_property_readonly("vertices", &Digraph::vertices)
      .def_property_readonly("arcs", &Digraph::arcs)
      .def("has_arc", &Digraph::has_arc)
      .def("out_neighbors", &Digraph::out_neighbors)
      .def("in_neighbors", &Digraph::in_neighbors)
      .def("induced", &Digraph::induced)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.arc_count()) + ")";
      });

  py::class_<Skeleton>(m, "Skeleton")
      .def_readonly("node_count", &Skeleton::node_count)
      .def_readonly("arcs", &Skeleton::arcs);

  py::class_<DirectedPathDecomposition>(m, "DirectedPathDecomposition")
      .def(py::init<std::vector<VertexSet>>(), py::arg("bags"))
      .def_readonly("bags", &DirectedPathDecomposition::bags)
      .def("width", [](const DirectedPathDecomposition& d) { return width(d); })
      .def("as_dag", &DirectedPathDecomposition::as_dag);

  py::class_<DagDecomposition>(m, "DagDecomposition")
      .def_readonly("skeleton", &DagDecomposition::skeleton)
      .def_readonly("node_bags", &DagDecomposition::node_bags)
      .def("width", [](const DagDecomposition& d) { return width(d); });

  py::class_<KellyDecomposition>(m, "KellyDecomposition")
      .def_readonly("skeleton", &KellyDecomposition::skeleton)
      .def_readonly("node_bags", &KellyDecomposition::node_bags)
      .def_readonly("guard_bags", &KellyDecomposition::guard_bags)
      .def("width", [](const KellyDecomposition& d) { return width(d); });

  py::class_<ArborealDecomposition>(m, "ArborealDecomposition")
      .def_readonly("skeleton", &ArborealDecomposition::skeleton)
      .def_readonly("node_bags", &ArborealDecomposition::node_bags)
      .def_readonly("arc_bags", &ArborealDecomposition::arc_bags)
      .def_readonly("universe", &ArborealDecomposition::universe)
      .def("width", [](const ArborealDecomposition& d) { return width(d); });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_property_readonly("ok", &ValidationReport::ok)
      .def_property_readonly("verdicts", &report_to_list)
      .def("__repr__", &ValidationReport::to_string);

  py::class_<SeparatorResult>(m, "SeparatorResult")
      .def_readonly("S", &SeparatorResult::s)
      .def_readonly("U1", &SeparatorResult::u1)
      .def_readonly("U2", &SeparatorResult::u2)
      .def("__repr__", [](const SeparatorResult& r) {
        return "SeparatorResult(S=" + set_to_string(r.s) + ", U1=" + set_to_string(r.u1) +
               ", U2=" + set_to_string(r.u2) + ")";
      });

  py::class_<SeparatorStrategy>(m, "SeparatorStrategy")
      .def(py::init([](const std::string& mode, const py::object& alpha, int size_cap,
                       unsigned long long seed) {
             SeparatorStrategy s;
             if (mode == "exact")
               s.mode = SeparatorMode::Exact;
             else if (mode == "heuristic")
               s.mode = SeparatorMode::Heuristic;
             else if (mode == "trivial")
               s.mode = SeparatorMode::Trivial;
             else
               throw InvalidInputError("mode must be exact, heuristic, or trivial");
             s.alpha = rational_from_py(alpha);
             s.size_cap = size_cap;
             s.rng_seed = seed;
             return s;
           }),
           py::arg("mode") = "exact", py::arg("alpha") = "7/8", py::arg("size_cap") = 16,
           py::arg("seed") = 0);

  py::class_<RunTelemetry>(m, "RunTelemetry")
      .def_readonly("recursion_depth", &RunTelemetry::recursion_depth)
      .def_readonly("max_separator_size", &RunTelemetry::max_separator_size)
      .def_readonly("separator_count", &RunTelemetry::separator_count)
      .def_readonly("max_guard_size", &RunTelemetry::max_guard_size)
      .def_readonly("max_node_budget", &RunTelemetry::max_node_budget);

  py::class_<EliminationOrdering>(m, "EliminationOrdering")
      .def_readonly("order", &EliminationOrdering::order)
      .def_readonly("supports", &EliminationOrdering::supports)
      .def_readonly("width", &EliminationOrdering::width);

  py::class_<Refinement>(m, "Refinement")
      .def_property_readonly("parts", [](const Refinement& r) {
        py::list out;
        for (const auto& p : r.parts) out.append(py::make_tuple(p.part, p.parent_component));
        return out;
      });

  m.def("scc_condensation",
        [](const Digraph& g) { return scc_condensation(g).components; });
  m.def("reachable_set", &reachable_set, py::arg("g"), py::arg("sources"),
        py::arg("blocked") = VertexSet{});
  m.def("is_guarding", &is_guarding);
  m.def("is_normal", &is_normal);
  m.def("biorient", &biorient);

  m.def("validate_dpd", &validate_dpd);
  m.def("validate_dag_decomposition", &validate_dag_decomposition);
  m.def("validate_kelly", &validate_kelly);
  m.def("validate_arboreal", &validate_arboreal);
  m.def("normalize_dpd", &normalize_dpd);
  m.def("dpd_to_kelly_path", &dpd_to_kelly_path);
  m.def("kelly_path_to_dpd", &kelly_path_to_dpd);
  m.def("trivial_dpd", &trivial_dpd);
  m.def("trivial_dag_decomposition", &trivial_dag_decomposition);
  m.def("trivial_kelly", &trivial_kelly);
  m.def("trivial_arboreal", &trivial_arboreal);

  m.def(
      "validate_separator",
      [](const Digraph& g, const VertexSet& u, const py::object& alpha, const SeparatorResult& r) {
        return validate_separator(g, u, rational_from_py(alpha), r);
      },
      py::arg("g"), py::arg("u"), py::arg("alpha"), py::arg("result"));
  m.def(
      "find_sep_exact",
      [](const Digraph& g, const VertexSet& u, const py::object& alpha, int size_cap) {
        return find_sep_exact(g, u, rational_from_py(alpha), size_cap);
      },
      py::arg("g"), py::arg("u"), py::arg("alpha") = "3/4", py::arg("size_cap") = 16);
  m.def(
      "find_sep_heuristic",
      [](const Digraph& g, const VertexSet& u, const py::object& alpha, unsigned long long seed) {
        return find_sep_heuristic(g, u, rational_from_py(alpha), seed);
      },
      py::arg("g"), py::arg("u"), py::arg("alpha") = "3/4", py::arg("seed") = 0);
  m.def(
      "dsn",
      [](const Digraph& g, const py::object& alpha, int n_cap) {
        return dsn(g, rational_from_py(alpha), n_cap);
      },
      py::arg("g"), py::arg("alpha") = "3/4", py::arg("n_cap") = 12);
  m.def("separator_from_arboreal", &separator_from_arboreal);

  m.def(
      "make_dpdec",
      [](const Digraph& g, const VertexSet& u, const SeparatorStrategy& strategy, int threshold,
         const py::object& alpha_prime, bool debug) {
        DpwRunConfig cfg = DpwRunConfig::defaults_for(g);
        cfg.strategy = strategy;
        if (threshold > 0) cfg.termination_threshold = threshold;
        cfg.alpha_prime = rational_from_py(alpha_prime);
        cfg.debug_checks = debug;
        auto r = make_dpdec(g, u, cfg);
        return py::make_tuple(r.decomposition, r.telemetry);
      },
      py::arg("g"), py::arg("u"), py::arg("strategy") = SeparatorStrategy{},
      py::arg("threshold") = -1, py::arg("alpha_prime") = "7/8", py::arg("debug") = false);
  m.def(
      "approx_dagwidth",
      [](const Digraph& g, const SeparatorStrategy& strategy, int threshold) {
        DpwRunConfig cfg = DpwRunConfig::defaults_for(g);
        cfg.strategy = strategy;
        if (threshold > 0) cfg.termination_threshold = threshold;
        return approx_dagwidth(g, cfg);
      },
      py::arg("g"), py::arg("strategy") = SeparatorStrategy{}, py::arg("threshold") = -1);
  m.def(
      "approx_kellywidth",
      [](const Digraph& g, const SeparatorStrategy& strategy, int threshold) {
        DpwRunConfig cfg = DpwRunConfig::defaults_for(g);
        cfg.strategy = strategy;
        if (threshold > 0) cfg.termination_threshold = threshold;
        return approx_kellywidth(g, cfg);
      },
      py::arg("g"), py::arg("strategy") = SeparatorStrategy{}, py::arg("threshold") = -1);
  m.def("merge", &merge, py::arg("d1"), py::arg("d2"), py::arg("s"));

  m.def("refine", &refine);
  m.def(
      "glue",
      [](const std::vector<ArborealDecomposition>& children, const Refinement& r,
         const std::optional<Digraph>& debug_graph) {
        return glue(children, r, debug_graph ? &*debug_graph : nullptr);
      },
      py::arg("children"), py::arg("refinement"), py::arg("debug_graph") = std::nullopt);
  m.def(
      "make_arbdec",
      [](const Digraph& g, const VertexSet& w, const VertexSet& y,
         const SeparatorStrategy& strategy, bool debug) {
        auto r = make_arbdec(g, w, y, strategy, debug);
        return py::make_tuple(r.decomposition, r.telemetry);
      },
      py::arg("g"), py::arg("w"), py::arg("y") = VertexSet{},
      py::arg("strategy") = SeparatorStrategy{}, py::arg("debug") = false);

  m.def("dagwidth_by_game", &dagwidth_by_game, py::arg("g"), py::arg("n_cap") = 8);
  m.def("kellywidth_by_game", &kellywidth_by_game, py::arg("g"), py::arg("n_cap") = 8);
  m.def(
      "kellywidth_by_elimination",
      [](const Digraph& g, int n_cap) {
        auto r = kellywidth_by_elimination(g, n_cap);
        return py::make_tuple(r.width, r.ordering);
      },
      py::arg("g"), py::arg("n_cap") = 9);
  m.def("elimination_support_width", &elimination_support_width);
  m.def("greedy_elimination_ordering", &greedy_elimination_ordering);
  m.def(
      "dpw_by_ordering",
      [](const Digraph& g, int n_cap) {
        auto r = dpw_by_ordering(g, n_cap);
        return py::make_tuple(r.width, r.certificate);
      },
      py::arg("g"), py::arg("n_cap") = 12);
  m.def("dpw_at_most", &dpw_at_most, py::arg("g"), py::arg("w"),
        py::arg("state_budget") = std::size_t{50'000'000});
  m.def(
      "dtw_exact_small",
      [](const Digraph& g, int n_cap) {
        auto r = dtw_exact_small(g, n_cap);
        return py::make_tuple(r.width, r.certificate);
      },
      py::arg("g"), py::arg("n_cap") = 5);

  m.def("gen_family", &gen_family, py::arg("name"), py::arg("params"), py::arg("seed") = 0);
  m.def("family_names", &family_names);
  m.def("parse_digraph", &parse_digraph);
  m.def("serialize_digraph", &serialize_digraph);

  m.def("decomposition_to_json", [](const py::object& dec) {
    AnyDecomposition d;
    if (py::isinstance<DirectedPathDecomposition>(dec))
      d = dec.cast<DirectedPathDecomposition>();
    else if (py::isinstance<DagDecomposition>(dec))
      d = dec.cast<DagDecomposition>();
    else if (py::isinstance<KellyDecomposition>(dec))
      d = dec.cast<KellyDecomposition>();
    else if (py::isinstance<ArborealDecomposition>(dec))
      d = dec.cast<ArborealDecomposition>();
    else
      throw InvalidInputError("expected a decomposition object");
    return decomposition_to_string(d);
  });
  m.def("decomposition_from_json", [](const std::string& text) -> py::object {
    AnyDecomposition d = decomposition_from_string(text);
    return std::visit([](const auto& x) { return py::cast(x); }, d);
  });
}
