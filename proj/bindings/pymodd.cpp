#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "modd/exact.hpp"
#include "modd/generators.hpp"
#include "modd/graph_io.hpp"
#include "modd/peel_color.hpp"
#include "modd/rainbow.hpp"
#include "modd/recognition.hpp"

namespace py = pybind11;

namespace {

modd::VertexSet to_set(const std::vector<int>& members) {
    return modd::VertexSet(members);
}

// Recognition rejections surface as ValueError in Python.
template <class T>
T unwrap(const modd::Outcome<T>& outcome) {
    if (!outcome) throw py::value_error(outcome.reason());
    return *outcome;
}

}  // namespace

PYBIND11_MODULE(_modd, m) {
    m.doc() = "Double domination bounds on maximal outerplanar graphs and 2-trees";

    py::register_exception<modd::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<modd::Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &modd::Graph::vertex_count)
        .def_property_readonly("m", &modd::Graph::edge_count)
        .def("neighbors", &modd::Graph::neighbors, py::arg("v"))
        .def("degree", &modd::Graph::degree, py::arg("v"))
        .def("has_edge", &modd::Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &modd::Graph::edges)
        .def("__eq__", [](const modd::Graph& a, const modd::Graph& b) { return a == b; })
        .def("__repr__", [](const modd::Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return out.str();
        });

    py::enum_<modd::Method>(m, "Method")
        .value("Peel3Color", modd::Method::Peel3Color)
        .value("Rainbow4Color", modd::Method::Rainbow4Color)
        .value("DegreeAtLeast3", modd::Method::DegreeAtLeast3)
        .value("Dispatch", modd::Method::Dispatch)
        .value("Exact", modd::Method::Exact);

    py::class_<modd::DominationResult>(m, "DominationResult")
        .def_property_readonly("vertices",
                               [](const modd::DominationResult& r) { return r.set.members(); })
        .def_property_readonly("size",
                               [](const modd::DominationResult& r) { return r.set.size(); })
        .def_readonly("method", &modd::DominationResult::method)
        .def_readonly("claimed_bound", &modd::DominationResult::claimed_bound)
        .def("__repr__", [](const modd::DominationResult& r) {
            std::ostringstream out;
            out << "DominationResult(size=" << r.set.size() << ", method="
                << modd::method_name(r.method) << ")";
            return out.str();
        });

    py::class_<modd::OuterplaneEmbedding>(m, "OuterplaneEmbedding")
        .def_readonly("cycle", &modd::OuterplaneEmbedding::cycle)
        .def_readonly("chords", &modd::OuterplaneEmbedding::chords);

    py::class_<modd::PeelSequence>(m, "PeelSequence")
        .def_property_readonly("steps",
                               [](const modd::PeelSequence& p) {
                                   std::vector<std::tuple<int, int, int>> steps;
                                   steps.reserve(p.steps.size());
                                   for (const auto& s : p.steps)
                                       steps.emplace_back(s.removed, s.left, s.right);
                                   return steps;
                               })
        .def_readonly("kernel", &modd::PeelSequence::kernel);

    py::class_<modd::Coloring>(m, "Coloring")
        .def_readonly("palette_size", &modd::Coloring::palette_size)
        .def_readonly("colors", &modd::Coloring::color_of);

    py::class_<modd::SolverReport>(m, "SolverReport")
        .def_readonly("optimum", &modd::SolverReport::optimum)
        .def_property_readonly("witness",
                               [](const modd::SolverReport& r) { return r.witness.members(); })
        .def_readonly("nodes_explored", &modd::SolverReport::nodes_explored)
        .def_readonly("optimal", &modd::SolverReport::optimal)
        .def_property_readonly("elapsed_seconds",
                               [](const modd::SolverReport& r) { return r.elapsed.count(); });

    m.def("build_graph", &modd::build_graph, py::arg("n"), py::arg("edges"));
    m.def(
        "closed_neighborhood",
        [](const modd::Graph& g, int v) { return modd::closed_neighborhood(g, v).members(); },
        py::arg("g"), py::arg("v"));
    m.def(
        "is_double_dominating",
        [](const modd::Graph& g, const std::vector<int>& s) {
            return modd::is_double_dominating(g, to_set(s));
        },
        py::arg("g"), py::arg("s"));
    m.def(
        "degree_two_vertices",
        [](const modd::Graph& g) { return modd::degree_two_vertices(g).members(); }, py::arg("g"));

    m.def(
        "recognize_mop", [](const modd::Graph& g) { return unwrap(modd::recognize_mop(g)); },
        py::arg("g"), "Embedding witness; raises ValueError when g is not maximal outerplanar.");
    m.def(
        "recognize_two_tree",
        [](const modd::Graph& g) { return unwrap(modd::recognize_two_tree(g)); }, py::arg("g"),
        "Peel certificate; raises ValueError when g is not a 2-tree.");
    m.def("internal_triangles", &modd::internal_triangles, py::arg("emb"), py::arg("g"));
    m.def("is_striped", &modd::is_striped, py::arg("emb"), py::arg("g"));

    m.def("peel_three_coloring", &modd::peel_three_coloring, py::arg("g"), py::arg("peel"));
    m.def("peel_double_domination", &modd::peel_double_domination, py::arg("g"));
    m.def("rainbow_four_coloring", &modd::rainbow_four_coloring, py::arg("g"), py::arg("emb"));
    m.def("rainbow_double_domination", &modd::rainbow_double_domination, py::arg("g"),
          py::arg("emb"));
    m.def("degree_set_double_domination", &modd::degree_set_double_domination, py::arg("g"));
    m.def("dispatch_bound", &modd::dispatch_bound, py::arg("g"));

    m.def("exact_gamma_x2", &modd::exact_gamma_x2, py::arg("g"),
          py::arg("node_budget") = modd::kDefaultNodeBudget);
    m.def("brute_force_gamma_x2", &modd::brute_force_gamma_x2, py::arg("g"));

    py::enum_<modd::InnerTriangulation>(m, "InnerTriangulation")
        .value("Fan", modd::InnerTriangulation::Fan)
        .value("RandomBinary", modd::InnerTriangulation::RandomBinary);

    m.def("generate_family_u", &modd::generate_family_u, py::arg("k"),
          py::arg("inner") = modd::InnerTriangulation::Fan,
          py::arg("seed") = std::optional<std::uint64_t>{});
    m.def("generate_family_a", &modd::generate_family_a, py::arg("q"));
    m.def("generate_fan", &modd::generate_fan, py::arg("n"));
    m.def("generate_random_mop", &modd::generate_random_mop, py::arg("n"), py::arg("seed"));

    m.def("read_graph_file",
          [](const std::string& path) { return modd::read_graph_file(path); }, py::arg("path"));
    m.def(
        "write_graph_file",
        [](const std::string& path, const modd::Graph& g) { modd::write_graph_file(path, g); },
        py::arg("path"), py::arg("g"));
}
