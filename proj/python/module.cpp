#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "golay486/constructions.hpp"
#include "golay486/diagram.hpp"
#include "golay486/report.hpp"

namespace py = pybind11;
using namespace golay486;
namespace cn = golay486::constructions;

namespace {

const cn::OrbitalContext& bundled_context() {
    static const cn::OrbitalContext ctx = cn::load_orbital_context();
    return ctx;
}

graph::Graph build(const std::string& name) {
    if (name == "gamma") return cn::build_gamma();
    if (name == "sigma-coordinate") return cn::build_sigma_coordinate().graph;
    if (name == "lambda-coordinate") return cn::build_lambda_coordinate();
    if (name == "ag5") return cn::build_std_ag(5);
    if (name == "shortened") return codes::coset_graph(codes::shorten(codes::golay_code(), 0));
    const auto& ctx = bundled_context();
    if (name == "delta") return cn::build_from_orbitals(ctx, cn::OrbitalModel::Delta).graph;
    if (name == "upsilon") return cn::build_from_orbitals(ctx, cn::OrbitalModel::Upsilon).graph;
    if (name == "sigma") return cn::build_from_orbitals(ctx, cn::OrbitalModel::Sigma).graph;
    if (name == "lambda") return cn::build_from_orbitals(ctx, cn::OrbitalHalfGraph::Lambda).graph;
    if (name == "gamma-half") return cn::build_from_orbitals(ctx, cn::OrbitalHalfGraph::GammaHalf).graph;
    throw InputError("unknown graph '" + name + "'");
}

py::object array_or_none(const graph::Graph& g) {
    const auto a = graph::is_distance_regular(g);
    if (!a) return py::none();
    return py::make_tuple(a->b, a->c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ternary Golay code graphs on 486 vertices";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
    py::register_exception<InputError>(m, "InputError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<StructureError>(m, "StructureError", error.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", error.ptr());
    py::register_exception<DataError>(m, "DataError", error.ptr());

    py::class_<graph::Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<graph::Edge>& edges) {
                 return graph::Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &graph::Graph::vertex_count)
        .def_property_readonly("edge_count", &graph::Graph::edge_count)
        .def("degree", &graph::Graph::degree)
        .def("has_edge", &graph::Graph::has_edge)
        .def("neighbors",
             [](const graph::Graph& g, graph::Vertex v) {
                 if (v >= g.vertex_count()) throw InputError("vertex out of range");
                 const auto n = g.neighbors(v);
                 return std::vector<graph::Vertex>(n.begin(), n.end());
             })
        .def("edges", &graph::Graph::edges)
        .def("graph6", [](const graph::Graph& g) { return graph::graph6_encode(g); })
        .def_static("from_graph6", [](const std::string& s) { return graph::graph6_decode(s); })
        .def("__eq__", [](const graph::Graph& a, const graph::Graph& b) { return a == b; })
        .def("__repr__", [](const graph::Graph& g) {
            std::ostringstream s;
            s << "<Graph n=" << g.vertex_count() << " m=" << g.edge_count() << ">";
            return s.str();
        });

    m.def("build", &build, py::arg("name"),
          "gamma, gamma-half, delta, upsilon, sigma, lambda, sigma-coordinate, lambda-coordinate, ag5 or shortened.");
    m.def("complement", &graph::complement);
    m.def("intersection_array", &array_or_none, "(b, c) when the graph is distance-regular, else None.");
    m.def("srg_parameters", [](const graph::Graph& g) -> py::object {
        const auto p = graph::srg_parameters(g);
        if (!p) return py::none();
        return py::make_tuple(p->n, p->k, p->lambda, p->mu);
    });
    m.def("antipodal_fold", [](const graph::Graph& g) { return graph::antipodal_fold(g).folded; });
    m.def(
        "are_isomorphic",
        [](const graph::Graph& a, const graph::Graph& b, std::uint64_t budget) {
            graph::IsomorphismOptions options;
            options.refinement_budget = budget;
            const auto r = graph::are_isomorphic(a, b, options);
            py::dict out;
            out["verdict"] = graph::to_string(r.verdict);
            out["mapping"] = r.mapping;
            out["refinement_steps"] = r.refinement_steps;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("budget") = graph::IsomorphismOptions{}.refinement_budget);
    m.def("is_isomorphism", &graph::is_isomorphism);
    m.def("distance_diagram", [](const graph::Graph& g, const std::string& name) {
        const auto a = graph::is_distance_regular(g);
        if (!a) throw StructureError("graph is not distance-regular");
        return diagram::distance_diagram_dot(*a, name);
    }, py::arg("graph"), py::arg("name") = "distance");

    m.def("golay_parameters", [] {
        const auto g = codes::golay_code();
        py::dict out;
        out["n"] = g.length();
        out["k"] = g.dimension();
        out["d"] = codes::minimum_distance(g);
        out["perfect"] = codes::is_perfect(g, 2);
        return out;
    });
    m.def("weight_distribution", [](bool shortened) {
        const auto g = codes::golay_code();
        return codes::weight_distribution(shortened ? codes::shorten(g, 0) : g).counts;
    }, py::arg("shortened") = false);
    m.def("coset_shape_counts", [] {
        const auto c = codes::classify_cosets(codes::golay_code());
        return std::vector<std::size_t>(c.counts.begin(), c.counts.end());
    });
    m.def("type_counts", [] {
        const auto f = cn::classify_types();
        return py::make_tuple(f.count(cn::SubspaceType::TypeI), f.count(cn::SubspaceType::TypeII));
    }, "Numbers of intermediate subspaces with the Type I and Type II weight distributions.");

    m.def("bundled_generators", [] { return std::string(cn::bundled_generators()); });
    m.def("group_order", [](std::uint64_t seed) {
        return permaction::group_order(bundled_context().action, seed).str();
    }, py::arg("seed") = permaction::kDefaultSeed, "Order of the bundled action, as a decimal string.");
    m.def("suborbit_sizes", [] { return bundled_context().decomposition.suborbit_sizes(); });
    m.def("scan", [] {
        std::vector<std::pair<std::vector<std::size_t>, std::string>> out;
        for (const auto& u : permaction::scan_orbital_unions(bundled_context().decomposition))
            out.emplace_back(u.ids, u.array.to_string());
        return out;
    }, "Distance-regular orbital unions as (orbital ids, array) pairs.");

    m.def("verify_json", [](const std::vector<std::string>& skip, std::optional<std::string> generators) {
        report::VerifyOptions options;
        options.skip = {skip.begin(), skip.end()};
        options.generator_path = std::move(generators);
        py::gil_scoped_release release;
        return report::to_json(report::verify_all(options));
    }, py::arg("skip") = std::vector<std::string>{}, py::arg("generators") = py::none());
}
