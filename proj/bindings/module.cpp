// Python bindings for the core operations: graphs, complexes, homology,
// constructions, families, and the verification suites.  Wire conventions
// match the CLI JSON formats (profiles as {degree: {"betti", "torsion"}}).

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "indcomp/bounds.hpp"
#include "indcomp/collapse.hpp"
#include "indcomp/complex.hpp"
#include "indcomp/constructions.hpp"
#include "indcomp/families.hpp"
#include "indcomp/graph.hpp"
#include "indcomp/homology.hpp"
#include "indcomp/json_io.hpp"
#include "indcomp/verify.hpp"

namespace py = pybind11;

namespace {

using namespace indcomp;

// Torsion coefficients are unbounded, so they round-trip through decimal.
py::object big_to_py(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::dict profile_to_py(const HomologyProfile& profile) {
    py::dict out;
    for (const auto& [degree, group] : profile.nonzero_groups()) {
        py::list torsion;
        for (const auto& d : group.torsion) torsion.append(big_to_py(d));
        py::dict g;
        g["betti"] = group.betti;
        g["torsion"] = torsion;
        out[py::int_(degree)] = g;
    }
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    if (j.is_null()) return py::none();
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_number_unsigned()) return py::int_(j.get<std::uint64_t>());
    if (j.is_number_integer()) return py::int_(j.get<std::int64_t>());
    if (j.is_number_float()) return py::float_(j.get<double>());
    if (j.is_string()) return py::str(j.get<std::string>());
    if (j.is_array()) {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    py::dict out;
    for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
    return out;
}

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (const auto& f : k.facets()) out.push_back(f.vertices());
    return out;
}

py::object connectivity_to_py(const Connectivity& c) {
    if (c.all) return py::none();
    return py::int_(c.level);
}

py::dict trace_to_py(const CollapseTrace& trace) {
    py::dict out;
    out["collapsible"] = trace.collapsible();
    py::list steps;
    for (const auto& s : trace.steps)
        steps.append(py::make_tuple(s.free_face.vertices(), s.coface.vertices()));
    out["steps"] = steps;
    out["residual"] = trace.residual;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Independence complexes of graphs: star clusters, exact integral "
              "homology, constructions, and verification suites";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::vector<int>& vertices,
                         const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edge_list(vertices, edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &Graph::vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) {
                 const auto& nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::vector<int>>& facets,
                         std::optional<std::vector<int>> ground) {
                 return SimplicialComplex::from_facets(facets, std::move(ground));
             }),
             py::arg("facets"), py::arg("ground") = std::nullopt)
        .def_property_readonly("ground", &SimplicialComplex::ground)
        .def_property_readonly("facets", &facet_lists)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("face_count", &SimplicialComplex::face_count)
        .def(py::self == py::self)
        .def("__repr__", [](const SimplicialComplex& k) {
            return "SimplicialComplex(dim " + std::to_string(k.dim()) + ", " +
                   std::to_string(k.facets().size()) + " facets)";
        });

    m.def("complement", &complement, py::arg("g"));
    m.def("independence_complex", &independence_complex, py::arg("g"));
    m.def("clique_complex", &clique_complex, py::arg("g"));
    m.def("is_clique", &is_clique, py::arg("k"));
    m.def("one_skeleton", &one_skeleton, py::arg("k"));

    m.def("star",
          [](const SimplicialComplex& k, const std::vector<int>& sigma) {
              return star(k, Simplex(sigma));
          },
          py::arg("k"), py::arg("sigma"));
    m.def("star_cluster",
          [](const SimplicialComplex& k, const std::vector<int>& sigma) {
              return star_cluster(k, Simplex(sigma));
          },
          py::arg("k"), py::arg("sigma"),
          "Union of the vertex stars of sigma; contractible when k is clique.");

    m.def("alexander_dual", &alexander_dual, py::arg("k"));
    m.def("cone", &cone, py::arg("k"));
    m.def("simplicial_suspension", &simplicial_suspension, py::arg("k"));
    m.def("barycentric_subdivision",
          [](const SimplicialComplex& k) { return barycentric_subdivision(k).complex; },
          py::arg("k"));
    m.def("incomparability_graph",
          [](const SimplicialComplex& k) { return incomparability_graph(k).graph; },
          py::arg("k"));

    m.def("reduced_homology",
          [](const SimplicialComplex& k) { return profile_to_py(reduced_homology(k)); },
          py::arg("k"),
          "Reduced integral homology as {degree: {'betti': b, 'torsion': [d, ...]}}; "
          "only nonzero groups appear.");
    m.def("homological_connectivity",
          [](const SimplicialComplex& k) {
              return connectivity_to_py(homological_connectivity(k));
          },
          py::arg("k"),
          "Largest level below which all reduced groups vanish; None when all do.");

    m.def("greedy_collapse",
          [](const SimplicialComplex& k) { return trace_to_py(greedy_collapse(k)); },
          py::arg("k"));

    m.def("jonsson_graph",
          [](const SimplicialComplex& k) { return jonsson_graph(k).graph; }, py::arg("k"),
          "Bipartite graph whose independence complex carries the homology of k "
          "shifted up one degree.");
    m.def("csorba_full_subdivision",
          [](const Graph& g) { return csorba_full_subdivision(g).graph; }, py::arg("g"));
    m.def("subdivide_edge_four",
          [](const Graph& g, std::pair<int, int> e) {
              return subdivide_edge_four(g, e).graph;
          },
          py::arg("g"), py::arg("edge"));
    m.def("graph_suspension",
          [](const Graph& g, const Graph& h) { return graph_suspension(g, h).graph; },
          py::arg("g"), py::arg("h"));
    m.def("crossing_resolution",
          [](const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
              return crossing_resolution(g, e1, e2).graph;
          },
          py::arg("g"), py::arg("e1"), py::arg("e2"));
    m.def("degree3_reduction",
          [](const Graph& g) {
              auto out = degree3_reduction(g);
              return py::make_tuple(out.graph, out.shifts);
          },
          py::arg("g"), "Returns (graph, shifts): homology of the input shifted up "
          "shifts degrees equals that of the output's independence complex.");
    m.def("contractibility_criterion",
          [](const Graph& g, const std::vector<int>& s) {
              return contractibility_criterion(g, s);
          },
          py::arg("g"), py::arg("s"));
    m.def("dowker_pair",
          [](const std::vector<int>& xs, const std::vector<int>& ys,
             const std::set<std::pair<int, int>>& pairs) {
              auto [kx, ky] = dowker_pair(Relation::create(xs, ys, pairs));
              return py::make_tuple(kx, ky);
          },
          py::arg("xs"), py::arg("ys"), py::arg("pairs"),
          "Both complexes of a binary relation; they share one reduced homology.");

    m.def("build_family",
          [](const std::string& name, const std::vector<int>& params) -> py::object {
              auto built = build_family({name, params});
              if (auto* g = std::get_if<Graph>(&built)) return py::cast(*g);
              return py::cast(std::get<SimplicialComplex>(built));
          },
          py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("family_names", [] { return family_names(); });
    m.def("suite_names", [] { return suite_names(); });

    m.def("run_suite",
          [](const std::string& name, std::uint64_t seed, int threads, int n_max,
             int k_max, int v_max, int count) {
              SuiteOptions opts{seed, threads, n_max, k_max, v_max, count};
              return json_to_py(report_to_json(run_suite(name, opts)));
          },
          py::arg("name"), py::arg("seed") = 0, py::arg("threads") = 0,
          py::arg("n_max") = -1, py::arg("k_max") = -1, py::arg("v_max") = -1,
          py::arg("count") = -1,
          "Runs a verification suite and returns its report as a dict.");
}
