// Command-line front end.  Every subcommand reads JSON (or edge-list text
// for graphs) from a file or stdin, writes one machine-readable document to
// stdout, and keeps diagnostics on stderr.  Exit codes: 0 success, 1 a
// verification or bound check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
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

namespace {

using namespace indcomp;

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

bool looks_like_json(const std::string& src) {
    auto i = src.find_first_not_of(" \t\r\n");
    return i != std::string::npos && src[i] == '{';
}

Graph parse_graph(const std::string& src) {
    if (looks_like_json(src)) return graph_from_json(nlohmann::json::parse(src));
    return graph_from_text(src);
}

SimplicialComplex parse_complex(const std::string& src) {
    if (!looks_like_json(src))
        fail("expected a complex as a JSON object with \"ground\" and \"facets\"");
    auto j = nlohmann::json::parse(src);
    if (j.is_object() && j.contains("edges") && !j.contains("facets"))
        fail("input is a graph; pipe it through 'indep' or 'clique' first");
    return complex_from_json(j);
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    std::vector<int> out;
    int v = 0;
    while (in >> v) out.push_back(v);
    if (!in.eof()) fail(what + " expects whitespace-separated integers, got \"" + text + "\"");
    return out;
}

std::vector<std::pair<int, int>> parse_edge_pairs(const std::string& text,
                                                  const std::string& what) {
    std::vector<std::pair<int, int>> out;
    std::istringstream pieces(text);
    std::string piece;
    while (std::getline(pieces, piece, ';')) {
        std::vector<int> ends = parse_ints(piece, what);
        if (ends.size() != 2)
            fail(what + " expects \"u v\" pairs separated by ';', got \"" + piece + "\"");
        out.push_back({ends[0], ends[1]});
    }
    if (out.empty()) fail(what + " expects at least one \"u v\" pair");
    return out;
}

void emit_graph(const Graph& g, const std::string& format) {
    if (format == "json") std::cout << graph_to_json(g).dump() << '\n';
    else if (format == "text") std::cout << graph_to_text(g);
    else std::cout << graph_to_csv(g);
}

void emit_complex(const SimplicialComplex& k, const std::string& format) {
    if (format == "json") std::cout << complex_to_json(k).dump() << '\n';
    else if (format == "text") std::cout << complex_to_text(k);
    else std::cout << complex_to_csv(k);
}

void emit_profile(const HomologyProfile& p, const std::string& format) {
    if (format == "json") std::cout << profile_to_json(p).dump() << '\n';
    else if (format == "text") std::cout << profile_to_text(p) << '\n';
    else std::cout << profile_to_csv(p);
}

void emit_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") std::cout << report_to_json(r).dump() << '\n';
    else if (format == "text") std::cout << report_to_text(r);
    else std::cout << report_to_csv(r);
}

void emit_bound(const BoundReport& r, const std::string& format) {
    if (format == "json") std::cout << bound_report_to_json(r).dump() << '\n';
    else if (format == "text") std::cout << bound_report_to_text(r);
    else std::cout << bound_report_to_csv(r);
}

int run_family(const std::string& name, const std::vector<int>& params,
               const std::string& format) {
    auto built = build_family({name, params});
    if (auto* g = std::get_if<Graph>(&built)) emit_graph(*g, format);
    else emit_complex(std::get<SimplicialComplex>(built), format);
    return 0;
}

int run_construct(const std::string& name, const std::string& input,
                  const std::string& edge, const std::string& edges,
                  const std::string& over_edges, const std::string& format) {
    if (name == "jonsson") {
        emit_graph(jonsson_graph(parse_complex(read_source(input))).graph, format);
        return 0;
    }
    Graph g = parse_graph(read_source(input));
    if (name == "csorba") {
        emit_graph(csorba_full_subdivision(g).graph, format);
    } else if (name == "subdivide-edge") {
        if (edge.empty()) fail("construct subdivide-edge requires --edge \"u v\"");
        auto ends = parse_ints(edge, "--edge");
        if (ends.size() != 2) fail("--edge expects exactly two endpoints");
        emit_graph(subdivide_edge_four(g, {ends[0], ends[1]}).graph, format);
    } else if (name == "suspension") {
        if (over_edges.empty()) fail("construct suspension requires --over-edges \"u v;u v;...\"");
        auto pairs = parse_edge_pairs(over_edges, "--over-edges");
        std::set<int> ends;
        for (auto [u, v] : pairs) { ends.insert(u); ends.insert(v); }
        Graph h = Graph::from_edge_list({ends.begin(), ends.end()}, pairs);
        emit_graph(graph_suspension(g, h).graph, format);
    } else if (name == "crossing") {
        if (edges.empty()) fail("construct crossing requires --edges \"u v;x y\"");
        auto pairs = parse_edge_pairs(edges, "--edges");
        if (pairs.size() != 2) fail("--edges expects exactly two edges");
        emit_graph(crossing_resolution(g, pairs[0], pairs[1]).graph, format);
    } else if (name == "degree3") {
        Degree3Result out = degree3_reduction(g);
        std::cerr << "shifts: " << out.shifts << '\n';
        emit_graph(out.graph, format);
    } else {
        fail("unknown construction \"" + name +
             "\"; expected jonsson, csorba, subdivide-edge, suspension, crossing, or degree3");
    }
    return 0;
}

int run_bounds(const std::string& name, const std::string& input,
               const std::string& set, const std::string& sigma, int r,
               int vertex, std::size_t cap, const std::string& format) {
    Graph g = parse_graph(read_source(input));
    BoundReport report;
    if (name == "clawfree") {
        report = report_clawfree(g);
    } else if (name == "engstrom") {
        report = report_engstrom(g);
    } else if (name == "diameter") {
        report = report_diameter(g);
    } else if (name == "maxdeg") {
        report = report_maxdeg(g);
    } else if (name == "distance3") {
        if (set.empty()) fail("bounds distance3 requires --set \"v1 v2 ...\"");
        report = report_distance3(g, parse_ints(set, "--set"));
    } else if (name == "extension") {
        if (sigma.empty()) fail("bounds extension requires --sigma \"v1 v2 ...\" and --r N");
        report = report_extension(g, Simplex(parse_ints(sigma, "--sigma")), r);
    } else if (name == "catloc") {
        if (g.vertex_count() == 0) fail("bounds catloc needs a non-empty graph");
        int v = vertex;
        if (v < 0) {
            v = g.vertices().front();
            for (int u : g.vertices())
                if (g.degree(u) > g.degree(v)) v = u;
        }
        report = report_catloc(g, v, cap);
    } else if (name == "chromatic") {
        report = report_chromatic(g, cap);
    } else {
        fail("unknown bound \"" + name +
             "\"; expected clawfree, engstrom, distance3, diameter, maxdeg, extension, "
             "catloc, or chromatic");
    }
    emit_bound(report, format);
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence complexes: families, constructions, homology, verification"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    std::string family_name;
    std::vector<int> family_params;
    auto* fam = app.add_subcommand("family", "Emit a named graph or complex");
    fam->add_option("name", family_name, "One of: " + [] {
                        std::string all;
                        for (const auto& n : family_names()) all += all.empty() ? n : ", " + n;
                        return all;
                    }())
        ->required();
    fam->add_option("params", family_params, "Integer parameters");

    std::string indep_input = "-";
    auto* ind = app.add_subcommand("indep", "Independence complex of a graph");
    ind->add_option("input", indep_input, "Graph file or - for stdin");

    std::string clique_input = "-";
    auto* clq = app.add_subcommand("clique", "Clique complex of a graph");
    clq->add_option("input", clique_input, "Graph file or - for stdin");

    std::string homology_input = "-";
    auto* hom = app.add_subcommand("homology", "Reduced integral homology of a complex");
    hom->add_option("input", homology_input, "Complex file or - for stdin");

    std::string construct_name, construct_input = "-";
    std::string construct_edge, construct_edges, construct_over;
    auto* con = app.add_subcommand(
        "construct", "Apply a graph construction (jonsson reads a complex)");
    con->add_option("name", construct_name,
                    "jonsson | csorba | subdivide-edge | suspension | crossing | degree3")
        ->required();
    con->add_option("input", construct_input, "Input file or - for stdin");
    con->add_option("--edge", construct_edge, "Edge \"u v\" for subdivide-edge");
    con->add_option("--edges", construct_edges, "Two edges \"u v;x y\" for crossing");
    con->add_option("--over-edges", construct_over,
                    "Subgraph edges \"u v;x y;...\" for suspension");

    std::string suite;
    SuiteOptions suite_opts;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "One of: " + [] {
                       std::string all;
                       for (const auto& n : suite_names()) all += all.empty() ? n : ", " + n;
                       return all;
                   }())
        ->required();
    ver->add_option("--seed", suite_opts.seed, "Corpus seed");
    ver->add_option("--threads", suite_opts.threads, "Worker cap; 0 = hardware");
    ver->add_option("--nmax", suite_opts.n_max, "Size cap where the suite takes one");
    ver->add_option("--kmax", suite_opts.k_max, "Parameter cap where the suite takes one");
    ver->add_option("--vmax", suite_opts.v_max, "Vertex cap where the suite takes one");
    ver->add_option("--count", suite_opts.count, "Random case count where the suite takes one");

    std::string collapse_input = "-";
    auto* col = app.add_subcommand("collapse", "Greedy collapse trace of a complex");
    col->add_option("input", collapse_input, "Complex file or - for stdin");

    std::string bound_name, bound_input = "-";
    std::string bound_set, bound_sigma;
    int bound_r = 0, bound_vertex = -1;
    std::size_t cap_chromatic = 20;
    auto* bnd = app.add_subcommand("bounds", "Connectivity and category bounds with evidence");
    bnd->add_option("name", bound_name,
                    "clawfree | engstrom | distance3 | diameter | maxdeg | extension | "
                    "catloc | chromatic")
        ->required();
    bnd->add_option("input", bound_input, "Graph file or - for stdin");
    bnd->add_option("--set", bound_set, "Vertex set \"v1 v2 ...\" for distance3");
    bnd->add_option("--sigma", bound_sigma, "Independent set \"v1 v2 ...\" for extension");
    bnd->add_option("--r", bound_r, "Extension degree");
    bnd->add_option("--vertex", bound_vertex, "Split vertex for catloc; default max degree");
    bnd->add_option("--cap-chromatic", cap_chromatic, "Piece cap for catloc/chromatic covers");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(fam)) return run_family(family_name, family_params, format);
        if (app.got_subcommand(ind)) {
            emit_complex(independence_complex(parse_graph(read_source(indep_input))), format);
            return 0;
        }
        if (app.got_subcommand(clq)) {
            emit_complex(clique_complex(parse_graph(read_source(clique_input))), format);
            return 0;
        }
        if (app.got_subcommand(hom)) {
            emit_profile(reduced_homology(parse_complex(read_source(homology_input))), format);
            return 0;
        }
        if (app.got_subcommand(con))
            return run_construct(construct_name, construct_input, construct_edge,
                                 construct_edges, construct_over, format);
        if (app.got_subcommand(ver)) {
            VerificationReport report = run_suite(suite, suite_opts);
            emit_report(report, format);
            return report.ok() ? 0 : 1;
        }
        if (app.got_subcommand(col)) {
            if (format != "json") fail("collapse traces are JSON only; drop --format");
            CollapseTrace trace = greedy_collapse(parse_complex(read_source(collapse_input)));
            std::cout << trace_to_json(trace).dump() << '\n';
            return 0;
        }
        if (app.got_subcommand(bnd))
            return run_bounds(bound_name, bound_input, bound_set, bound_sigma, bound_r,
                              bound_vertex, cap_chromatic, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
