#include "indcomp/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace indcomp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

const json& member(const json& j, const char* key, const char* what) {
    if (!j.is_object()) fail(std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(where + " must contain only integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + " must be an array of [a,b] pairs");
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            fail(where + " must contain [a,b] integer pairs");
        out.emplace_back(v[0].get<int>(), v[1].get<int>());
    }
    return out;
}

json big_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

BigInt big_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::runtime_error&) {
            fail(where + ": not a decimal integer");
        }
    }
    fail(where + " must be an integer or a decimal string");
}

json simplex_array(const Simplex& s) { return json(s.vertices()); }

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string group_text(const HomologyGroup& g) {
    std::vector<std::string> parts;
    if (g.betti == 1) parts.push_back("Z");
    if (g.betti > 1) parts.push_back("Z^" + std::to_string(g.betti));
    for (const BigInt& d : g.torsion) parts.push_back("Z/" + d.str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out;
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    return Graph::from_edge_list(int_list(member(j, "vertices", "graph"), "\"vertices\""),
                                 pair_list(member(j, "edges", "graph"), "\"edges\""));
}

nlohmann::json complex_to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (const Simplex& f : k.facets()) facets.push_back(simplex_array(f));
    return {{"ground", k.ground()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    const json& facets_json = member(j, "facets", "complex");
    if (!facets_json.is_array()) fail("\"facets\" must be an array of simplices");
    std::vector<std::vector<int>> facets;
    facets.reserve(facets_json.size());
    for (const auto& f : facets_json) facets.push_back(int_list(f, "facet"));
    std::optional<std::vector<int>> ground;
    if (j.is_object() && j.contains("ground"))
        ground = int_list(j.at("ground"), "\"ground\"");
    return SimplicialComplex::from_facets(facets, ground);
}

nlohmann::json profile_to_json(const HomologyProfile& profile) {
    json out = json::object();
    for (const auto& [degree, group] : profile.nonzero_groups()) {
        json torsion = json::array();
        for (const BigInt& d : group.torsion) torsion.push_back(big_to_json(d));
        out[std::to_string(degree)] = {{"betti", group.betti}, {"torsion", torsion}};
    }
    return out;
}

HomologyProfile profile_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail("profile must be a JSON object keyed by degree");
    std::map<int, HomologyGroup> groups;
    for (const auto& [key, value] : j.items()) {
        int degree = 0;
        std::size_t used = 0;
        try {
            degree = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size()) fail("profile key \"" + key + "\" is not a degree");
        HomologyGroup group;
        const json& betti = member(value, "betti", "homology group");
        if (!betti.is_number_integer()) fail("\"betti\" must be an integer");
        group.betti = betti.get<long>();
        const json& torsion = member(value, "torsion", "homology group");
        if (!torsion.is_array()) fail("\"torsion\" must be an array");
        for (const auto& d : torsion) group.torsion.push_back(big_from_json(d, "torsion entry"));
        groups[degree] = std::move(group);
    }
    return HomologyProfile(std::move(groups));
}

nlohmann::json relation_to_json(const Relation& r) {
    json pairs = json::array();
    for (const auto& [x, y] : r.pairs) pairs.push_back({x, y});
    return {{"X", r.xs}, {"Y", r.ys}, {"pairs", pairs}};
}

Relation relation_from_json(const nlohmann::json& j) {
    auto pairs = pair_list(member(j, "pairs", "relation"), "\"pairs\"");
    return Relation::create(int_list(member(j, "X", "relation"), "\"X\""),
                            int_list(member(j, "Y", "relation"), "\"Y\""),
                            std::set<std::pair<int, int>>(pairs.begin(), pairs.end()));
}

nlohmann::json trace_to_json(const CollapseTrace& trace) {
    json steps = json::array();
    for (const CollapseStep& s : trace.steps)
        steps.push_back({simplex_array(s.free_face), simplex_array(s.coface)});
    return {{"steps", steps},
            {"residual", complex_to_json(trace.residual)},
            {"collapsible", trace.collapsible()}};
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
    return {{"bound_name", report.bound_name},
            {"inputs", report.inputs},
            {"claimed", report.claimed},
            {"evidence", report.evidence},
            {"ok", report.ok}};
}

nlohmann::json report_to_json(const VerificationReport& report) {
    json cases = json::array();
    for (const CaseResult& c : report.cases) {
        json entry = {{"params", c.params},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}};
        if (!c.repro.empty()) entry["repro"] = json::parse(c.repro);
        cases.push_back(std::move(entry));
    }
    return {{"suite", report.suite},
            {"seed", report.seed},
            {"cases", std::move(cases)},
            {"summary", {{"pass", report.passed()}, {"fail", report.failed()}}}};
}

std::string graph_to_text(const Graph& g) {
    std::string out;
    for (int v : g.vertices())
        if (g.degree(v) == 0) out += "#vertex " + std::to_string(v) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph graph_from_text(const std::string& text) {
    std::vector<int> declared;
    std::vector<std::pair<int, int>> edges;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::size_t pos = 0;
        auto at = [&](const char* what) {
            return "line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1) +
                   ": " + what;
        };
        auto skip_ws = [&] {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        };
        auto parse_int = [&] {
            skip_ws();
            std::size_t start = pos;
            if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos == start || !std::isdigit(static_cast<unsigned char>(line[pos - 1]))) {
                pos = start;
                fail(at("expected an integer"));
            }
            try {
                return std::stoi(line.substr(start, pos - start));
            } catch (const std::out_of_range&) {
                pos = start;
                fail(at("integer out of range"));
            }
        };
        skip_ws();
        if (pos == line.size()) continue;
        if (line[pos] == '#') {
            if (line.compare(pos, 7, "#vertex") == 0) {
                pos += 7;
                declared.push_back(parse_int());
                skip_ws();
                if (pos != line.size()) fail(at("unexpected text after vertex label"));
            }
            continue;
        }
        int u = parse_int();
        int v = parse_int();
        skip_ws();
        if (pos != line.size()) fail(at("unexpected text after edge"));
        edges.emplace_back(u, v);
    }
    std::set<int> vertex_set(declared.begin(), declared.end());
    for (const auto& [u, v] : edges) {
        vertex_set.insert(u);
        vertex_set.insert(v);
    }
    return Graph::from_edge_list(std::vector<int>(vertex_set.begin(), vertex_set.end()), edges);
}

std::string complex_to_text(const SimplicialComplex& k) {
    std::string out = "ground: " + join_ints(k.ground(), " ") + "\n";
    for (const Simplex& f : k.facets()) out += join_ints(f.vertices(), " ") + "\n";
    return out;
}

std::string profile_to_text(const HomologyProfile& profile) {
    if (profile.is_point()) return "point";
    std::string out = "{";
    bool first = true;
    for (const auto& [degree, group] : profile.nonzero_groups()) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(degree) + ": " + group_text(group);
    }
    return out + "}";
}

std::string report_to_text(const VerificationReport& report) {
    std::string out = "suite " + report.suite + " seed=" + std::to_string(report.seed) + ": " +
                      std::to_string(report.passed()) + " pass, " +
                      std::to_string(report.failed()) + " fail\n";
    for (const CaseResult& c : report.cases) {
        if (c.pass) continue;
        out += "FAIL " + c.params + ": expected " + c.expected + ", computed " + c.computed + "\n";
        if (!c.repro.empty()) out += "  repro: " + c.repro + "\n";
    }
    return out;
}

std::string graph_to_csv(const Graph& g) {
    std::string out;
    for (int v : g.vertices())
        if (g.degree(v) == 0) out += std::to_string(v) + ",\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + "," + std::to_string(v) + "\n";
    return out;
}

std::string complex_to_csv(const SimplicialComplex& k) {
    std::string out;
    for (const Simplex& f : k.facets()) out += join_ints(f.vertices(), ",") + "\n";
    return out;
}

std::string profile_to_csv(const HomologyProfile& profile) {
    std::string out = "degree,betti,torsion\n";
    for (const auto& [degree, group] : profile.nonzero_groups()) {
        std::string torsion;
        for (std::size_t i = 0; i < group.torsion.size(); ++i) {
            if (i) torsion += ";";
            torsion += group.torsion[i].str();
        }
        out += std::to_string(degree) + "," + std::to_string(group.betti) + "," + torsion + "\n";
    }
    return out;
}

std::string report_to_csv(const VerificationReport& report) {
    std::string out = "params,expected,computed,pass\n";
    for (const CaseResult& c : report.cases)
        out += csv_escape(c.params) + "," + csv_escape(c.expected) + "," +
               csv_escape(c.computed) + "," + (c.pass ? "1" : "0") + "\n";
    return out;
}

std::string bound_report_to_csv(const BoundReport& report) {
    return "bound,inputs,claimed,evidence,ok\n" + csv_escape(report.bound_name) + "," +
           csv_escape(report.inputs) + "," + std::to_string(report.claimed) + "," +
           csv_escape(report.evidence) + "," + (report.ok ? "1" : "0") + "\n";
}

std::string bound_report_to_text(const BoundReport& report) {
    return report.bound_name + " (" + report.inputs + "): claimed " +
           std::to_string(report.claimed) + "; " + report.evidence + "; " +
           (report.ok ? "ok" : "violated") + "\n";
}

}  // namespace indcomp
