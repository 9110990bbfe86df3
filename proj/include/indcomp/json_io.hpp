#pragma once

#include <json.hpp>
#include <string>

#include "indcomp/bounds.hpp"
#include "indcomp/collapse.hpp"
#include "indcomp/complex.hpp"
#include "indcomp/constructions.hpp"
#include "indcomp/graph.hpp"
#include "indcomp/homology.hpp"
#include "indcomp/verify.hpp"

namespace indcomp {

// Wire formats.  All parsers throw std::invalid_argument with a message
// naming the offending field; JSON syntax errors propagate from the json
// library with line/column positions.
//
//   graph    {"vertices":[ints],"edges":[[u,v],...]}
//   complex  {"ground":[ints],"facets":[[ints],...]}   facets lex-sorted
//   profile  {"k":{"betti":b,"torsion":[d1,...]}}      nonzero degrees only
//   relation {"X":[...],"Y":[...],"pairs":[[x,y],...]}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const HomologyProfile& profile);
HomologyProfile profile_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

// Steps as ordered [free_face, coface] pairs plus the residual complex.
nlohmann::json trace_to_json(const CollapseTrace& trace);

nlohmann::json bound_report_to_json(const BoundReport& report);

// {"suite":...,"seed":...,"cases":[...],"summary":{"pass":n,"fail":m}}.
// A failing case carries its repro payload as an embedded object.
nlohmann::json report_to_json(const VerificationReport& report);

// Whitespace edge-list text: one "u v" line per edge, isolated vertices on
// "#vertex u" lines, other # lines ignored.  Parse errors cite line and
// column.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

// Human-oriented renderings used by the command line.
std::string complex_to_text(const SimplicialComplex& k);
std::string profile_to_text(const HomologyProfile& profile);
std::string report_to_text(const VerificationReport& report);

// Flat comma-separated forms: graphs one edge per row (isolated vertices
// "u,"), complexes one facet per row, profiles "degree,betti,torsion" with
// ;-joined torsion, reports one case per row.
std::string graph_to_csv(const Graph& g);
std::string complex_to_csv(const SimplicialComplex& k);
std::string profile_to_csv(const HomologyProfile& profile);
std::string report_to_csv(const VerificationReport& report);
std::string bound_report_to_csv(const BoundReport& report);
std::string bound_report_to_text(const BoundReport& report);

}  // namespace indcomp
