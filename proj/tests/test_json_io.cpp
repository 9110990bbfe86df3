#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indcomp/collapse.hpp"
#include "indcomp/families.hpp"
#include "indcomp/json_io.hpp"

using namespace indcomp;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    auto g = Graph::from_edge_list({0, 1, 2, 3, 4, 7}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto j = graph_to_json(g);
    CHECK(j.at("vertices") == json({0, 1, 2, 3, 4, 7}));
    CHECK(j.at("edges").size() == 5);
    CHECK(graph_from_json(j) == g);

    CHECK(graph_from_json(json::parse(R"({"vertices":[0],"edges":[]})")) ==
          Graph::from_edge_list({0}, {}));
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":[0],"edges":[[0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":["a"],"edges":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse("[]")), std::invalid_argument);
}

TEST_CASE("graph text round trip") {
    auto g = Graph::from_edge_list({0, 1, 2, 5}, {{0, 1}, {1, 2}});
    auto text = graph_to_text(g);
    CHECK(text == "#vertex 5\n0 1\n1 2\n");
    CHECK(graph_from_text(text) == g);

    CHECK(graph_from_text("  # a comment\n\n0 1\n#vertex 9\n") ==
          Graph::from_edge_list({0, 1, 9}, {{0, 1}}));
    CHECK(graph_from_text("") == Graph());

    CHECK_THROWS_WITH(graph_from_text("0 x\n"), doctest::Contains("line 1, column 3"));
    CHECK_THROWS_WITH(graph_from_text("0 1\n2 3 4\n"), doctest::Contains("line 2, column 5"));
    CHECK_THROWS_WITH(graph_from_text("#vertex\n"), doctest::Contains("line 1"));
    CHECK_THROWS_AS(graph_from_text("7\n"), std::invalid_argument);
}

TEST_CASE("complex json round trip") {
    auto k = SimplicialComplex::from_facets({{0, 1}, {1, 2}}, std::vector<int>{0, 1, 2, 3});
    auto j = complex_to_json(k);
    CHECK(j.at("ground") == json({0, 1, 2, 3}));
    CHECK(j.at("facets") == json({{0, 1}, {1, 2}}));
    CHECK(complex_from_json(j) == k);

    CHECK(complex_from_json(json::parse(R"({"facets":[[0,1]]})")) ==
          SimplicialComplex::from_facets({{0, 1}}));
    CHECK(complex_from_json(json::parse(R"({"ground":[],"facets":[]})")) == SimplicialComplex());
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"ground":[0]})")), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[0]})")), std::invalid_argument);
}

TEST_CASE("profile json matches the pinned wire format") {
    auto hexagon = reduced_homology(independence_complex(cycle(6)));
    CHECK(profile_to_json(hexagon).dump() == R"({"1":{"betti":2,"torsion":[]}})");
    CHECK(profile_from_json(profile_to_json(hexagon)) == hexagon);

    auto torsion = HomologyProfile({{1, HomologyGroup{0, {BigInt(2)}}}});
    CHECK(profile_to_json(torsion).dump() == R"({"1":{"betti":0,"torsion":[2]}})");
    CHECK(profile_from_json(profile_to_json(torsion)) == torsion);

    auto empty_complex = HomologyProfile({{-1, HomologyGroup{1, {}}}});
    CHECK(profile_to_json(empty_complex).contains("-1"));
    CHECK(profile_from_json(profile_to_json(empty_complex)) == empty_complex);

    CHECK(profile_to_json(HomologyProfile()).dump() == "{}");
    CHECK(profile_from_json(json::parse("{}")) == HomologyProfile());

    auto big = HomologyProfile({{0, HomologyGroup{0, {BigInt("123456789012345678901234567890")}}}});
    CHECK(profile_from_json(profile_to_json(big)) == big);

    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"x":{"betti":1,"torsion":[]}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"1":{"betti":1}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"1":{"betti":"x","torsion":[]}})")),
                    std::invalid_argument);
}

TEST_CASE("relation json round trip") {
    auto r = Relation::create({0, 1}, {0, 1, 2}, {{0, 0}, {1, 2}});
    auto j = relation_to_json(r);
    CHECK(j.at("X") == json({0, 1}));
    CHECK(j.at("pairs") == json({{0, 0}, {1, 2}}));
    auto back = relation_from_json(j);
    CHECK(back.xs == r.xs);
    CHECK(back.ys == r.ys);
    CHECK(back.pairs == r.pairs);
    CHECK_THROWS_AS(relation_from_json(json::parse(R"({"X":[0],"Y":[0]})")),
                    std::invalid_argument);
}

TEST_CASE("collapse trace json") {
    auto trace = greedy_collapse(SimplicialComplex::from_facets({{0, 1, 2}}));
    auto j = trace_to_json(trace);
    CHECK(j.at("collapsible") == true);
    CHECK(j.at("steps").is_array());
    CHECK(!j.at("steps").empty());
    CHECK(j.at("steps")[0].size() == 2);
    CHECK(j.at("residual").at("facets").size() == 1);
}

TEST_CASE("bound report json and text") {
    BoundReport report{"distance3", "S={0,3,6}", 1, "connectivity level 1 >= 1", true};
    auto j = bound_report_to_json(report);
    CHECK(j.at("bound_name") == "distance3");
    CHECK(j.at("claimed") == 1);
    CHECK(j.at("ok") == true);
    CHECK(bound_report_to_text(report) ==
          "distance3 (S={0,3,6}): claimed 1; connectivity level 1 >= 1; ok\n");
    CHECK(bound_report_to_csv(report) ==
          "bound,inputs,claimed,evidence,ok\n"
          "distance3,\"S={0,3,6}\",1,connectivity level 1 >= 1,1\n");
}

TEST_CASE("verification report json embeds repro payloads") {
    VerificationReport report;
    report.suite = "demo";
    report.seed = 7;
    report.cases.push_back({"n=3", "{0: Z^2}", "{0: Z^2}", true, ""});
    report.cases.push_back({"n=4", "point", "{0: Z}", false,
                            R"({"graph":{"vertices":[0],"edges":[]}})"});
    CHECK(report.passed() == 1);
    CHECK(report.failed() == 1);
    CHECK_FALSE(report.ok());

    auto j = report_to_json(report);
    CHECK(j.at("suite") == "demo");
    CHECK(j.at("seed") == 7);
    CHECK(j.at("summary").at("pass") == 1);
    CHECK(j.at("summary").at("fail") == 1);
    CHECK(!j.at("cases")[0].contains("repro"));
    CHECK(j.at("cases")[1].at("repro").at("graph").at("vertices") == json({0}));

    auto text = report_to_text(report);
    CHECK(text.find("1 pass, 1 fail") != std::string::npos);
    CHECK(text.find("FAIL n=4") != std::string::npos);
    CHECK(text.find("n=3") == std::string::npos);
}

TEST_CASE("text and csv renderings") {
    CHECK(profile_to_text(HomologyProfile()) == "point");
    auto mixed = HomologyProfile(
        {{0, HomologyGroup{2, {}}}, {1, HomologyGroup{1, {BigInt(2), BigInt(4)}}}});
    CHECK(profile_to_text(mixed) == "{0: Z^2, 1: Z + Z/2 + Z/4}");
    CHECK(profile_to_csv(mixed) == "degree,betti,torsion\n0,2,\n1,1,2;4\n");

    auto g = Graph::from_edge_list({0, 1, 2}, {{0, 1}});
    CHECK(graph_to_csv(g) == "2,\n0,1\n");
    CHECK(complex_to_text(independence_complex(g)) == "ground: 0 1 2\n0 2\n1 2\n");
    CHECK(complex_to_csv(independence_complex(g)) == "0,2\n1,2\n");

    VerificationReport report;
    report.suite = "demo";
    report.cases.push_back({"a,b", "x", "\"y\"", true, ""});
    CHECK(report_to_csv(report) == "params,expected,computed,pass\n\"a,b\",x,\"\"\"y\"\"\",1\n");
}
