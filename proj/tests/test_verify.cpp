#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "indcomp/json_io.hpp"
#include "indcomp/verify.hpp"

using namespace indcomp;

namespace {

CaseResult find_case(const VerificationReport& report, const std::string& params) {
    for (const auto& c : report.cases)
        if (c.params == params) return c;
    FAIL("no case ", params, " in suite ", report.suite);
    return {};
}

}  // namespace

TEST_CASE("case runner keeps submission order whatever the thread count") {
    std::vector<std::function<CaseResult()>> jobs;
    for (int i = 0; i < 64; ++i)
        jobs.push_back([i] { return CaseResult{std::to_string(i), "", "", i % 3 != 0, ""}; });
    auto serial = run_cases(jobs, 1);
    auto parallel = run_cases(jobs, 4);
    REQUIRE(serial.size() == 64);
    for (int i = 0; i < 64; ++i) {
        CHECK(serial[i].params == std::to_string(i));
        CHECK(parallel[i].params == serial[i].params);
        CHECK(parallel[i].pass == serial[i].pass);
    }
    CHECK(run_cases({}, 4).empty());

    jobs.push_back([]() -> CaseResult { throw std::runtime_error("boom"); });
    CHECK_THROWS_AS(run_cases(jobs, 4), std::runtime_error);
}

TEST_CASE("cycle suite matches the three-way case split") {
    auto report = suite_cycles(12);
    CHECK(report.suite == "cycles");
    CHECK(report.ok());
    CHECK(report.cases.size() == 10);
    CHECK(find_case(report, "n=3").expected == "{0: Z^2}");
    CHECK(find_case(report, "n=7").expected == "{1: Z}");
    CHECK(find_case(report, "n=9").expected == "{2: Z^2}");
    CHECK(find_case(report, "n=11").expected == "{3: Z}");
    CHECK_THROWS_AS(suite_cycles(2), std::invalid_argument);
}

TEST_CASE("kneser suite pins the sphere counts") {
    auto report = suite_kneser(1);
    CHECK(report.ok());
    CHECK(find_case(report, "k=0").expected == "{2: Z}");
    CHECK(find_case(report, "k=1").expected == "{2: Z^4}");
    CHECK_THROWS_AS(suite_kneser(-1), std::invalid_argument);
}

TEST_CASE("forest suite accepts seeded corpora") {
    auto report = suite_forests(30, 10, 11);
    CHECK(report.suite == "forests");
    CHECK(report.seed == 11);
    CHECK(report.cases.size() == 30);
    CHECK(report.ok());
    for (const auto& c : report.cases) CHECK(c.repro.empty());
}

TEST_CASE("grid suite covers the plain grids and the tilde shifts") {
    auto report = suite_grids(3, 3);
    CHECK(report.ok());
    // 2 families x 4 x 4 grids plus 2 x (1+2+3) x 3 shift triples.
    CHECK(report.cases.size() == 32 + 36);
    CHECK(find_case(report, "gridH n=0 m=0").computed == "{-1: Z}");
    CHECK(find_case(report, "gridG n=0 m=0").computed == "point");
    auto shift = find_case(report, "tildeG n=3 m=2 k=0");
    CHECK(shift.pass);
}

TEST_CASE("dowker suite compares both profiles") {
    auto report = suite_dowker(5);
    CHECK(report.cases.size() == 50);
    CHECK(report.ok());
}

TEST_CASE("sharpness suite pins dimensions and spheres") {
    auto report = suite_sharpness(2);
    CHECK(report.cases.size() == 4);
    CHECK(report.ok());
    CHECK(find_case(report, "A k=2").expected == "dim 3; {1: Z}");
    CHECK(find_case(report, "B k=2").expected == "dim 2; {1: Z}");
    CHECK_THROWS_AS(suite_sharpness(0), std::invalid_argument);
}

TEST_CASE("degree two suite enumerates component multisets once") {
    auto report = suite_maxdeg2();
    CHECK(report.ok());
    std::size_t seen = 0;
    for (const auto& c : report.cases) seen += c.params == "C3+C3";
    CHECK(seen == 1);
    CHECK(find_case(report, "C3+C3").computed == "4 spheres S^1");
    CHECK(find_case(report, "P4").computed == "point");
    CHECK(find_case(report, "C12").computed == "2 spheres S^3");
    CHECK(report.cases.size() > 300);
}

TEST_CASE("smith oracle suite agrees with the reference") {
    auto report = suite_snf_oracle(40, 3);
    CHECK(report.cases.size() == 41);
    CHECK(report.ok());
    CHECK(find_case(report, "projective plane").expected == "{1: Z/2}");
}

TEST_CASE("barycentric suite matches the subdivision exactly") {
    auto report = suite_barycentric(9);
    CHECK(report.cases.size() == 105);
    CHECK(report.ok());
    CHECK(find_case(report, "solid triangle").computed == "equal on 25 faces");
}

TEST_CASE("suite dispatch honors overrides") {
    SuiteOptions opts;
    opts.n_max = 5;
    auto report = run_suite("cycles", opts);
    CHECK(report.cases.size() == 3);

    opts = {};
    opts.count = 10;
    opts.v_max = 8;
    opts.seed = 2;
    CHECK(run_suite("forests", opts).cases.size() == 10);

    opts = {};
    opts.count = 5;
    CHECK(run_suite("snf-oracle", opts).cases.size() == 6);

    CHECK_THROWS_AS(run_suite("nonsense", {}), std::invalid_argument);
    CHECK(suite_names().size() == 13);
}

TEST_CASE("reports serialize with summary counts") {
    auto report = suite_cycles(6, 2);
    auto j = report_to_json(report);
    CHECK(j.at("suite") == "cycles");
    CHECK(j.at("summary").at("pass") == 4);
    CHECK(j.at("summary").at("fail") == 0);
    CHECK(j.at("cases").size() == 4);
    CHECK(j.at("cases")[0].at("params") == "n=3");
}
