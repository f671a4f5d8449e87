#include <catch2/catch_amalgamated.hpp>

#include "hyperseq/campaigns.hpp"
#include "hyperseq/json_io.hpp"

using namespace hyperseq;

TEST_CASE("campaign registry lookup") {
    CHECK(find_campaign("roundtrip-L") != nullptr);
    CHECK(find_campaign("I5710") != nullptr);
    CHECK(find_campaign("S610") != nullptr);
    CHECK(find_campaign("no-such-identity") == nullptr);
    CHECK_THROWS_AS(run_campaign("no-such-identity", 1, 1, 0), InvalidParameter);
}

TEST_CASE("campaigns pass at reduced sizes") {
    for (const auto& [id, trials, n_max] :
         std::vector<std::tuple<std::string, long, unsigned>>{
             {"roundtrip-L", 8, 8},
             {"roundtrip-Ltilde", 8, 8},
             {"roundtrip-Lab", 8, 8},
             {"roundtrip-binomial", 4, 8},
             {"dixon", 8, 6},
             {"chu-vandermonde", 8, 6},
             {"binomial-chu", 6, 8},
             {"T440", 8, 6},
             {"T448", 6, 6},
             {"T450", 8, 6},
             {"T460", 8, 6},
             {"T470", 8, 6},
             {"sun-chen-r0", 6, 6},
             {"scaling", 6, 6},
             {"ltilde-inv-altform", 1, 12},
             {"oracle-hyper", 40, 8},
             {"I5710", 5, 4},
             {"I540", 4, 4},
             {"S610", 2, 3},
         }) {
        const auto report = run_campaign(id, trials, n_max, 9);
        INFO(id);
        CHECK(report.passed());
        CHECK(report.identity == id);
    }
}

TEST_CASE("the broken fixture always fails with a counterexample") {
    const auto report = run_campaign("fixture-broken-roundtrip", 1, 16, 3);
    CHECK(report.status == VerifyStatus::Fail);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->lhs != report.counterexample->rhs);
}

TEST_CASE("first trials force the limit parameters") {
    const auto l_report = run_campaign("roundtrip-L", 1, 6, 17);
    REQUIRE_FALSE(l_report.parameter_draw.empty());
    CHECK(l_report.parameter_draw[0].second == "0");

    const auto lt_report = run_campaign("roundtrip-Ltilde", 2, 6, 17);
    CHECK(lt_report.parameter_draw[0].second == "-1"); // draw of the last trial

    const auto lab_report = run_campaign("roundtrip-Lab", 1, 6, 17);
    CHECK(lab_report.parameter_draw[0].second == "0");
}

TEST_CASE("reports are reproducible from the seed") {
    const auto first = run_campaign("I5810", 6, 5, 23);
    const auto second = run_campaign("I5810", 6, 5, 23);
    auto a = report_to_json(first);
    auto b = report_to_json(second);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
    CHECK(first.passed());
}
