#include <catch2/catch_amalgamated.hpp>

#include "hyperseq/campaigns.hpp"
#include "hyperseq/random.hpp"
#include "hyperseq/sums.hpp"

using namespace hyperseq;

namespace {

GaussianRational g(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

SumIdentity make(SumId tag, std::map<std::string, GaussianRational> params) {
    SumIdentity id;
    id.tag = tag;
    id.params = std::move(params);
    return id;
}

} // namespace

TEST_CASE("double sums: frozen examples") {
    SECTION("five-parameter sum at n_max = 0") {
        const auto id = make(SumId::S610, {{"a", g(5, 3)},
                                           {"b", g(1, 2)},
                                           {"c", g(1, 3)},
                                           {"d", g(1, 4)},
                                           {"e", g(1, 5)}});
        const auto report = verify_sum(id, 0);
        CHECK(report.passed());
    }
    SECTION("S640 sample parameters") {
        const auto id = make(SumId::S640,
                             {{"a", g(3)}, {"b", g(1, 2)}, {"c", g(1, 3)}, {"d", g(1, 4)}});
        CHECK(verify_sum(id, 3).passed());
        CHECK(rederive_sum(id, 3).passed());
    }
    SECTION("S620 sample parameters") {
        const auto id = make(SumId::S620,
                             {{"a", g(5, 2)}, {"b", g(1, 3)}, {"c", g(1, 5)}, {"d", g(3, 2)}});
        CHECK(verify_sum(id, 3).passed());
        CHECK(rederive_sum(id, 3).passed());
    }
}

TEST_CASE("double sums: re-derivation routes hold for fixed draws") {
    const auto s610 = make(SumId::S610, {{"a", g(7, 5)},
                                         {"b", g(-2, 3)},
                                         {"c", g(4, 7)},
                                         {"d", g(5, 6)},
                                         {"e", g(-1, 2)}});
    CHECK(rederive_sum(s610, 4).passed());
    CHECK(verify_sum(s610, 4).passed());

    const auto s630 = make(SumId::S630,
                           {{"a", g(9, 4)}, {"b", g(2, 5)}, {"c", g(-3, 7)}, {"d", g(5, 3)}});
    CHECK(rederive_sum(s630, 4).passed());
    const auto report = verify_sum(s630, 4);
    CHECK(report.passed());
    CHECK_FALSE(report.notes.empty());
}

TEST_CASE("sum parameter restrictions") {
    CHECK_THROWS_AS(verify_sum(make(SumId::S610, {{"a", g(0)},
                                                  {"b", g(1, 2)},
                                                  {"c", g(1, 3)},
                                                  {"d", g(1, 4)},
                                                  {"e", g(1, 5)}}),
                               2),
                    InvalidParameter);
    CHECK_THROWS_AS(verify_sum(make(SumId::S640, {{"a", g(-3)},
                                                  {"b", g(1, 2)},
                                                  {"c", g(1, 3)},
                                                  {"d", g(1, 4)}}),
                               2),
                    InvalidParameter);
    CHECK_THROWS_AS(verify_sum(make(SumId::S610, {{"b", g(1, 2)},
                                                  {"c", g(1, 3)},
                                                  {"d", g(1, 4)},
                                                  {"e", g(1, 5)}}),
                               1),
                    InvalidParameter);
}

TEST_CASE("inner-series pole draws are rejected") {
    // d + e - a transits the integer 1, so the k = 1 inner series hits a
    // vanishing denominator parameter.
    const auto id = make(SumId::S610, {{"a", g(1)},
                                       {"b", g(1, 2)},
                                       {"c", g(1, 3)},
                                       {"d", g(3, 2)},
                                       {"e", g(1, 2)}});
    CHECK_THROWS_AS(verify_sum(id, 2), DenominatorPole);
}

TEST_CASE("random draws pass both the sum and its re-derivation") {
    Sampler rng(131);
    for (SumId tag : {SumId::S610, SumId::S620, SumId::S630, SumId::S640}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto report = hyperseq::detail::sum_trial(tag, rng, 4);
            INFO(sum_tag(tag));
            CHECK(report.passed());
        }
    }
}
