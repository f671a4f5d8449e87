#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "hyperseq/random.hpp"
#include "hyperseq/series.hpp"
#include "hyperseq/transforms.hpp"

using namespace hyperseq;

namespace {

GaussianRational g(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

HypSeriesSpec spec_of(std::vector<GaussianRational> num, std::vector<GaussianRational> den,
                      GaussianRational z) {
    return {std::move(num), std::move(den), std::move(z)};
}

} // namespace

TEST_CASE("classify: termination and poise") {
    SECTION("terminating well-poised 3F2") {
        const auto cls = classify(spec_of({g(1), g(1, 2), g(-1)}, {g(3, 2), g(3)}, g(1)));
        CHECK(cls.terminating);
        CHECK(cls.truncation_index == 1u);
        CHECK(cls.well_poised);
        CHECK_FALSE(cls.very_well_poised);
        CHECK(cls.unit_argument);
    }
    SECTION("non-terminating") {
        const auto cls = classify(spec_of({g(1), g(2)}, {g(3)}, g(1)));
        CHECK_FALSE(cls.terminating);
        CHECK_FALSE(cls.truncation_index.has_value());
    }
    SECTION("least absolute value wins") {
        const auto cls = classify(spec_of({g(-3), g(-5), g(2)}, {g(1), g(1)}, g(1)));
        CHECK(cls.terminating);
        CHECK(cls.truncation_index == 3u);
    }
    SECTION("zero numerator parameter terminates at index 0") {
        const auto cls = classify(spec_of({g(0), g(7, 3)}, {g(5)}, g(2)));
        CHECK(cls.terminating);
        CHECK(cls.truncation_index == 0u);
    }
    SECTION("complex parameter with integer real part does not terminate") {
        const auto cls =
            classify(spec_of({GaussianRational(Rational(-2), Rational(1))}, {}, g(1)));
        CHECK_FALSE(cls.terminating);
    }
    SECTION("very-well-poised") {
        // a_2 = 1 + a_1/2 on top of a well-poised layout.
        const GaussianRational a = g(1, 3);
        const auto cls = classify(spec_of(
            {a, g(1) + a / g(2), g(-4)},
            {a / g(2), g(1) + a + g(4)}, g(1)));
        CHECK(cls.well_poised);
        CHECK(cls.very_well_poised);
    }
    SECTION("saalschutzian") {
        // denominator sum - numerator sum = 1, terminating, unit argument
        const auto cls = classify(spec_of({g(-2), g(1, 2), g(1, 3)}, {g(1, 4), g(1) + g(-2) +
                                           g(1, 2) + g(1, 3) - g(1, 4)}, g(1)));
        CHECK(cls.saalschutzian);
        const auto off = classify(spec_of({g(-2), g(1, 2), g(1, 3)}, {g(1, 4), g(2)}, g(1)));
        CHECK_FALSE(off.saalschutzian);
    }
}

TEST_CASE("classify flags stable under parameter permutation") {
    Sampler rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        HypSeriesSpec base;
        const auto p = static_cast<std::size_t>(rng.integer(1, 5));
        const auto q = static_cast<std::size_t>(rng.integer(0, 5));
        for (std::size_t i = 0; i < p; ++i)
            base.numerator_params.push_back(rng.rational(-6, 6, 1, 4));
        for (std::size_t i = 0; i < q; ++i)
            base.denominator_params.push_back(rng.rational(-6, 6, 1, 4));
        base.argument = rng.integer(0, 1) == 0 ? g(1) : GaussianRational(rng.rational());

        HypSeriesSpec shuffled = base;
        for (std::size_t i = shuffled.numerator_params.size(); i > 1; --i)
            std::swap(shuffled.numerator_params[i - 1],
                      shuffled.numerator_params[static_cast<std::size_t>(
                          rng.integer(0, static_cast<long>(i) - 1))]);
        for (std::size_t i = shuffled.denominator_params.size(); i > 1; --i)
            std::swap(shuffled.denominator_params[i - 1],
                      shuffled.denominator_params[static_cast<std::size_t>(
                          rng.integer(0, static_cast<long>(i) - 1))]);

        const auto a = classify(base);
        const auto b = classify(shuffled);
        CHECK(a.terminating == b.terminating);
        CHECK(a.truncation_index == b.truncation_index);
        CHECK(a.saalschutzian == b.saalschutzian);
        CHECK(a.unit_argument == b.unit_argument);
    }
}

TEST_CASE("eval_terminating: frozen values") {
    CHECK(eval_terminating(spec_of({g(-2), g(1)}, {g(3)}, g(1))) == g(1, 2));
    CHECK(eval_terminating(spec_of({g(0)}, {}, g(5))) == g(1));
    CHECK(eval_terminating(spec_of({g(1), g(1, 2), g(-1)}, {g(3, 2), g(3)}, g(1))) == g(8, 9));
}

TEST_CASE("eval_terminating: error paths") {
    CHECK_THROWS_AS(eval_terminating(spec_of({g(1), g(2)}, {g(3)}, g(1))), NonTerminating);
    CHECK_THROWS_AS(eval_terminating(spec_of({g(-3), g(1)}, {g(-1)}, g(1))), DenominatorPole);
    CHECK_THROWS_AS(eval_terminating(spec_of({g(-3), g(1)}, {g(0)}, g(1))), DenominatorPole);
    // Pole exactly outside the summation range is fine.
    CHECK_NOTHROW(eval_terminating(spec_of({g(-3), g(1)}, {g(-3)}, g(1))));
}

TEST_CASE("eval_terminating handles complex parameters and argument") {
    const GaussianRational z(Rational(1, 2), Rational(1, 3));
    const GaussianRational a(Rational(1, 4), Rational(-2));
    const auto spec = spec_of({g(-2), a}, {g(5, 3)}, z);
    // 1 + a z (-2)/(5/3) + [a(a+1)(-2)(-1)/(2 (5/3)(8/3))] z^2, expanded by hand below
    const GaussianRational k1 = g(-2) * a / g(5, 3) * z;
    const GaussianRational k2 =
        g(-2) * g(-1) * a * (a + g(1)) / (g(2) * g(5, 3) * g(8, 3)) * z * z;
    CHECK(eval_terminating(spec) == g(1) + k1 + k2);
}

TEST_CASE("dixon closed form: frozen values") {
    CHECK(dixon_rhs(g(1), g(1, 2), 1) == g(8, 9));
    CHECK(dixon_rhs(g(7, 3), g(-5, 4), 0) == g(1));
    CHECK(dixon_rhs(g(2), g(1), 2) == g(2, 3));
}

TEST_CASE("chu-vandermonde closed form: frozen values") {
    CHECK(chu_vandermonde_rhs(g(1), g(3), 2) == g(1, 2));
    CHECK(chu_vandermonde_rhs(g(9, 7), g(-13, 5), 0) == g(1));
    CHECK(chu_vandermonde_rhs(g(5, 3), g(5, 3), 3) == g(0));
    CHECK_THROWS_AS(chu_vandermonde_rhs(g(1), g(-2), 5), DenominatorPole);
}

TEST_CASE("dixon sum equals its closed form on random draws") {
    Sampler rng(72);
    const GaussianRational one(1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = GaussianRational(rng.draw_valid(
            [&] { return rng.rational(); },
            [](const Rational& r) { return !r.is_negative_integer(); }));
        const unsigned n_max = 10;
        const auto b = GaussianRational(rng.draw_valid(
            [&] { return rng.rational(); },
            [&](const Rational& r) {
                return pochhammer_nonzero(one + a - GaussianRational(r), n_max);
            }));
        for (unsigned n = 0; n <= n_max; ++n) {
            const auto lhs = eval_terminating(
                spec_of({a, b, g(-static_cast<long>(n))},
                        {one + a - b, one + a + g(static_cast<long>(n))}, one));
            CHECK(lhs == dixon_rhs(a, b, n));
        }
    }
}

TEST_CASE("chu-vandermonde sum equals its closed form on random draws") {
    Sampler rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = GaussianRational(rng.rational());
        const unsigned n_max = 12;
        const auto b = GaussianRational(rng.draw_valid(
            [&] { return rng.rational(); },
            [&](const Rational& r) {
                return pochhammer_nonzero(GaussianRational(r), n_max);
            }));
        for (unsigned n = 0; n <= n_max; ++n) {
            const auto lhs =
                eval_terminating(spec_of({g(-static_cast<long>(n)), a}, {b}, g(1)));
            CHECK(lhs == chu_vandermonde_rhs(a, b, n));
        }
    }
}

TEST_CASE("chu-vandermonde read as a binomial transform") {
    Sampler rng(74);
    const unsigned prefix = 12;
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = GaussianRational(rng.rational());
        const auto b = GaussianRational(rng.draw_valid(
            [&] { return rng.rational(); },
            [&](const Rational& r) { return pochhammer_nonzero(GaussianRational(r), prefix); }));
        Sequence x;
        for (unsigned k = 0; k < prefix; ++k)
            x.entries.push_back(pochhammer(a, k) / pochhammer(b, k));
        const Sequence y = apply(kernel_for({TransformKind::BinomialSigned}), x);
        for (unsigned k = 0; k < prefix; ++k)
            CHECK(y[k] == pochhammer(b - a, k) / pochhammer(b, k));
    }
}
