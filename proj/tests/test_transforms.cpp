#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hyperseq/random.hpp"
#include "hyperseq/transforms.hpp"

using namespace hyperseq;

namespace {

GaussianRational g(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

Rational draw_l_parameter(Sampler& rng) {
    return rng.draw_valid([&] { return rng.rational(); },
                          [](const Rational& r) { return !r.is_negative_integer(); });
}

Rational draw_ltilde_parameter(Sampler& rng) {
    return rng.draw_valid([&] { return rng.rational(); },
                          [](const Rational& r) { return !(r.is_integer() && r <= Rational(-2)); });
}

Rational draw_lab_b(Sampler& rng) {
    return rng.draw_valid([&] { return rng.rational(); },
                          [](const Rational& r) { return !r.is_nonpositive_integer(); });
}

void check_roundtrip(const TransformSpec& spec, const Sequence& x) {
    const Sequence y = apply(kernel_for(spec), x);
    const Sequence back = apply(kernel_for(invert(spec)), y);
    CHECK(back == x);
}

} // namespace

TEST_CASE("kernel coefficients: frozen values") {
    const auto l1 = kernel_for({TransformKind::L, g(1)});
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(l1.coeff(n, 0) == g(1));
    CHECK(l1.coeff(2, 1) == g(-6));

    const auto bs = kernel_for({TransformKind::BinomialSigned});
    CHECK(bs.coeff(2, 1) == g(-2));

    const auto lti = kernel_for({TransformKind::LTildeInverse, g(-1)});
    CHECK(lti.coeff(1, 0) == g(1));
    CHECK(lti.coeff(1, 1) == g(-1));
}

TEST_CASE("apply: frozen values") {
    const Sequence x{g(1), g(0), g(0), g(0)};
    const Sequence ones{g(1), g(1), g(1), g(1)};

    CHECK(apply(kernel_for({TransformKind::Identity}), ones) == ones);
    CHECK(apply(kernel_for({TransformKind::BinomialSigned}), x) == ones);

    const Sequence unit1{g(0), g(1), g(0), g(0)};
    const Sequence image = apply(kernel_for({TransformKind::L, g(1)}), unit1);
    const Sequence expected{g(0), g(-2), g(-6), g(-12)};
    CHECK(image == expected);
}

TEST_CASE("parameter restrictions are rejected") {
    CHECK_THROWS_AS(kernel_for({TransformKind::L, g(-2)}), InvalidParameter);
    CHECK_THROWS_AS(kernel_for({TransformKind::LInverse, g(-1)}), InvalidParameter);
    CHECK_THROWS_AS(kernel_for({TransformKind::LTilde, g(-2)}), InvalidParameter);
    CHECK_THROWS_AS(kernel_for({TransformKind::LTildeInverse, g(-5)}), InvalidParameter);
    CHECK_THROWS_AS(kernel_for({TransformKind::Lab, g(-3), g(1)}), InvalidParameter);
    CHECK_THROWS_AS(kernel_for({TransformKind::Lab, g(1), g(0)}), InvalidParameter);
    CHECK_THROWS_AS(kernel_for({TransformKind::LabInverse, g(1), g(-4)}), InvalidParameter);

    CHECK_NOTHROW(kernel_for({TransformKind::L, g(0)}));
    CHECK_NOTHROW(kernel_for({TransformKind::L, GaussianRational(Rational(-2), Rational(1))}));
    CHECK_NOTHROW(kernel_for({TransformKind::LTilde, g(-1)}));
}

TEST_CASE("binomial transform is self-inverse") {
    CHECK(invert({TransformKind::BinomialSigned}).kind == TransformKind::BinomialSigned);
    Sampler rng(81);
    const Sequence x = rng.sequence(12);
    check_roundtrip({TransformKind::BinomialSigned}, x);
    check_roundtrip({TransformKind::BinomialUnsigned}, x);
    check_roundtrip({TransformKind::BinomialUnsignedInverse}, x);
}

TEST_CASE("inverse round-trips: named examples") {
    Sampler rng(82);
    check_roundtrip({TransformKind::L, g(3, 2)}, rng.sequence(12));
    check_roundtrip({TransformKind::LTilde, g(-1)}, rng.sequence(10));
}

TEST_CASE("inverse round-trips: random parameters, both directions") {
    Sampler rng(83);
    const std::size_t prefix = 16;
    for (int trial = 0; trial < 25; ++trial) {
        const GaussianRational a_l(draw_l_parameter(rng));
        const GaussianRational a_lt(draw_ltilde_parameter(rng));
        const GaussianRational b(draw_lab_b(rng));
        const Sequence x = rng.sequence(prefix);

        for (const auto& spec : std::vector<TransformSpec>{
                 {TransformKind::L, a_l},
                 {TransformKind::LInverse, a_l},
                 {TransformKind::LTilde, a_lt},
                 {TransformKind::LTildeInverse, a_lt},
                 {TransformKind::Lab, a_l, b},
                 {TransformKind::LabInverse, a_l, b},
             }) {
            check_roundtrip(spec, x);
            CHECK(invert(invert(spec)).kind == spec.kind);
        }
    }
}

TEST_CASE("inverse round-trips: degenerate limit parameters") {
    Sampler rng(84);
    const Sequence x = rng.sequence(14);
    check_roundtrip({TransformKind::L, g(0)}, x);
    check_roundtrip({TransformKind::LTilde, g(0)}, x);
    check_roundtrip({TransformKind::LTilde, g(-1)}, x);
    check_roundtrip({TransformKind::Lab, g(0), g(7, 5)}, x);
    // complex parameters are valid everywhere outside the excluded sets
    check_roundtrip({TransformKind::L, GaussianRational(Rational(-3), Rational(2))}, x);
}

TEST_CASE("kernel diagonals are nonzero for invertible specs") {
    for (const auto& spec : std::vector<TransformSpec>{
             {TransformKind::BinomialSigned},
             {TransformKind::L, g(0)},
             {TransformKind::L, g(5, 3)},
             {TransformKind::LInverse, g(5, 3)},
             {TransformKind::LTilde, g(-1)},
             {TransformKind::LTildeInverse, g(0)},
             {TransformKind::LTildeInverse, g(-1)},
             {TransformKind::Lab, g(1, 2), g(2, 7)},
             {TransformKind::LabInverse, g(0), g(2, 7)},
         }) {
        CHECK(diagonal_nonzero(kernel_for(spec), 12));
    }
}

TEST_CASE("scaled kernels invert with the reciprocal scaling") {
    Sampler rng(85);
    const std::size_t prefix = 10;
    for (int trial = 0; trial < 20; ++trial) {
        const GaussianRational a(draw_l_parameter(rng));
        const auto forward = kernel_for({TransformKind::L, a});
        const auto backward = kernel_for({TransformKind::LInverse, a});

        std::vector<GaussianRational> scale;
        for (std::size_t k = 0; k < prefix; ++k)
            scale.emplace_back(rng.nonzero_rational(), rng.rational());

        const TriangularKernel scaled{[&forward, &scale](unsigned n, unsigned k) {
                                          return forward.coeff(n, k) * scale[k];
                                      },
                                      "scaled"};
        const Sequence x = rng.sequence(prefix);
        const Sequence y = apply(scaled, x);
        for (unsigned n = 0; n < prefix; ++n)
            CHECK(x[n] == apply_row(backward, y, n) / scale[n]);
    }
}

TEST_CASE("composition matches sequential application") {
    Sampler rng(86);
    const auto k1 = kernel_for({TransformKind::L, g(1, 2)});
    const auto k2 = kernel_for({TransformKind::BinomialSigned});
    const Sequence x = rng.sequence(9);
    CHECK(apply(compose(k1, k2), x) == apply(k1, apply(k2, x)));

    const auto round = compose(kernel_for({TransformKind::LInverse, g(1, 2)}), k1);
    for (unsigned n = 0; n < 9; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(round.coeff(n, k) == (n == k ? g(1) : g(0)));
}

TEST_CASE("alternate form of the a = -1 Ltilde inverse kernel") {
    // Shifted representation: row 0 is x_0, row 1 is x_0 - x_1, and for
    // n > 1 the row has no x_0 share and weight
    // (1-2n) (1-n)_k (n)_k / (k! (2)_k) on x_{k+1}.
    const auto direct = kernel_for({TransformKind::LTildeInverse, g(-1)});
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            GaussianRational expected;
            if (n == 0) {
                expected = g(k == 0 ? 1 : 0);
            } else if (n == 1) {
                expected = k == 0 ? g(1) : g(-1);
            } else if (k == 0) {
                expected = g(0);
            } else {
                const long ln = static_cast<long>(n);
                expected = g(1 - 2 * ln) *
                           pochhammer(g(1 - ln), k - 1) * pochhammer(g(ln), k - 1) /
                           (GaussianRational(factorial(k - 1)) * pochhammer(g(2), k - 1));
            }
            CHECK(direct.coeff(n, k) == expected);
        }
    }
}

TEST_CASE("connection identity: frozen examples") {
    SECTION("delta sequence at n = 0") {
        const Sequence x{g(1), g(0), g(0)};
        const auto [lhs, rhs] = connection_sides(g(5, 3), g(1, 2), x, 0);
        CHECK(lhs == g(1));
        CHECK(rhs == g(1));
    }
    SECTION("a = 2, b = 1, all-ones") {
        const Sequence x{g(1), g(1), g(1), g(1)};
        const auto [lhs, rhs] = connection_sides(g(2), g(1), x, 1);
        CHECK(lhs == rhs);
    }
    SECTION("b = (1+a)/2 mirrors the same kernel") {
        Sampler rng(87);
        const Sequence x = rng.sequence(4);
        const GaussianRational a = g(3);
        const GaussianRational b = g(2); // (1+a)/2
        const auto [lhs, rhs] = connection_sides(a, b, x, 2);
        CHECK(lhs == rhs);
        const auto kernel = kernel_for({TransformKind::Lab, a, b});
        const Sequence x_hat = apply(kernel_for({TransformKind::BinomialSigned}), x);
        CHECK(lhs == apply_row(kernel, x_hat, 2));
        CHECK(rhs == apply_row(kernel, x, 2)); // (-1)^2 = 1
    }
}

TEST_CASE("connection identity on random draws") {
    Sampler rng(88);
    for (int trial = 0; trial < 60; ++trial) {
        const GaussianRational a(draw_l_parameter(rng));
        const GaussianRational b(rng.draw_valid(
            [&] { return rng.rational(); },
            [&](const Rational& r) {
                return !r.is_nonpositive_integer() &&
                       !(r - a.re).is_positive_integer();
            }));
        const Sequence x = rng.sequence(11);
        for (unsigned n = 0; n <= 10; ++n) {
            const auto [lhs, rhs] = connection_sides(a, b, x, n);
            CHECK(lhs == rhs);
        }
    }
    const Sequence x{g(1), g(2)};
    CHECK_THROWS_AS(connection_sides(g(3), g(5), x, 1), InvalidParameter);
}

TEST_CASE("signed and unsigned convention agree after alternating signs") {
    Sampler rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        const GaussianRational a(draw_l_parameter(rng));
        const GaussianRational b(rng.draw_valid(
            [&] { return rng.rational(); },
            [&](const Rational& r) {
                return !r.is_nonpositive_integer() && !(r - a.re).is_positive_integer();
            }));
        const Sequence x = rng.sequence(9);

        Sequence x_alt = x;
        for (std::size_t k = 1; k < x_alt.size(); k += 2)
            x_alt[k] = -x_alt[k];

        const Sequence y = apply(kernel_for({TransformKind::BinomialUnsigned}), x);
        const auto lab = kernel_for({TransformKind::Lab, a, b});
        const auto lab_alt = kernel_for({TransformKind::Lab, a, GaussianRational(1) + a - b});
        const GaussianRational one(1);

        for (unsigned n = 0; n < 9; ++n) {
            // Unsigned-convention statement...
            const GaussianRational lhs = apply_row(lab, y, n);
            GaussianRational alternating;
            for (unsigned k = 0; k <= n; ++k)
                alternating += minus_one_pow(k) * lab_alt.coeff(n, k) * x[k];
            const GaussianRational rhs = minus_one_pow(n) * pochhammer(one + a - b, n) /
                                         pochhammer(b, n) * alternating;
            CHECK(lhs == rhs);
            // ...equals the signed-convention statement for the alternating input.
            const auto [slhs, srhs] = connection_sides(a, b, x_alt, n);
            CHECK(lhs == slhs);
            CHECK(rhs == srhs);
        }
    }
}

TEST_CASE("odd-a connection identity: frozen examples") {
    SECTION("r = 0, all ones, n = 1") {
        const Sequence ones{g(1), g(1), g(1)};
        const auto [lhs, rhs] = odd_a_connection_sides(0, ones, 1);
        CHECK(lhs == g(1));
        CHECK(rhs == g(1));
    }
    SECTION("n = 0 reduces to x_0") {
        const Sequence x{g(7, 3), g(1)};
        const auto [lhs, rhs] = odd_a_connection_sides(0, x, 0);
        CHECK(lhs == g(7, 3));
        CHECK(rhs == g(7, 3));
    }
    SECTION("r = 2, random input, n = 3, matches the Lab route") {
        Sampler rng(90);
        const Sequence x = rng.sequence(4);
        const auto [lhs, rhs] = odd_a_connection_sides(2, x, 3);
        CHECK(lhs == rhs);
        // Same statement through Lab(a = 2r+1, b = r+1), rescaled by
        // (n+r+1)_r / r!.
        const auto [clhs, crhs] = connection_sides(g(5), g(3), x, 3);
        const GaussianRational scale = pochhammer(g(3 + 2 + 1), 2) / GaussianRational(factorial(2));
        CHECK(lhs == scale * clhs);
        CHECK(rhs == scale * crhs);
    }
}

TEST_CASE("odd-a connection identity on random draws") {
    Sampler rng(91);
    for (int trial = 0; trial < 50; ++trial) {
        const auto r = static_cast<unsigned>(rng.integer(0, 3));
        const Sequence x = rng.sequence(9);
        for (unsigned n = 0; n < 9; ++n) {
            const auto [lhs, rhs] = odd_a_connection_sides(r, x, n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rising-factorial weight matches the binomial weight at odd a") {
    for (unsigned r = 0; r <= 3; ++r) {
        const GaussianRational a = g(2 * static_cast<long>(r) + 1);
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                const GaussianRational lhs =
                    pochhammer(g(static_cast<long>(n)) + a, k) / pochhammer(g(static_cast<long>(r) + 1), k);
                const GaussianRational rhs =
                    GaussianRational(binomial(n + k + 2 * r, k + r)) *
                    GaussianRational(factorial(r)) /
                    pochhammer(g(static_cast<long>(n + r) + 1), r);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("a sign flip at (2,1) breaks the round-trip") {
    Sampler rng(92);
    Sequence x = rng.sequence(8);
    x[1] = g(1); // guarantees row 2 actually sees the flipped entry
    const TransformSpec spec{TransformKind::L, g(3, 2)};
    const auto forward = kernel_for(spec);
    const TriangularKernel mutated{[&forward](unsigned n, unsigned k) {
                                       const auto c = forward.coeff(n, k);
                                       return (n == 2 && k == 1) ? -c : c;
                                   },
                                   "mutated"};
    const Sequence back = apply(kernel_for(invert(spec)), apply(mutated, x));
    CHECK(back != x);
}
