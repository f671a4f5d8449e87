#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperseq/errors.hpp"
#include "hyperseq/orthopoly.hpp"
#include "hyperseq/random.hpp"
#include "hyperseq/report.hpp"
#include "hyperseq/series.hpp"
#include "hyperseq/sums.hpp"
#include "hyperseq/testing/oracles.hpp"
#include "hyperseq/transforms.hpp"

namespace hyperseq {

/// A named, seeded verification campaign. `run` draws `trials` parameter
/// sets and checks its identity exactly for every n <= n_max on each.
struct Campaign {
    std::string id;
    long default_trials = 50;
    unsigned default_n_max = 6;
    std::function<VerificationReport(long trials, unsigned n_max, std::uint64_t seed)> run;
};

namespace detail {

inline Rational draw_not_negative_integer(Sampler& rng) {
    return rng.draw_valid([&] { return rng.rational(); },
                          [](const Rational& r) { return !r.is_negative_integer(); });
}

inline Rational draw_not_nonpositive_integer(Sampler& rng) {
    return rng.draw_valid([&] { return rng.rational(); },
                          [](const Rational& r) { return !r.is_nonpositive_integer(); });
}

inline Rational draw_ltilde_valid(Sampler& rng) {
    return rng.draw_valid(
        [&] { return rng.rational(); },
        [](const Rational& r) { return !(r.is_integer() && r <= Rational(-2)); });
}

inline bool not_integer_in(const GaussianRational& v, long lo, long hi) {
    if (!v.is_real() || !v.re.is_integer())
        return true;
    return v.re < Rational(lo) || v.re > Rational(hi);
}

/// Runs `trial` repeatedly, aggregating into one campaign report. The
/// aggregate carries the draw of the failing trial, or of the last trial
/// when everything passes.
template <class TrialFn>
VerificationReport run_trials(const std::string& id, long trials, unsigned n_max,
                              std::uint64_t seed, TrialFn&& trial) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport aggregate;
    aggregate.identity = id;
    aggregate.n_max = n_max;
    aggregate.trials = trials;
    aggregate.seed = seed;

    Sampler rng(seed);
    for (long t = 0; t < trials; ++t) {
        VerificationReport one;
        try {
            one = trial(rng, t);
        } catch (const Error& err) {
            aggregate.status = VerifyStatus::InvalidParam;
            aggregate.notes = err.what();
            break;
        }
        aggregate.parameter_draw = one.parameter_draw;
        if (!one.notes.empty())
            aggregate.notes = one.notes;
        if (!one.passed()) {
            aggregate.status = one.status;
            aggregate.counterexample = one.counterexample;
            break;
        }
    }
    aggregate.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return aggregate;
}

// ---- transform round-trips -------------------------------------------------

inline VerificationReport roundtrip_trial(const std::string& id, TransformKind kind,
                                          Sampler& rng, long trial, unsigned length) {
    TransformSpec spec{kind};
    switch (kind) {
    case TransformKind::L:
        spec.a = trial == 0 ? GaussianRational(0) : GaussianRational(draw_not_negative_integer(rng));
        break;
    case TransformKind::LTilde:
        if (trial == 0)
            spec.a = GaussianRational(0);
        else if (trial == 1)
            spec.a = GaussianRational(-1);
        else
            spec.a = GaussianRational(draw_ltilde_valid(rng));
        break;
    case TransformKind::Lab:
        spec.a = trial == 0 ? GaussianRational(0) : GaussianRational(draw_not_negative_integer(rng));
        spec.b = GaussianRational(draw_not_nonpositive_integer(rng));
        break;
    default:
        break;
    }

    const Sequence x = rng.sequence(length);
    const Sequence y = apply(kernel_for(spec), x);
    const Sequence back = apply(kernel_for(invert(spec)), y);

    VerificationReport report;
    report.identity = id;
    report.parameter_draw = {{"a", spec.a.to_string()}};
    if (kind == TransformKind::Lab)
        report.parameter_draw.emplace_back("b", spec.b.to_string());
    report.n_max = length;
    report.trials = 1;
    for (unsigned n = 0; n < length; ++n) {
        if (back[n] != x[n]) {
            report.status = VerifyStatus::Fail;
            report.counterexample = Counterexample{n, back[n], x[n]};
            break;
        }
    }
    return report;
}

inline VerificationReport binomial_roundtrip_trial(Sampler& rng, unsigned length) {
    VerificationReport report;
    report.identity = "roundtrip-binomial";
    report.n_max = length;
    report.trials = 1;
    const Sequence x = rng.sequence(length);
    for (TransformKind kind : {TransformKind::BinomialSigned, TransformKind::BinomialUnsigned}) {
        const TransformSpec spec{kind};
        const Sequence back = apply(kernel_for(invert(spec)), apply(kernel_for(spec), x));
        for (unsigned n = 0; n < length; ++n) {
            if (back[n] != x[n]) {
                report.status = VerifyStatus::Fail;
                report.counterexample = Counterexample{n, back[n], x[n]};
                return report;
            }
        }
    }
    return report;
}

// ---- closed-form summations ------------------------------------------------

inline VerificationReport dixon_trial(Sampler& rng, unsigned n_max) {
    const GaussianRational one(1);
    const GaussianRational a(draw_not_negative_integer(rng));
    const GaussianRational b(rng.draw_valid(
        [&] { return rng.rational(); },
        [&](const Rational& r) {
            return pochhammer_nonzero(one + a - GaussianRational(r), n_max);
        }));
    return check_pointwise(
        "dixon", {{"a", a.to_string()}, {"b", b.to_string()}}, n_max,
        [&](unsigned n) {
            const HypSeriesSpec spec{
                {a, b, GaussianRational(Rational(-static_cast<long>(n)))},
                {one + a - b, one + a + GaussianRational(Rational(static_cast<long>(n)))},
                one};
            return eval_terminating(spec);
        },
        [&](unsigned n) { return dixon_rhs(a, b, n); });
}

inline VerificationReport chu_vandermonde_trial(Sampler& rng, unsigned n_max) {
    const GaussianRational a(rng.rational());
    const GaussianRational b(rng.draw_valid(
        [&] { return rng.rational(); },
        [&](const Rational& r) { return pochhammer_nonzero(GaussianRational(r), n_max); }));
    return check_pointwise(
        "chu-vandermonde", {{"a", a.to_string()}, {"b", b.to_string()}}, n_max,
        [&](unsigned n) {
            const HypSeriesSpec spec{{GaussianRational(Rational(-static_cast<long>(n))), a},
                                     {b},
                                     GaussianRational(1)};
            return eval_terminating(spec);
        },
        [&](unsigned n) { return chu_vandermonde_rhs(a, b, n); });
}

inline VerificationReport binomial_chu_trial(Sampler& rng, unsigned n_max) {
    const GaussianRational a(rng.rational());
    const GaussianRational b(rng.draw_valid(
        [&] { return rng.rational(); },
        [&](const Rational& r) { return pochhammer_nonzero(GaussianRational(r), n_max + 1); }));
    Sequence x;
    for (unsigned k = 0; k <= n_max; ++k)
        x.entries.push_back(pochhammer(a, k) / pochhammer(b, k));
    const Sequence y = apply(kernel_for({TransformKind::BinomialSigned}), x);
    return check_pointwise(
        "binomial-chu", {{"a", a.to_string()}, {"b", b.to_string()}}, n_max,
        [&](unsigned n) { return y[n]; },
        [&](unsigned n) { return pochhammer(b - a, n) / pochhammer(b, n); });
}

// ---- binomial-transform connection ------------------------------------------

inline std::pair<GaussianRational, GaussianRational> draw_connection_params(Sampler& rng) {
    const GaussianRational a(draw_not_negative_integer(rng));
    const GaussianRational b(rng.draw_valid(
        [&] { return rng.rational(); },
        [&](const Rational& r) {
            return !r.is_nonpositive_integer() && !(r - a.re).is_positive_integer();
        }));
    return {a, b};
}

inline VerificationReport connection_trial(Sampler& rng, unsigned n_max) {
    const auto [a, b] = draw_connection_params(rng);
    const Sequence x = rng.sequence(n_max + 1);
    return check_pointwise(
        "T440", {{"a", a.to_string()}, {"b", b.to_string()}}, n_max,
        [&, a = a, b = b](unsigned n) { return connection_sides(a, b, x, n).first; },
        [&, a = a, b = b](unsigned n) { return connection_sides(a, b, x, n).second; });
}

inline VerificationReport connection_unsigned_trial(Sampler& rng, unsigned n_max) {
    const auto [a, b] = draw_connection_params(rng);
    const GaussianRational one(1);
    const Sequence x = rng.sequence(n_max + 1);
    Sequence x_alt = x;
    for (std::size_t k = 1; k < x_alt.size(); k += 2)
        x_alt[k] = -x_alt[k];
    const Sequence y = apply(kernel_for({TransformKind::BinomialUnsigned}), x);
    const auto lab = kernel_for({TransformKind::Lab, a, b});
    const auto lab_alt = kernel_for({TransformKind::Lab, a, one + a - b});

    VerificationReport report;
    report.identity = "T448";
    report.parameter_draw = {{"a", a.to_string()}, {"b", b.to_string()}};
    report.n_max = n_max;
    report.trials = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        const GaussianRational lhs = apply_row(lab, y, n);
        GaussianRational alternating;
        for (unsigned k = 0; k <= n; ++k)
            alternating += minus_one_pow(k) * lab_alt.coeff(n, k) * x[k];
        const GaussianRational rhs = minus_one_pow(n) * pochhammer(one + a - b, n) /
                                     pochhammer(b, n) * alternating;
        const auto [signed_lhs, signed_rhs] = connection_sides(a, b, x_alt, n);
        if (lhs != rhs || lhs != signed_lhs || rhs != signed_rhs) {
            report.status = VerifyStatus::Fail;
            report.counterexample = Counterexample{n, lhs, rhs};
            report.notes = "unsigned-convention statement disagrees with the signed one";
            break;
        }
    }
    return report;
}

inline VerificationReport self_dual_weight_trial(const std::string& id, Sampler& rng,
                                                 unsigned n_max, bool odd_integer_a) {
    GaussianRational a;
    if (odd_integer_a)
        a = GaussianRational(Rational(2 * rng.integer(0, 5) + 1));
    else
        a = GaussianRational(draw_not_negative_integer(rng));
    const GaussianRational b = (GaussianRational(1) + a) / GaussianRational(2);
    const Sequence x = rng.sequence(n_max + 1);
    const Sequence x_hat = apply(kernel_for({TransformKind::BinomialSigned}), x);
    const auto lab = kernel_for({TransformKind::Lab, a, b});
    return check_pointwise(
        id, {{"a", a.to_string()}}, n_max,
        [&](unsigned n) { return apply_row(lab, x_hat, n); },
        [&](unsigned n) { return minus_one_pow(n) * apply_row(lab, x, n); });
}

inline VerificationReport integer_weight_trial(Sampler& rng, unsigned n_max) {
    const auto r = static_cast<unsigned>(rng.integer(0, 2));
    const Sequence x = rng.sequence(n_max + 1);
    return check_pointwise(
        "T470", {{"r", Rational(static_cast<long>(r)).to_string()}}, n_max,
        [&](unsigned n) { return odd_a_connection_sides(r, x, n).first; },
        [&](unsigned n) { return odd_a_connection_sides(r, x, n).second; });
}

inline VerificationReport sun_chen_trial(Sampler& rng, unsigned n_max) {
    const Sequence x = rng.sequence(n_max + 1);
    const Sequence y = apply(kernel_for({TransformKind::BinomialUnsigned}), x);
    return check_pointwise(
        "sun-chen-r0", {}, n_max,
        [&](unsigned n) {
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += minus_one_pow(k) *
                       GaussianRational(binomial(n, k) * binomial(n + k, k)) * y[k];
            return sum;
        },
        [&](unsigned n) {
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += GaussianRational(binomial(n, k) * binomial(n + k, k)) * x[k];
            return minus_one_pow(n) * sum;
        });
}

inline VerificationReport scaling_trial(Sampler& rng, long trial, unsigned n_max) {
    TransformSpec spec;
    switch (trial % 3) {
    case 0: spec = {TransformKind::L, GaussianRational(draw_not_negative_integer(rng))}; break;
    case 1: spec = {TransformKind::LTilde, GaussianRational(draw_ltilde_valid(rng))}; break;
    default:
        spec = {TransformKind::Lab, GaussianRational(draw_not_negative_integer(rng)),
                GaussianRational(draw_not_nonpositive_integer(rng))};
        break;
    }
    const auto forward = kernel_for(spec);
    const auto backward = kernel_for(invert(spec));

    std::vector<GaussianRational> scale;
    for (unsigned k = 0; k <= n_max; ++k)
        scale.emplace_back(rng.nonzero_rational(), rng.rational());
    const TriangularKernel scaled{
        [&forward, &scale](unsigned n, unsigned k) { return forward.coeff(n, k) * scale[k]; },
        "scaled " + forward.description};

    const Sequence x = rng.sequence(n_max + 1);
    const Sequence y = apply(scaled, x);
    return check_pointwise(
        "scaling", {{"a", spec.a.to_string()}, {"b", spec.b.to_string()}}, n_max,
        [&](unsigned n) { return x[n]; },
        [&](unsigned n) { return apply_row(backward, y, n) / scale[n]; });
}

inline VerificationReport altform_report(unsigned n_max) {
    const auto direct = kernel_for({TransformKind::LTildeInverse, GaussianRational(-1)});
    VerificationReport report;
    report.identity = "ltilde-inv-altform";
    report.n_max = n_max;
    report.trials = 1;
    const GaussianRational one(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            GaussianRational expected;
            if (n == 0) {
                expected = GaussianRational(k == 0 ? 1 : 0);
            } else if (n == 1) {
                expected = GaussianRational(k == 0 ? 1 : -1);
            } else if (k == 0) {
                expected = GaussianRational(0);
            } else {
                const long ln = static_cast<long>(n);
                expected = GaussianRational(Rational(1 - 2 * ln)) *
                           pochhammer(GaussianRational(Rational(1 - ln)), k - 1) *
                           pochhammer(GaussianRational(Rational(ln)), k - 1) /
                           (GaussianRational(factorial(k - 1)) *
                            pochhammer(GaussianRational(2), k - 1));
            }
            if (direct.coeff(n, k) != expected) {
                report.status = VerifyStatus::Fail;
                report.counterexample = Counterexample{n, direct.coeff(n, k), expected};
                report.notes = "kernel row " + std::to_string(n) + ", column " +
                               std::to_string(k);
                return report;
            }
        }
    }
    return report;
}

inline VerificationReport oracle_trial(Sampler& rng, unsigned max_truncation) {
    const auto p = static_cast<std::size_t>(rng.integer(1, 5));
    const auto q = static_cast<std::size_t>(rng.integer(0, 5));
    const auto trunc = static_cast<unsigned>(rng.integer(0, static_cast<long>(max_truncation)));

    HypSeriesSpec spec;
    for (std::size_t i = 0; i < p; ++i)
        spec.numerator_params.emplace_back(rng.rational());
    spec.numerator_params[static_cast<std::size_t>(rng.integer(0, static_cast<long>(p) - 1))] =
        GaussianRational(Rational(-static_cast<long>(trunc)));
    for (std::size_t i = 0; i < q; ++i)
        spec.denominator_params.push_back(GaussianRational(rng.draw_valid(
            [&] { return rng.rational(); },
            [&](const Rational& r) { return pochhammer_nonzero(GaussianRational(r), trunc); })));
    spec.argument = rng.integer(0, 1) == 0 ? GaussianRational(1) : rng.gaussian();

    VerificationReport report;
    report.identity = "oracle-hyper";
    report.n_max = trunc;
    report.trials = 1;
    const GaussianRational fast = eval_terminating(spec);
    const GaussianRational slow = testing::naive_eval_terminating(spec);
    if (fast != slow) {
        report.status = VerifyStatus::Fail;
        report.counterexample = Counterexample{trunc, fast, slow};
    }
    return report;
}

// ---- polynomial-family draws -------------------------------------------------

inline FamilySpec draw_identity_params(IdentityId id, Sampler& rng, unsigned n_max,
                                       GaussianRational& x_out) {
    const GaussianRational one(1);
    x_out = GaussianRational(rng.rational());
    const unsigned k_range = n_max;

    switch (id) {
    case IdentityId::I510:
    case IdentityId::I530: {
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 4>{rng.rational(), rng.rational(), rng.rational(),
                                               rng.rational()};
            },
            [&](const std::array<Rational, 4>& p) {
                const Rational s = p[0] + p[1] + p[2] + p[3];
                if (s.is_integer() && s <= Rational(1))
                    return false;
                const GaussianRational a(p[0]);
                return pochhammer_nonzero(a + GaussianRational(p[1]), k_range) &&
                       pochhammer_nonzero(a + GaussianRational(p[2]), k_range) &&
                       pochhammer_nonzero(a + GaussianRational(p[3]), k_range);
            });
        const Family family = id == IdentityId::I510 ? Family::Wilson : Family::ContinuousHahn;
        return {family,
                {{"a", GaussianRational(params[0])},
                 {"b", GaussianRational(params[1])},
                 {"c", GaussianRational(params[2])},
                 {"d", GaussianRational(params[3])}}};
    }

    case IdentityId::I515:
    case IdentityId::I535: {
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 3>{rng.rational(), rng.rational(), rng.rational()};
            },
            [&](const std::array<Rational, 3>& p) {
                const GaussianRational a(p[0]);
                const GaussianRational d =
                    one - GaussianRational(p[0]) - GaussianRational(p[1]) -
                    GaussianRational(p[2]);
                return pochhammer_nonzero(a + GaussianRational(p[1]), k_range) &&
                       pochhammer_nonzero(a + GaussianRational(p[2]), k_range) &&
                       pochhammer_nonzero(a + d, k_range);
            });
        const Family family = id == IdentityId::I515 ? Family::Wilson : Family::ContinuousHahn;
        const GaussianRational d = one - GaussianRational(params[0]) -
                                   GaussianRational(params[1]) - GaussianRational(params[2]);
        return {family,
                {{"a", GaussianRational(params[0])},
                 {"b", GaussianRational(params[1])},
                 {"c", GaussianRational(params[2])},
                 {"d", d}}};
    }

    case IdentityId::I520: {
        const long cap = rng.integer(static_cast<long>(n_max), static_cast<long>(n_max) + 4);
        const GaussianRational minus_cap(Rational(-cap));
        const long pick = rng.integer(0, 2);
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 3>{rng.rational(), rng.rational(), rng.rational()};
            },
            [&](const std::array<Rational, 3>& p) {
                GaussianRational alpha, beta, gamma, delta;
                if (pick == 0) {
                    alpha = GaussianRational(Rational(-cap - 1));
                    beta = GaussianRational(p[0]);
                    gamma = GaussianRational(p[1]);
                    delta = GaussianRational(p[2]);
                } else if (pick == 1) {
                    alpha = GaussianRational(p[0]);
                    beta = GaussianRational(p[1]);
                    gamma = GaussianRational(p[2]);
                    delta = minus_cap - one - beta;
                } else {
                    alpha = GaussianRational(p[0]);
                    beta = GaussianRational(p[1]);
                    gamma = GaussianRational(Rational(-cap - 1));
                    delta = GaussianRational(p[2]);
                }
                const GaussianRational ab = alpha + beta;
                if (ab.is_real() && ab.re.is_integer() && ab.re <= Rational(-1))
                    return false;
                // exactly one of the three cap conditions may hold
                int hits = 0;
                hits += alpha + one == minus_cap ? 1 : 0;
                hits += beta + delta + one == minus_cap ? 1 : 0;
                hits += gamma + one == minus_cap ? 1 : 0;
                if (hits != 1)
                    return false;
                return pochhammer_nonzero(alpha + one, k_range) &&
                       pochhammer_nonzero(beta + delta + one, k_range) &&
                       pochhammer_nonzero(gamma + one, k_range);
            });
        GaussianRational alpha, beta, gamma, delta;
        if (pick == 0) {
            alpha = GaussianRational(Rational(-cap - 1));
            beta = GaussianRational(params[0]);
            gamma = GaussianRational(params[1]);
            delta = GaussianRational(params[2]);
        } else if (pick == 1) {
            alpha = GaussianRational(params[0]);
            beta = GaussianRational(params[1]);
            gamma = GaussianRational(params[2]);
            delta = minus_cap - one - beta;
        } else {
            alpha = GaussianRational(params[0]);
            beta = GaussianRational(params[1]);
            gamma = GaussianRational(Rational(-cap - 1));
            delta = GaussianRational(params[2]);
        }
        return {Family::Racah,
                {{"alpha", alpha},
                 {"beta", beta},
                 {"gamma", gamma},
                 {"delta", delta},
                 {"N", GaussianRational(Rational(cap))}}};
    }

    case IdentityId::I525: {
        const long cap = rng.integer(static_cast<long>(n_max), static_cast<long>(n_max) + 4);
        const GaussianRational minus_cap(Rational(-cap));
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 2>{rng.non_integer_rational(), rng.rational()};
            },
            [&](const std::array<Rational, 2>& p) {
                const GaussianRational alpha(p[0]);
                const GaussianRational beta = -one - alpha;
                const GaussianRational delta(p[1]);
                if (beta + delta + one == minus_cap)
                    return false;
                return pochhammer_nonzero(alpha + one, k_range) &&
                       pochhammer_nonzero(beta + delta + one, k_range);
            });
        const GaussianRational alpha(params[0]);
        return {Family::Racah,
                {{"alpha", alpha},
                 {"beta", -one - alpha},
                 {"gamma", GaussianRational(Rational(-cap - 1))},
                 {"delta", GaussianRational(params[1])},
                 {"N", GaussianRational(Rational(cap))}}};
    }

    case IdentityId::I537:
    case IdentityId::I538: {
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 4>{rng.rational(), rng.rational(), rng.rational(),
                                               rng.rational()};
            },
            [&](const std::array<Rational, 4>& p) {
                const GaussianRational a(p[0]), b(p[1]), c(p[2]), d(p[3]);
                return pochhammer_nonzero(a + c, k_range) &&
                       pochhammer_nonzero(a + d, k_range) &&
                       pochhammer_nonzero(b + c, k_range) &&
                       pochhammer_nonzero(b + d, k_range);
            });
        return {Family::ContinuousHahn,
                {{"a", GaussianRational(params[0])},
                 {"b", GaussianRational(params[1])},
                 {"c", GaussianRational(params[2])},
                 {"d", GaussianRational(params[3])}}};
    }

    case IdentityId::I540:
    case IdentityId::I547: {
        const long cap = rng.integer(static_cast<long>(n_max), static_cast<long>(n_max) + 4);
        const auto params = rng.draw_valid(
            [&] { return std::array<Rational, 2>{rng.rational(), rng.rational()}; },
            [&](const std::array<Rational, 2>& p) {
                const GaussianRational alpha(p[0]), beta(p[1]);
                if (id == IdentityId::I540) {
                    const Rational ab = p[0] + p[1];
                    if (ab.is_integer() && ab <= Rational(-1))
                        return false;
                }
                return pochhammer_nonzero(alpha + one, k_range) &&
                       pochhammer_nonzero(beta + one, k_range);
            });
        return {Family::Hahn,
                {{"alpha", GaussianRational(params[0])},
                 {"beta", GaussianRational(params[1])},
                 {"N", GaussianRational(Rational(cap))}}};
    }

    case IdentityId::I545: {
        const long cap = rng.integer(static_cast<long>(n_max), static_cast<long>(n_max) + 4);
        const Rational alpha = rng.draw_valid(
            [&] { return rng.non_integer_rational(); },
            [&](const Rational& r) {
                return pochhammer_nonzero(GaussianRational(r) + one, k_range);
            });
        return {Family::Hahn,
                {{"alpha", GaussianRational(alpha)},
                 {"beta", -GaussianRational(alpha) - one},
                 {"N", GaussianRational(Rational(cap))}}};
    }

    case IdentityId::I550:
    case IdentityId::JacobiReflection: {
        const auto params = rng.draw_valid(
            [&] { return std::array<Rational, 2>{rng.rational(), rng.rational()}; },
            [&](const std::array<Rational, 2>& p) {
                const GaussianRational alpha(p[0]), beta(p[1]);
                if (id == IdentityId::I550) {
                    const Rational ab = p[0] + p[1];
                    if (ab.is_integer() && ab <= Rational(-1))
                        return false;
                }
                return pochhammer_nonzero(alpha + one, k_range) &&
                       pochhammer_nonzero(beta + one, k_range);
            });
        return {Family::Jacobi,
                {{"alpha", GaussianRational(params[0])},
                 {"beta", GaussianRational(params[1])}}};
    }

    case IdentityId::I555: {
        const Rational alpha = rng.draw_valid(
            [&] { return rng.non_integer_rational(); },
            [&](const Rational& r) {
                return pochhammer_nonzero(GaussianRational(r) + one, k_range);
            });
        return {Family::Jacobi,
                {{"alpha", GaussianRational(alpha)}, {"beta", -GaussianRational(alpha) - one}}};
    }

    case IdentityId::I5610: {
        const Rational lambda = rng.draw_valid(
            [&] { return rng.rational(); },
            [](const Rational& r) {
                const Rational twice = r + r;
                return !(twice.is_integer() && twice.sign() <= 0);
            });
        return {Family::Gegenbauer, {{"lambda", GaussianRational(lambda)}}};
    }

    case IdentityId::I5710:
        return {Family::ChebyshevT, {}};
    case IdentityId::I5810:
        return {Family::ChebyshevU, {}};
    case IdentityId::I5910:
        return {Family::Legendre, {}};
    }
    throw InvalidParameter("unknown identity id");
}

inline VerificationReport sum_trial(SumId tag, Sampler& rng, unsigned n_max) {
    const auto draw_a = [&] {
        return rng.draw_valid([&] { return rng.rational(); },
                              [](const Rational& r) { return !r.is_nonpositive_integer(); });
    };
    SumIdentity id;
    id.tag = tag;
    switch (tag) {
    case SumId::S610: {
        const GaussianRational one(1);
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 5>{draw_a(), rng.rational(), rng.rational(),
                                               rng.rational(), rng.rational()};
            },
            [&](const std::array<Rational, 5>& p) {
                const GaussianRational a(p[0]), b(p[1]), c(p[2]), d(p[3]), e(p[4]);
                return pochhammer_nonzero(one + a - b, n_max) &&
                       pochhammer_nonzero(one + a - c, n_max) &&
                       pochhammer_nonzero(one + a - d, n_max) &&
                       pochhammer_nonzero(one + a - e, n_max) &&
                       not_integer_in(d + e - a, 1, static_cast<long>(n_max));
            });
        id.params = {{"a", GaussianRational(params[0])},
                     {"b", GaussianRational(params[1])},
                     {"c", GaussianRational(params[2])},
                     {"d", GaussianRational(params[3])},
                     {"e", GaussianRational(params[4])}};
        break;
    }
    case SumId::S620: {
        const GaussianRational one(1), two(2);
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 4>{draw_a(), rng.rational(), rng.rational(),
                                               rng.rational()};
            },
            [&](const std::array<Rational, 4>& p) {
                const GaussianRational a(p[0]), b(p[1]), c(p[2]), d(p[3]);
                return not_integer_in(two * b - a, 0, static_cast<long>(n_max) - 1) &&
                       pochhammer_nonzero(d, n_max) &&
                       pochhammer_nonzero(one + two * b + c - d, n_max);
            });
        id.params = {{"a", GaussianRational(params[0])},
                     {"b", GaussianRational(params[1])},
                     {"c", GaussianRational(params[2])},
                     {"d", GaussianRational(params[3])}};
        break;
    }
    case SumId::S630:
    case SumId::S640: {
        const GaussianRational one(1);
        const auto params = rng.draw_valid(
            [&] {
                return std::array<Rational, 4>{draw_a(), rng.rational(), rng.rational(),
                                               rng.rational()};
            },
            [&](const std::array<Rational, 4>& p) {
                const GaussianRational a(p[0]), b(p[1]), c(p[2]), d(p[3]);
                return pochhammer_nonzero(one + a - b, n_max) &&
                       pochhammer_nonzero(one + a - c, n_max) &&
                       pochhammer_nonzero(one + a - d, n_max) &&
                       not_integer_in(c + d - a, 1, static_cast<long>(n_max));
            });
        id.params = {{"a", GaussianRational(params[0])},
                     {"b", GaussianRational(params[1])},
                     {"c", GaussianRational(params[2])},
                     {"d", GaussianRational(params[3])}};
        break;
    }
    }
    // The re-derivation gate runs first; only then is the summation itself
    // compared against its closed right-hand side.
    VerificationReport derivation = rederive_sum(id, n_max);
    if (!derivation.passed())
        return derivation;
    return verify_sum(id, n_max);
}

} // namespace detail

inline const std::vector<Campaign>& campaigns() {
    using detail::run_trials;
    static const std::vector<Campaign> table = [] {
        std::vector<Campaign> list;

        for (const auto& [id, kind] :
             std::vector<std::pair<std::string, TransformKind>>{
                 {"roundtrip-L", TransformKind::L},
                 {"roundtrip-Ltilde", TransformKind::LTilde},
                 {"roundtrip-Lab", TransformKind::Lab}}) {
            list.push_back({id, 200, 16,
                            [id = id, kind = kind](long trials, unsigned n_max,
                                                   std::uint64_t seed) {
                                return run_trials(id, trials, n_max, seed,
                                                  [&](Sampler& rng, long trial) {
                                                      return detail::roundtrip_trial(
                                                          id, kind, rng, trial, n_max);
                                                  });
                            }});
        }
        list.push_back({"roundtrip-binomial", 100, 16,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("roundtrip-binomial", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::binomial_roundtrip_trial(
                                                      rng, n_max);
                                              });
                        }});

        list.push_back({"dixon", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("dixon", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::dixon_trial(rng, n_max);
                                              });
                        }});
        list.push_back({"chu-vandermonde", 200, 12,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("chu-vandermonde", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::chu_vandermonde_trial(rng,
                                                                                       n_max);
                                              });
                        }});
        list.push_back({"binomial-chu", 100, 12,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("binomial-chu", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::binomial_chu_trial(rng, n_max);
                                              });
                        }});

        list.push_back({"T440", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("T440", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::connection_trial(rng, n_max);
                                              });
                        }});
        list.push_back({"T448", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("T448", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::connection_unsigned_trial(
                                                      rng, n_max);
                                              });
                        }});
        list.push_back({"T450", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("T450", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::self_dual_weight_trial(
                                                      "T450", rng, n_max, false);
                                              });
                        }});
        list.push_back({"T460", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("T460", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::self_dual_weight_trial(
                                                      "T460", rng, n_max, true);
                                              });
                        }});
        list.push_back({"T470", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("T470", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::integer_weight_trial(rng,
                                                                                      n_max);
                                              });
                        }});
        list.push_back({"sun-chen-r0", 200, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("sun-chen-r0", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::sun_chen_trial(rng, n_max);
                                              });
                        }});

        list.push_back({"scaling", 100, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("scaling", trials, n_max, seed,
                                              [&](Sampler& rng, long trial) {
                                                  return detail::scaling_trial(rng, trial,
                                                                               n_max);
                                              });
                        }});
        list.push_back({"ltilde-inv-altform", 1, 12,
                        [](long, unsigned n_max, std::uint64_t seed) {
                            auto report = detail::altform_report(n_max);
                            report.seed = seed;
                            return report;
                        }});
        list.push_back({"oracle-hyper", 500, 10,
                        [](long trials, unsigned n_max, std::uint64_t seed) {
                            return run_trials("oracle-hyper", trials, n_max, seed,
                                              [&](Sampler& rng, long) {
                                                  return detail::oracle_trial(rng, n_max);
                                              });
                        }});
        // Deliberately broken fixture: a sign flip at (2,1) of the forward
        // kernel. Exists so failure reporting and the nonzero exit path can
        // be exercised end to end; it must always FAIL.
        list.push_back({"fixture-broken-roundtrip", 1, 16,
                        [](long, unsigned n_max, std::uint64_t seed) {
                            VerificationReport report;
                            report.identity = "fixture-broken-roundtrip";
                            report.n_max = n_max;
                            report.trials = 1;
                            report.seed = seed;
                            report.notes = "fixture: roundtrip-L with a flipped (2,1) entry";
                            const TransformSpec spec{TransformKind::L,
                                                     GaussianRational(Rational(3, 2))};
                            const auto forward = kernel_for(spec);
                            const TriangularKernel mutated{
                                [forward](unsigned n, unsigned k) {
                                    const GaussianRational c = forward.coeff(n, k);
                                    return (n == 2 && k == 1) ? -c : c;
                                },
                                forward.description + " [flipped (2,1)]"};
                            Sampler rng(seed);
                            Sequence x = rng.sequence(std::max(n_max, 3u));
                            x[1] = GaussianRational(1); // row 2 must see the flip
                            const Sequence back =
                                apply(kernel_for(invert(spec)), apply(mutated, x));
                            for (unsigned n = 0; n < x.size(); ++n) {
                                if (back[n] != x[n]) {
                                    report.status = VerifyStatus::Fail;
                                    report.counterexample = Counterexample{n, back[n], x[n]};
                                    break;
                                }
                            }
                            return report;
                        }});

        for (IdentityId id : all_identity_ids()) {
            const std::string tag = identity_tag(id);
            list.push_back({tag, 50, 6,
                            [id, tag](long trials, unsigned n_max, std::uint64_t seed) {
                                return run_trials(
                                    tag, trials, n_max, seed, [&](Sampler& rng, long) {
                                        GaussianRational x;
                                        const FamilySpec spec =
                                            detail::draw_identity_params(id, rng, n_max, x);
                                        const auto cap = family_degree_cap(spec);
                                        const unsigned effective =
                                            cap ? std::min(n_max, *cap) : n_max;
                                        return verify_identity(id, spec, x, effective);
                                    });
                            }});
        }

        for (SumId tag : {SumId::S610, SumId::S620, SumId::S630, SumId::S640}) {
            const std::string name = sum_tag(tag);
            list.push_back({name, 50, 5,
                            [tag, name](long trials, unsigned n_max, std::uint64_t seed) {
                                return run_trials(name, trials, n_max, seed,
                                                  [&](Sampler& rng, long) {
                                                      return detail::sum_trial(tag, rng, n_max);
                                                  });
                            }});
        }

        return list;
    }();
    return table;
}

inline const Campaign* find_campaign(const std::string& id) {
    for (const auto& campaign : campaigns())
        if (campaign.id == id)
            return &campaign;
    return nullptr;
}

inline VerificationReport run_campaign(const std::string& id, long trials, unsigned n_max,
                                       std::uint64_t seed) {
    const Campaign* campaign = find_campaign(id);
    if (campaign == nullptr)
        throw InvalidParameter("unknown identity tag: " + id);
    return campaign->run(trials, n_max, seed);
}

} // namespace hyperseq
