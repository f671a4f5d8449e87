#pragma once

#include <optional>
#include <vector>

#include "hyperseq/errors.hpp"
#include "hyperseq/factorials.hpp"
#include "hyperseq/gaussian.hpp"

namespace hyperseq {

/// A pFq series given by its numerator parameters a_1..a_p, denominator
/// parameters b_1..b_q and argument z.
struct HypSeriesSpec {
    std::vector<GaussianRational> numerator_params;
    std::vector<GaussianRational> denominator_params;
    GaussianRational argument;
};

struct SeriesClass {
    bool terminating = false;
    std::optional<unsigned> truncation_index;
    bool well_poised = false;
    bool very_well_poised = false;
    bool saalschutzian = false;
    bool unit_argument = false;
};

/// Structural classification. Total: every spec classifies.
///
/// The series terminates iff some numerator parameter is a nonpositive
/// integer; the truncation index is the least absolute value among them.
/// Well-poised needs p = q+1 and all column sums b_i + a_{i+1} equal to
/// 1 + a_1 (order-sensitive by definition); very-well-poised additionally
/// needs a_2 = 1 + a_1/2. Saalschutzian means terminating, unit argument
/// and denominator-parameter sum exceeding numerator-parameter sum by 1.
inline SeriesClass classify(const HypSeriesSpec& spec) {
    SeriesClass cls;
    cls.unit_argument = spec.argument == GaussianRational(1);

    for (const auto& a : spec.numerator_params) {
        if (!a.is_nonpositive_integer())
            continue;
        auto n = static_cast<unsigned>((-a.re).to_long());
        if (!cls.truncation_index || n < *cls.truncation_index)
            cls.truncation_index = n;
    }
    cls.terminating = cls.truncation_index.has_value();

    const auto p = spec.numerator_params.size();
    const auto q = spec.denominator_params.size();
    if (p == q + 1) {
        const GaussianRational target = GaussianRational(1) + spec.numerator_params[0];
        bool poised = true;
        for (std::size_t i = 0; i < q; ++i)
            poised = poised &&
                     spec.denominator_params[i] + spec.numerator_params[i + 1] == target;
        cls.well_poised = poised;
        cls.very_well_poised =
            poised && p >= 2 &&
            spec.numerator_params[1] ==
                GaussianRational(1) + spec.numerator_params[0] / GaussianRational(2);
    }

    GaussianRational balance;
    for (const auto& b : spec.denominator_params)
        balance += b;
    for (const auto& a : spec.numerator_params)
        balance -= a;
    cls.saalschutzian = cls.terminating && cls.unit_argument && balance == GaussianRational(1);
    return cls;
}

/// Exact value of a terminating series: the sum of the first n+1 terms,
/// n the truncation index. The running term is updated by the ratio
/// term_{k+1} = term_k * prod(a_i + k) * z / ((k+1) prod(b_j + k)).
inline GaussianRational eval_terminating(const HypSeriesSpec& spec) {
    const SeriesClass cls = classify(spec);
    if (!cls.terminating)
        throw NonTerminating("no nonpositive-integer numerator parameter");
    const unsigned n = *cls.truncation_index;

    for (const auto& b : spec.denominator_params)
        if (!pochhammer_nonzero(b, n))
            throw DenominatorPole("denominator parameter " + b.to_string() +
                                  " vanishes within " + std::to_string(n) + " terms");

    GaussianRational term(1);
    GaussianRational sum(1);
    for (unsigned k = 0; k < n; ++k) {
        const GaussianRational shift(Rational(static_cast<long>(k)));
        GaussianRational ratio_num = spec.argument;
        for (const auto& a : spec.numerator_params)
            ratio_num *= a + shift;
        GaussianRational ratio_den(Rational(static_cast<long>(k) + 1));
        for (const auto& b : spec.denominator_params)
            ratio_den *= b + shift;
        term *= ratio_num / ratio_den;
        sum += term;
    }
    return sum;
}

/// Closed form for the terminating well-poised 3F2(a, b, -n; 1+a-b, 1+a+n; 1).
inline GaussianRational dixon_rhs(const GaussianRational& a, const GaussianRational& b,
                                  unsigned n) {
    const GaussianRational half_a = a / GaussianRational(2);
    const GaussianRational one(1);
    if (!pochhammer_nonzero(one + half_a, n))
        throw DenominatorPole("(1+a/2)_n vanishes");
    if (!pochhammer_nonzero(one + a - b, n))
        throw DenominatorPole("(1+a-b)_n vanishes");
    return pochhammer(one + a, n) * pochhammer(one + half_a - b, n) /
           (pochhammer(one + half_a, n) * pochhammer(one + a - b, n));
}

/// Closed form for the terminating 2F1(-n, a; b; 1).
inline GaussianRational chu_vandermonde_rhs(const GaussianRational& a,
                                            const GaussianRational& b, unsigned n) {
    if (!pochhammer_nonzero(b, n))
        throw DenominatorPole("(b)_n vanishes");
    return pochhammer(b - a, n) / pochhammer(b, n);
}

} // namespace hyperseq
