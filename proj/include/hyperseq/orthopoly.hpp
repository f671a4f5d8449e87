#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperseq/errors.hpp"
#include "hyperseq/factorials.hpp"
#include "hyperseq/gaussian.hpp"
#include "hyperseq/report.hpp"
#include "hyperseq/series.hpp"

namespace hyperseq {

enum class Family {
    Wilson,
    Racah,
    ContinuousHahn,
    Hahn,
    Jacobi,
    Gegenbauer,
    ChebyshevT,
    ChebyshevU,
    Legendre,
};

inline const char* family_name(Family f) {
    switch (f) {
    case Family::Wilson: return "wilson";
    case Family::Racah: return "racah";
    case Family::ContinuousHahn: return "continuous-hahn";
    case Family::Hahn: return "hahn";
    case Family::Jacobi: return "jacobi";
    case Family::Gegenbauer: return "gegenbauer";
    case Family::ChebyshevT: return "chebyshev-t";
    case Family::ChebyshevU: return "chebyshev-u";
    case Family::Legendre: return "legendre";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Wilson, Family::Racah, Family::ContinuousHahn, Family::Hahn,
                     Family::Jacobi, Family::Gegenbauer, Family::ChebyshevT,
                     Family::ChebyshevU, Family::Legendre})
        if (name == family_name(f))
            return f;
    return std::nullopt;
}

/// Family plus its named parameters: a,b,c,d for Wilson and continuous
/// Hahn; alpha,beta,gamma,delta,N for Racah; alpha,beta,N for Hahn;
/// alpha,beta for Jacobi; lambda for Gegenbauer; none for the Chebyshev
/// and Legendre cases.
struct FamilySpec {
    Family family = Family::Legendre;
    std::map<std::string, GaussianRational> params;

    const GaussianRational& param(const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end())
            throw InvalidParameter(std::string(family_name(family)) +
                                   " needs parameter \"" + name + "\"");
        return it->second;
    }
};

namespace detail {

inline unsigned nonnegative_integer_value(const GaussianRational& v, const char* what) {
    if (!v.is_real() || !v.re.is_integer() || v.re.sign() < 0)
        throw InvalidParameter(std::string(what) + " must be a nonnegative integer, got " +
                               v.to_string());
    return static_cast<unsigned>(v.re.to_long());
}

} // namespace detail

/// Degree cap N for the finite families.
inline std::optional<unsigned> family_degree_cap(const FamilySpec& spec) {
    if (spec.family == Family::Racah || spec.family == Family::Hahn)
        return detail::nonnegative_integer_value(spec.param("N"), "N");
    return std::nullopt;
}

inline void validate_family(const FamilySpec& spec) {
    const GaussianRational one(1);
    switch (spec.family) {
    case Family::Wilson:
    case Family::ContinuousHahn:
        spec.param("a");
        spec.param("b");
        spec.param("c");
        spec.param("d");
        break;
    case Family::Racah: {
        const auto n_cap = detail::nonnegative_integer_value(spec.param("N"), "N");
        const GaussianRational minus_n(Rational(-static_cast<long>(n_cap)));
        const int hits = (spec.param("alpha") + one == minus_n ? 1 : 0) +
                         (spec.param("beta") + spec.param("delta") + one == minus_n ? 1 : 0) +
                         (spec.param("gamma") + one == minus_n ? 1 : 0);
        if (hits != 1)
            throw InvalidParameter(
                "racah needs exactly one of alpha+1, beta+delta+1, gamma+1 equal to -N");
        break;
    }
    case Family::Hahn:
        spec.param("alpha");
        spec.param("beta");
        detail::nonnegative_integer_value(spec.param("N"), "N");
        break;
    case Family::Jacobi:
        spec.param("alpha");
        spec.param("beta");
        break;
    case Family::Gegenbauer:
        if (spec.param("lambda").is_zero())
            throw InvalidParameter("gegenbauer needs lambda != 0");
        break;
    case Family::ChebyshevT:
    case Family::ChebyshevU:
    case Family::Legendre:
        break;
    }
}

/// Exact evaluation through the defining terminating series. Wilson and
/// continuous Hahn take a real rational x and work in Q(i) internally;
/// a Wilson value with real parameters is checked to come out real.
inline GaussianRational eval_poly(const FamilySpec& spec, unsigned n, const GaussianRational& x) {
    validate_family(spec);
    if (const auto cap = family_degree_cap(spec); cap && n > *cap)
        throw DegreeExceedsN("degree " + std::to_string(n) + " exceeds N = " +
                             std::to_string(*cap));

    const GaussianRational one(1);
    const GaussianRational minus_n(Rational(-static_cast<long>(n)));
    const GaussianRational n_val(Rational(static_cast<long>(n)));
    const GaussianRational i = GaussianRational::unit_i();

    switch (spec.family) {
    case Family::Wilson: {
        if (!x.is_real())
            throw InvalidParameter("wilson takes a real rational x");
        const auto &a = spec.param("a"), &b = spec.param("b"), &c = spec.param("c"),
                   &d = spec.param("d");
        const GaussianRational s = a + b + c + d;
        const HypSeriesSpec series{{minus_n, n_val + s - one, a + i * x, a - i * x},
                                   {a + b, a + c, a + d},
                                   one};
        const GaussianRational value = pochhammer(a + b, n) * pochhammer(a + c, n) *
                                       pochhammer(a + d, n) * eval_terminating(series);
        if (a.is_real() && b.is_real() && c.is_real() && d.is_real() && !value.is_real())
            throw Error("wilson value with real parameters has nonzero imaginary part");
        return value;
    }
    case Family::Racah: {
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta"),
                   &gamma = spec.param("gamma"), &delta = spec.param("delta");
        const HypSeriesSpec series{
            {minus_n, n_val + alpha + beta + one, -x, x + gamma + delta + one},
            {alpha + one, beta + delta + one, gamma + one},
            one};
        return eval_terminating(series);
    }
    case Family::ContinuousHahn: {
        if (!x.is_real())
            throw InvalidParameter("continuous-hahn takes a real rational x");
        const auto &a = spec.param("a"), &b = spec.param("b"), &c = spec.param("c"),
                   &d = spec.param("d");
        const GaussianRational s = a + b + c + d;
        const HypSeriesSpec series{{minus_n, n_val + s - one, a + i * x}, {a + c, a + d}, one};
        return i_power(n) * pochhammer(a + c, n) * pochhammer(a + d, n) /
               GaussianRational(factorial(n)) * eval_terminating(series);
    }
    case Family::Hahn: {
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta"),
                   &cap = spec.param("N");
        const HypSeriesSpec series{{minus_n, n_val + alpha + beta + one, -x},
                                   {alpha + one, -cap},
                                   one};
        return eval_terminating(series);
    }
    case Family::Jacobi: {
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta");
        const HypSeriesSpec series{{minus_n, n_val + alpha + beta + one},
                                   {alpha + one},
                                   (one - x) / GaussianRational(2)};
        return pochhammer(alpha + one, n) / GaussianRational(factorial(n)) *
               eval_terminating(series);
    }
    case Family::Gegenbauer: {
        const auto& lambda = spec.param("lambda");
        if (lambda.is_zero())
            throw InvalidParameter("gegenbauer needs lambda != 0");
        const HypSeriesSpec series{{minus_n, n_val + lambda + lambda},
                                   {lambda + GaussianRational(Rational(1, 2))},
                                   (one - x) / GaussianRational(2)};
        return pochhammer(lambda + lambda, n) / GaussianRational(factorial(n)) *
               eval_terminating(series);
    }
    case Family::ChebyshevT: {
        const HypSeriesSpec series{{minus_n, n_val},
                                   {GaussianRational(Rational(1, 2))},
                                   (one - x) / GaussianRational(2)};
        return eval_terminating(series);
    }
    case Family::ChebyshevU: {
        const HypSeriesSpec series{{minus_n, n_val + GaussianRational(2)},
                                   {GaussianRational(Rational(3, 2))},
                                   (one - x) / GaussianRational(2)};
        return (n_val + one) * eval_terminating(series);
    }
    case Family::Legendre: {
        const HypSeriesSpec series{{minus_n, n_val + one}, {one},
                                   (one - x) / GaussianRational(2)};
        return eval_terminating(series);
    }
    }
    throw InvalidParameter("unknown family");
}

enum class IdentityId {
    I510,
    I515,
    I520,
    I525,
    I530,
    I535,
    I537,
    I538,
    I540,
    I545,
    I547,
    I550,
    I555,
    JacobiReflection,
    I5610,
    I5710,
    I5810,
    I5910,
};

inline const std::vector<IdentityId>& all_identity_ids() {
    static const std::vector<IdentityId> ids{
        IdentityId::I510,  IdentityId::I515,  IdentityId::I520,  IdentityId::I525,
        IdentityId::I530,  IdentityId::I535,  IdentityId::I537,  IdentityId::I538,
        IdentityId::I540,  IdentityId::I545,  IdentityId::I547,  IdentityId::I550,
        IdentityId::I555,  IdentityId::JacobiReflection,         IdentityId::I5610,
        IdentityId::I5710, IdentityId::I5810, IdentityId::I5910,
    };
    return ids;
}

inline const char* identity_tag(IdentityId id) {
    switch (id) {
    case IdentityId::I510: return "I510";
    case IdentityId::I515: return "I515";
    case IdentityId::I520: return "I520";
    case IdentityId::I525: return "I525";
    case IdentityId::I530: return "I530";
    case IdentityId::I535: return "I535";
    case IdentityId::I537: return "I537";
    case IdentityId::I538: return "I538";
    case IdentityId::I540: return "I540";
    case IdentityId::I545: return "I545";
    case IdentityId::I547: return "I547";
    case IdentityId::I550: return "I550";
    case IdentityId::I555: return "I555";
    case IdentityId::JacobiReflection: return "JacobiReflection";
    case IdentityId::I5610: return "I5610";
    case IdentityId::I5710: return "I5710";
    case IdentityId::I5810: return "I5810";
    case IdentityId::I5910: return "I5910";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_tag(const std::string& tag) {
    for (IdentityId id : all_identity_ids())
        if (tag == identity_tag(id))
            return id;
    return std::nullopt;
}

inline VerificationReport enumerate_538(const GaussianRational& a, const GaussianRational& b,
                                        const GaussianRational& c, const GaussianRational& d,
                                        const GaussianRational& x, unsigned n_max);

namespace detail {

inline void require_sum_not_integer_below(const GaussianRational& s, long bound,
                                          const char* what) {
    if (s.is_real() && s.re.is_integer() && s.re <= Rational(bound))
        throw InvalidParameter(std::string(what) + " = " + s.to_string() +
                               " lies in the excluded integer set");
}

inline ParameterDraw draw_of(const FamilySpec& spec, const GaussianRational& x) {
    ParameterDraw draw;
    for (const auto& [name, value] : spec.params)
        draw.emplace_back(name, value.to_string());
    draw.emplace_back("x", x.to_string());
    return draw;
}

} // namespace detail

/// Checks one polynomial-family identity exactly for every n <= n_max.
/// The left side combines eval_poly values with the stated weights; the
/// right side is rebuilt from Pochhammer products only, so both sides
/// travel independent code paths. Identities that constrain a parameter
/// derive the constrained value from the free ones.
inline VerificationReport verify_identity(IdentityId id, const FamilySpec& params,
                                          const GaussianRational& x, unsigned n_max) {
    const GaussianRational one(1);
    const GaussianRational two(2);
    const GaussianRational i = GaussianRational::unit_i();
    const GaussianRational half(Rational(1, 2));
    const std::string tag = identity_tag(id);

    switch (id) {
    case IdentityId::I510:
    case IdentityId::I515: {
        FamilySpec spec = params;
        spec.family = Family::Wilson;
        if (id == IdentityId::I515)
            spec.params["d"] = one - spec.param("a") - spec.param("b") - spec.param("c");
        const auto &a = spec.param("a"), &b = spec.param("b"), &c = spec.param("c"),
                   &d = spec.param("d");
        const GaussianRational s = a + b + c + d;
        if (id == IdentityId::I510)
            detail::require_sum_not_integer_below(s, 1, "a+b+c+d");
        const auto lhs = [&, s](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k) {
                const GaussianRational dens = pochhammer(a + b, k) * pochhammer(a + c, k) *
                                              pochhammer(a + d, k);
                GaussianRational weight;
                if (id == IdentityId::I510)
                    weight = pochhammer(s - one, k) * pochhammer((s + one) / two, k) *
                             pochhammer(minus_n, k) /
                             (GaussianRational(factorial(k)) *
                              pochhammer((s - one) / two, k) * pochhammer(s + n_val, k) * dens);
                else
                    weight = pochhammer(minus_n, k) /
                             (pochhammer(n_val + one, k) * dens);
                sum += weight * eval_poly(spec, k, x);
            }
            return sum;
        };
        const auto rhs = [&, s](unsigned n) {
            const GaussianRational dens =
                pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
            const GaussianRational cross = pochhammer(a + i * x, n) * pochhammer(a - i * x, n);
            if (id == IdentityId::I510)
                return pochhammer(s, n) * cross / dens;
            return (GaussianRational(factorial(n)) * cross + dens) / (two * dens);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I520:
    case IdentityId::I525: {
        FamilySpec spec = params;
        spec.family = Family::Racah;
        if (id == IdentityId::I525)
            spec.params["beta"] = -one - spec.param("alpha");
        validate_family(spec);
        if (n_max > *family_degree_cap(spec))
            throw InvalidParameter("n_max exceeds the racah cap N");
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta"),
                   &gamma = spec.param("gamma"), &delta = spec.param("delta");
        const GaussianRational e = alpha + beta + one;
        if (id == IdentityId::I520)
            detail::require_sum_not_integer_below(alpha + beta, -1, "alpha+beta");
        const auto lhs = [&, e](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k) {
                GaussianRational weight;
                if (id == IdentityId::I520)
                    weight = pochhammer(e, k) * pochhammer((e + two) / two, k) *
                             pochhammer(minus_n, k) /
                             (GaussianRational(factorial(k)) * pochhammer(e / two, k) *
                              pochhammer(e + one + n_val, k));
                else
                    weight = pochhammer(minus_n, k) / pochhammer(n_val + one, k);
                sum += weight * eval_poly(spec, k, x);
            }
            return sum;
        };
        const auto rhs = [&, e](unsigned n) {
            const GaussianRational dens = pochhammer(alpha + one, n) *
                                          pochhammer(beta + delta + one, n) *
                                          pochhammer(gamma + one, n);
            const GaussianRational cross =
                pochhammer(-x, n) * pochhammer(x + gamma + delta + one, n);
            if (id == IdentityId::I520)
                return pochhammer(e + one, n) * cross / dens;
            return (GaussianRational(factorial(n)) * cross + dens) / (two * dens);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I530:
    case IdentityId::I535: {
        FamilySpec spec = params;
        spec.family = Family::ContinuousHahn;
        if (id == IdentityId::I535)
            spec.params["d"] = one - spec.param("a") - spec.param("b") - spec.param("c");
        const auto &a = spec.param("a"), &c = spec.param("c"), &d = spec.param("d");
        const GaussianRational s = a + spec.param("b") + c + d;
        if (id == IdentityId::I530)
            detail::require_sum_not_integer_below(s, 1, "a+b+c+d");
        const auto lhs = [&, s](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k) {
                const GaussianRational minus_i_k = pow(-GaussianRational::unit_i(), k);
                const GaussianRational dens = pochhammer(a + c, k) * pochhammer(a + d, k);
                GaussianRational weight;
                if (id == IdentityId::I530)
                    weight = minus_i_k * pochhammer(s - one, k) *
                             pochhammer((s + one) / two, k) * pochhammer(minus_n, k) /
                             (pochhammer((s - one) / two, k) * pochhammer(s + n_val, k) * dens);
                else
                    weight = minus_i_k * pochhammer(minus_n, k) *
                             GaussianRational(factorial(k)) /
                             (pochhammer(n_val + one, k) * dens);
                sum += weight * eval_poly(spec, k, x);
            }
            return sum;
        };
        const auto rhs = [&, s](unsigned n) {
            const GaussianRational dens = pochhammer(a + c, n) * pochhammer(a + d, n);
            const GaussianRational top = pochhammer(a + i * x, n);
            if (id == IdentityId::I530)
                return pochhammer(s, n) * top / dens;
            return (GaussianRational(factorial(n)) * top + dens) / (two * dens);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I537: {
        FamilySpec spec = params;
        spec.family = Family::ContinuousHahn;
        FamilySpec reflected = spec;
        reflected.params["a"] = spec.param("d");
        reflected.params["b"] = spec.param("c");
        reflected.params["c"] = spec.param("b");
        reflected.params["d"] = spec.param("a");
        const auto lhs = [&](unsigned n) { return eval_poly(spec, n, x); };
        const auto rhs = [&](unsigned n) {
            return minus_one_pow(n) * eval_poly(reflected, n, -x);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I538: {
        FamilySpec spec = params;
        spec.family = Family::ContinuousHahn;
        return enumerate_538(spec.param("a"), spec.param("b"), spec.param("c"),
                             spec.param("d"), x, n_max);
    }

    case IdentityId::I540:
    case IdentityId::I545: {
        FamilySpec spec = params;
        spec.family = Family::Hahn;
        if (id == IdentityId::I545)
            spec.params["beta"] = -spec.param("alpha") - one;
        validate_family(spec);
        if (n_max > *family_degree_cap(spec))
            throw InvalidParameter("n_max exceeds the hahn cap N");
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta"),
                   &cap = spec.param("N");
        const GaussianRational e = alpha + beta + one;
        if (id == IdentityId::I540)
            detail::require_sum_not_integer_below(alpha + beta, -1, "alpha+beta");
        const auto lhs = [&, e](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k) {
                GaussianRational weight;
                if (id == IdentityId::I540)
                    weight = pochhammer(e, k) * pochhammer((e + two) / two, k) *
                             pochhammer(minus_n, k) /
                             (GaussianRational(factorial(k)) * pochhammer(e / two, k) *
                              pochhammer(e + one + n_val, k));
                else
                    weight = pochhammer(minus_n, k) / pochhammer(n_val + one, k);
                sum += weight * eval_poly(spec, k, x);
            }
            return sum;
        };
        const auto rhs = [&, e](unsigned n) {
            const GaussianRational dens = pochhammer(alpha + one, n) * pochhammer(-cap, n);
            if (id == IdentityId::I540)
                return pochhammer(e + one, n) * pochhammer(-x, n) / dens;
            return (GaussianRational(factorial(n)) * pochhammer(-x, n) + dens) / (two * dens);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I547: {
        FamilySpec spec = params;
        spec.family = Family::Hahn;
        validate_family(spec);
        if (n_max > *family_degree_cap(spec))
            throw InvalidParameter("n_max exceeds the hahn cap N");
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta"),
                   &cap = spec.param("N");
        FamilySpec swapped = spec;
        swapped.params["alpha"] = beta;
        swapped.params["beta"] = alpha;
        const auto lhs = [&](unsigned n) { return eval_poly(spec, n, x); };
        const auto rhs = [&](unsigned n) {
            return minus_one_pow(n) * pochhammer(beta + one, n) / pochhammer(alpha + one, n) *
                   eval_poly(swapped, n, cap - x);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I550:
    case IdentityId::I555: {
        FamilySpec spec = params;
        spec.family = Family::Jacobi;
        if (id == IdentityId::I555)
            spec.params["beta"] = -spec.param("alpha") - one;
        const auto &alpha = spec.param("alpha"), &beta = spec.param("beta");
        const GaussianRational e = alpha + beta + one;
        if (id == IdentityId::I550)
            detail::require_sum_not_integer_below(alpha + beta, -1, "alpha+beta");
        const auto lhs = [&, e](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k) {
                GaussianRational weight;
                if (id == IdentityId::I550)
                    weight = pochhammer(e, k) * pochhammer((e + two) / two, k) *
                             pochhammer(minus_n, k) /
                             (pochhammer(e / two, k) * pochhammer(e + one + n_val, k) *
                              pochhammer(alpha + one, k));
                else
                    weight = pochhammer(minus_n, k) * GaussianRational(factorial(k)) /
                             (pochhammer(n_val + one, k) * pochhammer(alpha + one, k));
                sum += weight * eval_poly(spec, k, x);
            }
            return sum;
        };
        const auto rhs = [&, e](unsigned n) {
            const GaussianRational z_pow = pow((one - x) / two, n);
            if (id == IdentityId::I550)
                return pochhammer(e + one, n) / pochhammer(alpha + one, n) * z_pow;
            return (GaussianRational(factorial(n)) * z_pow + pochhammer(alpha + one, n)) /
                   (two * pochhammer(alpha + one, n));
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::JacobiReflection: {
        FamilySpec spec = params;
        spec.family = Family::Jacobi;
        FamilySpec swapped = spec;
        swapped.params["alpha"] = spec.param("beta");
        swapped.params["beta"] = spec.param("alpha");
        const auto lhs = [&](unsigned n) { return eval_poly(spec, n, x); };
        const auto rhs = [&](unsigned n) {
            return minus_one_pow(n) * eval_poly(swapped, n, -x);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I5610: {
        FamilySpec spec = params;
        spec.family = Family::Gegenbauer;
        const auto& lambda = spec.param("lambda");
        if ((lambda + lambda).is_nonpositive_integer())
            throw InvalidParameter("gegenbauer relation needs 2*lambda outside {0, -1, -2, ...}");
        const auto lhs = [&](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += pochhammer(one + lambda, k) * pochhammer(minus_n, k) /
                       (pochhammer(lambda, k) * pochhammer(one + lambda + lambda + n_val, k)) *
                       eval_poly(spec, k, x);
            return sum;
        };
        const auto rhs = [&](unsigned n) {
            return pochhammer(one + lambda + lambda, n) / pochhammer(lambda + half, n) *
                   pow((one - x) / two, n);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I5710: {
        const FamilySpec spec{Family::ChebyshevT, {}};
        const auto lhs = [&](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += pochhammer(minus_n, k) / pochhammer(n_val + one, k) *
                       eval_poly(spec, k, x);
            return sum;
        };
        const auto rhs = [&](unsigned n) {
            const GaussianRational h = pochhammer(GaussianRational(half), n);
            return (GaussianRational(factorial(n)) * pow((one - x) / two, n) + h) / (two * h);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I5810: {
        const FamilySpec spec{Family::ChebyshevU, {}};
        const auto lhs = [&](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            // The weight denominator carries (3+n)_k: the inverse route
            // with a = 2 forces the shift one past n+2 (the entrywise
            // kernel comparison lives in the derivation test).
            for (unsigned k = 0; k <= n; ++k)
                sum += pochhammer(two, k) * pochhammer(minus_n, k) /
                       (GaussianRational(factorial(k)) *
                        pochhammer(GaussianRational(3) + n_val, k)) *
                       eval_poly(spec, k, x);
            return sum;
        };
        const auto rhs = [&](unsigned n) {
            return pochhammer(GaussianRational(3), n) /
                   pochhammer(GaussianRational(Rational(3, 2)), n) * pow((one - x) / two, n);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }

    case IdentityId::I5910: {
        const FamilySpec spec{Family::Legendre, {}};
        const auto lhs = [&](unsigned n) {
            const GaussianRational minus_n(Rational(-static_cast<long>(n)));
            const GaussianRational n_val(Rational(static_cast<long>(n)));
            GaussianRational sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += pochhammer(GaussianRational(Rational(3, 2)), k) *
                       pochhammer(minus_n, k) /
                       (pochhammer(GaussianRational(half), k) *
                        pochhammer(two + n_val, k)) *
                       eval_poly(spec, k, x);
            return sum;
        };
        const auto rhs = [&](unsigned n) {
            return (GaussianRational(Rational(static_cast<long>(n))) + one) *
                   pow((one - x) / two, n);
        };
        return check_pointwise(tag, detail::draw_of(spec, x), n_max, lhs, rhs);
    }
    }
    throw InvalidParameter("unknown identity id");
}

/// All eight sign/permutation forms of the continuous Hahn reflection:
/// p_n(x; a,b,c,d) = (-1)^{kn} p_n((-1)^k x; x1,x2,x3,x4) with k = 0 for
/// {x1,x2} = {a,b}, {x3,x4} = {c,d} and k = 1 for the swapped grouping.
inline VerificationReport enumerate_538(const GaussianRational& a, const GaussianRational& b,
                                        const GaussianRational& c, const GaussianRational& d,
                                        const GaussianRational& x, unsigned n_max) {
    const FamilySpec base{Family::ContinuousHahn,
                          {{"a", a}, {"b", b}, {"c", c}, {"d", d}}};
    VerificationReport report;
    report.identity = "I538";
    report.parameter_draw = detail::draw_of(base, x);
    report.n_max = n_max;
    report.trials = 1;

    struct Form {
        unsigned k;
        GaussianRational p1, p2, p3, p4;
    };
    std::vector<Form> forms;
    for (const auto& [p1, p2] : {std::pair{a, b}, std::pair{b, a}})
        for (const auto& [p3, p4] : {std::pair{c, d}, std::pair{d, c}})
            forms.push_back({0, p1, p2, p3, p4});
    for (const auto& [p1, p2] : {std::pair{c, d}, std::pair{d, c}})
        for (const auto& [p3, p4] : {std::pair{a, b}, std::pair{b, a}})
            forms.push_back({1, p1, p2, p3, p4});

    for (unsigned n = 0; n <= n_max && report.passed(); ++n) {
        const GaussianRational lhs = eval_poly(base, n, x);
        for (const auto& form : forms) {
            const FamilySpec permuted{
                Family::ContinuousHahn,
                {{"a", form.p1}, {"b", form.p2}, {"c", form.p3}, {"d", form.p4}}};
            const GaussianRational sign = form.k == 0 ? GaussianRational(1) : minus_one_pow(n);
            const GaussianRational arg = form.k == 0 ? x : -x;
            const GaussianRational rhs = sign * eval_poly(permuted, n, arg);
            if (lhs != rhs) {
                report.status = VerifyStatus::Fail;
                report.counterexample = Counterexample{n, lhs, rhs};
                break;
            }
        }
    }
    return report;
}

} // namespace hyperseq
