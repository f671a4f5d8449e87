#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hyperseq/errors.hpp"
#include "hyperseq/factorials.hpp"
#include "hyperseq/gaussian.hpp"
#include "hyperseq/sequence.hpp"

namespace hyperseq {

/// Lower-triangular transform y_n = sum_{k<=n} coeff(n, k) x_k, held as a
/// lazy coefficient function rather than a materialized matrix. Invertible
/// iff coeff(n, n) != 0 for every n in the working prefix.
struct TriangularKernel {
    std::function<GaussianRational(unsigned n, unsigned k)> coeff;
    std::string description;
};

enum class TransformKind {
    Identity,
    BinomialSigned,
    BinomialUnsigned,
    BinomialUnsignedInverse,
    L,
    LInverse,
    LTilde,
    LTildeInverse,
    Lab,
    LabInverse,
};

struct TransformSpec {
    TransformKind kind = TransformKind::Identity;
    GaussianRational a;
    GaussianRational b;
};

inline const char* kind_name(TransformKind kind) {
    switch (kind) {
    case TransformKind::Identity: return "identity";
    case TransformKind::BinomialSigned: return "binomial-signed";
    case TransformKind::BinomialUnsigned: return "binomial-unsigned";
    case TransformKind::BinomialUnsignedInverse: return "binomial-unsigned-inverse";
    case TransformKind::L: return "L";
    case TransformKind::LInverse: return "L-inverse";
    case TransformKind::LTilde: return "Ltilde";
    case TransformKind::LTildeInverse: return "Ltilde-inverse";
    case TransformKind::Lab: return "Lab";
    case TransformKind::LabInverse: return "Lab-inverse";
    }
    return "?";
}

namespace detail {

inline GaussianRational falling_base(unsigned n) {
    return GaussianRational(Rational(-static_cast<long>(n)));
}

inline void require_l_parameter(const GaussianRational& a) {
    if (a.is_negative_integer())
        throw InvalidParameter("L transform needs a outside {-1, -2, -3, ...}, got a = " +
                               a.to_string());
}

inline void require_ltilde_parameter(const GaussianRational& a) {
    if (a.is_real() && a.re.is_integer() && a.re <= Rational(-2))
        throw InvalidParameter("Ltilde transform needs a outside {-2, -3, -4, ...}, got a = " +
                               a.to_string());
}

inline void require_lab_parameters(const GaussianRational& a, const GaussianRational& b) {
    require_l_parameter(a);
    if (b.is_nonpositive_integer())
        throw InvalidParameter("Lab transform needs b outside {0, -1, -2, ...}, got b = " +
                               b.to_string());
}

} // namespace detail

/// Coefficient generator for a transform. Parameters at which the generic
/// inverse formula degenerates (a = 0 for the L and Lab inverses, a = 0 or
/// a = -1 for the Ltilde inverse) dispatch to the closed limit forms, with
/// the limit's separate k = 0 share folded into coeff(n, 0) so every
/// inverse stays a plain triangular transform.
inline TriangularKernel kernel_for(const TransformSpec& spec) {
    using detail::falling_base;
    const GaussianRational one(1);
    const GaussianRational two(2);
    const GaussianRational a = spec.a;
    const GaussianRational b = spec.b;

    switch (spec.kind) {
    case TransformKind::Identity:
        return {[](unsigned n, unsigned k) { return GaussianRational(k == n ? 1 : 0); },
                "identity"};

    case TransformKind::BinomialSigned:
        return {[](unsigned n, unsigned k) {
                    return minus_one_pow(k) * GaussianRational(binomial(n, k));
                },
                "binomial-signed"};

    case TransformKind::BinomialUnsigned:
        return {[](unsigned n, unsigned k) { return GaussianRational(binomial(n, k)); },
                "binomial-unsigned"};

    case TransformKind::BinomialUnsignedInverse:
        return {[](unsigned n, unsigned k) {
                    return minus_one_pow(n - k) * GaussianRational(binomial(n, k));
                },
                "binomial-unsigned-inverse"};

    case TransformKind::L:
        detail::require_l_parameter(a);
        return {[a](unsigned n, unsigned k) {
                    return pochhammer(falling_base(n), k) *
                           pochhammer(GaussianRational(Rational(static_cast<long>(n))) + a, k);
                },
                "L(a=" + a.to_string() + ")"};

    case TransformKind::LInverse: {
        detail::require_l_parameter(a);
        if (a.is_zero()) {
            return {[](unsigned n, unsigned k) {
                        const GaussianRational nf2 =
                            GaussianRational(factorial(n) * factorial(n));
                        if (k == 0)
                            return GaussianRational(1) / nf2;
                        return GaussianRational(2) * pochhammer(falling_base(n), k) /
                               (nf2 * pochhammer(GaussianRational(Rational(
                                          static_cast<long>(n) + 1)), k));
                    },
                    "L-inverse(a=0)"};
        }
        return {[a, one, two](unsigned n, unsigned k) {
                    const GaussianRational np(Rational(static_cast<long>(n)));
                    const GaussianRational prefactor =
                        one / (GaussianRational(factorial(n)) * pochhammer(one + a, n));
                    return prefactor * pochhammer(a, k) * pochhammer(one + a / two, k) *
                           pochhammer(falling_base(n), k) /
                           (GaussianRational(factorial(k)) * pochhammer(a / two, k) *
                            pochhammer(one + a + np, k));
                },
                "L-inverse(a=" + a.to_string() + ")"};
    }

    case TransformKind::LTilde:
        detail::require_ltilde_parameter(a);
        return {[a, one](unsigned n, unsigned k) {
                    const GaussianRational np(Rational(static_cast<long>(n)));
                    return pochhammer(falling_base(n), k) / pochhammer(one + a + np, k);
                },
                "Ltilde(a=" + a.to_string() + ")"};

    case TransformKind::LTildeInverse: {
        detail::require_ltilde_parameter(a);
        if (a.is_zero()) {
            return {[](unsigned n, unsigned k) {
                        if (n == 0)
                            return GaussianRational(k == 0 ? 1 : 0);
                        const GaussianRational kf(factorial(k));
                        return GaussianRational(2) * pochhammer(falling_base(n), k) *
                               pochhammer(GaussianRational(Rational(static_cast<long>(n))), k) /
                               (kf * kf);
                    },
                    "Ltilde-inverse(a=0)"};
        }
        if (a == GaussianRational(-1)) {
            return {[](unsigned n, unsigned k) {
                        if (n == 0)
                            return GaussianRational(k == 0 ? 1 : 0);
                        return GaussianRational(Rational(2 * static_cast<long>(n) - 1)) *
                               minus_one_pow(k) *
                               pochhammer(GaussianRational(Rational(static_cast<long>(k))),
                                          n - 1) /
                               GaussianRational(factorial(n - k) * factorial(k));
                    },
                    "Ltilde-inverse(a=-1)"};
        }
        return {[a, one, two](unsigned n, unsigned k) {
                    const GaussianRational np(Rational(static_cast<long>(n)));
                    const GaussianRational prefactor =
                        pochhammer(a, n) * pochhammer(one + a / two, n) /
                        (GaussianRational(factorial(n)) * pochhammer(a / two, n));
                    return prefactor * pochhammer(falling_base(n), k) * pochhammer(np + a, k) /
                           (GaussianRational(factorial(k)) * pochhammer(one + a, k));
                },
                "Ltilde-inverse(a=" + a.to_string() + ")"};
    }

    case TransformKind::Lab:
        detail::require_lab_parameters(a, b);
        return {[a, b](unsigned n, unsigned k) {
                    const GaussianRational np(Rational(static_cast<long>(n)));
                    return pochhammer(falling_base(n), k) * pochhammer(np + a, k) /
                           (GaussianRational(factorial(k)) * pochhammer(b, k));
                },
                "Lab(a=" + a.to_string() + ",b=" + b.to_string() + ")"};

    case TransformKind::LabInverse: {
        detail::require_lab_parameters(a, b);
        if (a.is_zero()) {
            return {[b](unsigned n, unsigned k) {
                        const GaussianRational head =
                            pochhammer(b, n) / GaussianRational(factorial(n));
                        if (k == 0)
                            return head;
                        return GaussianRational(2) * head * pochhammer(falling_base(n), k) /
                               pochhammer(GaussianRational(Rational(static_cast<long>(n) + 1)),
                                          k);
                    },
                    "Lab-inverse(a=0,b=" + b.to_string() + ")"};
        }
        return {[a, b, one, two](unsigned n, unsigned k) {
                    const GaussianRational np(Rational(static_cast<long>(n)));
                    const GaussianRational prefactor = pochhammer(b, n) / pochhammer(one + a, n);
                    return prefactor * pochhammer(a, k) * pochhammer(one + a / two, k) *
                           pochhammer(falling_base(n), k) /
                           (GaussianRational(factorial(k)) * pochhammer(a / two, k) *
                            pochhammer(one + a + np, k));
                },
                "Lab-inverse(a=" + a.to_string() + ",b=" + b.to_string() + ")"};
    }
    }
    throw InvalidParameter("unknown transform kind");
}

/// y_n = sum_{k<=n} coeff(n, k) x_k for one row n.
inline GaussianRational apply_row(const TriangularKernel& kernel, const Sequence& x, unsigned n) {
    if (n >= x.size())
        throw InvalidParameter("row index beyond sequence prefix");
    GaussianRational sum;
    for (unsigned k = 0; k <= n; ++k)
        sum += kernel.coeff(n, k) * x[k];
    return sum;
}

/// Transformed prefix of the same length.
inline Sequence apply(const TriangularKernel& kernel, const Sequence& x) {
    if (x.size() == 0)
        throw InvalidParameter("empty sequence");
    Sequence y;
    y.entries.reserve(x.size());
    for (unsigned n = 0; n < x.size(); ++n)
        y.entries.push_back(apply_row(kernel, x, n));
    return y;
}

/// Kernel of the composition: first apply `inner`, then `outer`.
inline TriangularKernel compose(const TriangularKernel& outer, const TriangularKernel& inner) {
    return {[outer, inner](unsigned n, unsigned k) {
                GaussianRational sum;
                for (unsigned m = k; m <= n; ++m)
                    sum += outer.coeff(n, m) * inner.coeff(m, k);
                return sum;
            },
            outer.description + " . " + inner.description};
}

inline bool diagonal_nonzero(const TriangularKernel& kernel, unsigned up_to) {
    for (unsigned n = 0; n <= up_to; ++n)
        if (kernel.coeff(n, n).is_zero())
            return false;
    return true;
}

/// Spec whose kernel composes with the input's kernel to the identity on
/// every prefix.
inline TransformSpec invert(const TransformSpec& spec) {
    switch (spec.kind) {
    case TransformKind::Identity:
    case TransformKind::BinomialSigned:
        return spec;
    case TransformKind::BinomialUnsigned:
        return {TransformKind::BinomialUnsignedInverse};
    case TransformKind::BinomialUnsignedInverse:
        return {TransformKind::BinomialUnsigned};
    case TransformKind::L:
        detail::require_l_parameter(spec.a);
        return {TransformKind::LInverse, spec.a};
    case TransformKind::LInverse:
        detail::require_l_parameter(spec.a);
        return {TransformKind::L, spec.a};
    case TransformKind::LTilde:
        detail::require_ltilde_parameter(spec.a);
        return {TransformKind::LTildeInverse, spec.a};
    case TransformKind::LTildeInverse:
        detail::require_ltilde_parameter(spec.a);
        return {TransformKind::LTilde, spec.a};
    case TransformKind::Lab:
        detail::require_lab_parameters(spec.a, spec.b);
        return {TransformKind::LabInverse, spec.a, spec.b};
    case TransformKind::LabInverse:
        detail::require_lab_parameters(spec.a, spec.b);
        return {TransformKind::Lab, spec.a, spec.b};
    }
    throw InvalidParameter("unknown transform kind");
}

/// Both sides of the connection identity linking Lab(a, b) applied to the
/// signed binomial transform of x with Lab(a, 1+a-b) applied to x itself:
/// LHS = Lab(a,b)(x^)_n, RHS = (-1)^n (1+a-b)_n/(b)_n Lab(a,1+a-b)(x)_n.
/// Requires b - a not a positive integer so the right-hand kernel exists.
inline std::pair<GaussianRational, GaussianRational>
connection_sides(const GaussianRational& a, const GaussianRational& b, const Sequence& x,
                 unsigned n) {
    detail::require_lab_parameters(a, b);
    const GaussianRational diff = b - a;
    if (diff.is_real() && diff.re.is_positive_integer())
        throw InvalidParameter("connection identity needs b outside {1+a, 2+a, ...}");
    if (n >= x.size())
        throw InvalidParameter("n beyond sequence prefix");

    const GaussianRational one(1);
    const Sequence x_hat = apply(kernel_for({TransformKind::BinomialSigned}), x);
    const GaussianRational lhs = apply_row(kernel_for({TransformKind::Lab, a, b}), x_hat, n);
    const GaussianRational rhs =
        minus_one_pow(n) * pochhammer(one + a - b, n) / pochhammer(b, n) *
        apply_row(kernel_for({TransformKind::Lab, a, one + a - b}), x, n);
    return {lhs, rhs};
}

/// Integer-weight form of the connection identity at odd a = 2r+1 and
/// b = r+1: both weighted sums use w_k = C(n,k) C(n+k+2r, k+r), the left
/// over the signed binomial transform of x, the right over x with the
/// (-1)^n prefactor.
inline std::pair<GaussianRational, GaussianRational>
odd_a_connection_sides(unsigned r, const Sequence& x, unsigned n) {
    if (n >= x.size())
        throw InvalidParameter("n beyond sequence prefix");
    const Sequence x_hat = apply(kernel_for({TransformKind::BinomialSigned}), x);
    GaussianRational lhs;
    GaussianRational rhs;
    for (unsigned k = 0; k <= n; ++k) {
        const GaussianRational weight =
            minus_one_pow(k) * GaussianRational(binomial(n, k) * binomial(n + k + 2 * r, k + r));
        lhs += weight * x_hat[k];
        rhs += weight * x[k];
    }
    return {lhs, minus_one_pow(n) * rhs};
}

} // namespace hyperseq
