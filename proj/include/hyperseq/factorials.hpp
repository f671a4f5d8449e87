#pragma once

#include <gmpxx.h>

#include "hyperseq/errors.hpp"
#include "hyperseq/gaussian.hpp"
#include "hyperseq/rational.hpp"

namespace hyperseq {

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

/// Exact n!/(k!(n-k)!); requires k <= n.
inline Rational binomial(unsigned n, unsigned k) {
    if (k > n)
        throw InvalidParameter("binomial(n, k) requires k <= n");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

/// Rising factorial (gamma)_k = gamma (gamma+1) ... (gamma+k-1), empty
/// product 1 for k = 0.
inline GaussianRational pochhammer(const GaussianRational& gamma, unsigned k) {
    GaussianRational product(1);
    GaussianRational factor = gamma;
    for (unsigned j = 0; j < k; ++j) {
        product *= factor;
        factor += GaussianRational(1);
    }
    return product;
}

inline Rational pochhammer(const Rational& gamma, unsigned k) {
    Rational product(1);
    Rational factor = gamma;
    for (unsigned j = 0; j < k; ++j) {
        product *= factor;
        factor += Rational(1);
    }
    return product;
}

/// True iff (gamma)_k != 0, i.e. gamma is not an integer in
/// {0, -1, ..., -(k-1)}.
inline bool pochhammer_nonzero(const GaussianRational& gamma, unsigned k) {
    if (!gamma.is_real() || !gamma.re.is_integer())
        return true;
    return !(gamma.re <= Rational(0) && gamma.re > Rational(-static_cast<long>(k)));
}

} // namespace hyperseq
