#pragma once

#include <cstdint>
#include <random>

#include "hyperseq/errors.hpp"
#include "hyperseq/gaussian.hpp"
#include "hyperseq/rational.hpp"
#include "hyperseq/sequence.hpp"

namespace hyperseq {

/// Seeded source of small rationals: numerators in [-20, 20], denominators
/// in [1, 12] unless stated otherwise. Bounds are chosen to keep bignum
/// growth modest across long identity campaigns while staying dense enough
/// that pole collisions are rare.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }

    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng_() % span);
    }

    Rational rational(long num_lo = -20, long num_hi = 20, long den_lo = 1, long den_hi = 12) {
        return Rational(integer(num_lo, num_hi), integer(den_lo, den_hi));
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero())
                return r;
        }
    }

    /// Rational guaranteed off the integer lattice.
    Rational non_integer_rational() {
        for (;;) {
            Rational r = rational(-20, 20, 2, 12);
            if (!r.is_integer())
                return r;
        }
    }

    GaussianRational gaussian() { return {rational(), rational()}; }

    Sequence sequence(std::size_t length) {
        Sequence x;
        x.entries.reserve(length);
        for (std::size_t i = 0; i < length; ++i)
            x.entries.push_back(gaussian());
        return x;
    }

    /// Draws until `valid` accepts, with a retry bound so a mis-specified
    /// predicate surfaces as InvalidParameter instead of a hang.
    template <class Draw, class Valid>
    auto draw_valid(Draw draw, Valid valid, int retries = 500) -> decltype(draw()) {
        for (int i = 0; i < retries; ++i) {
            auto candidate = draw();
            if (valid(candidate))
                return candidate;
        }
        throw InvalidParameter("no valid parameter draw within retry budget");
    }

private:
    std::mt19937_64 rng_;
};

} // namespace hyperseq
