#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "hyperseq/errors.hpp"
#include "hyperseq/rational.hpp"

namespace hyperseq {

/// Element of Q(i): a complex number with rational real and imaginary
/// parts. All arithmetic is exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {} // NOLINT
    GaussianRational(long n) : re(n) {}                      // NOLINT
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_nonpositive_integer() const { return is_real() && re.is_nonpositive_integer(); }
    bool is_negative_integer() const { return is_real() && re.is_negative_integer(); }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero())
            throw DivisionByZero("division by zero in Q(i)");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string to_string() const {
        if (im.is_zero())
            return re.to_string();
        std::string imag = abs(im) == Rational(1) ? "i" : abs(im).to_string() + "i";
        if (re.is_zero())
            return (im.sign() < 0 ? "-" : "") + imag;
        return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
        return os << g.to_string();
    }
};

inline GaussianRational pow(const GaussianRational& base, unsigned exponent) {
    GaussianRational result(1);
    GaussianRational b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u)
            result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/// i^n without forming intermediate products.
inline GaussianRational i_power(unsigned n) {
    switch (n % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::unit_i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::unit_i();
    }
}

inline GaussianRational minus_one_pow(unsigned n) {
    return GaussianRational(n % 2 == 0 ? 1 : -1);
}

} // namespace hyperseq
