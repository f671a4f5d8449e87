#pragma once

#include <gmpxx.h>

#include <ostream>
#include <regex>
#include <string>
#include <utility>

#include "hyperseq/errors.hpp"

namespace hyperseq {

/// Arbitrary-precision rational, always kept in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) == 1.
/// Equality is structural equality of canonical forms.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: integers convert implicitly
    Rational(long num, long den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = mpq_class(num, static_cast<unsigned long>(den));
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p" or "p/q" with an optional leading '-', q > 0.
    static Rational parse(const std::string& text) {
        static const std::regex grammar(R"(^-?[0-9]+(/[0-9]+)?$)");
        if (!std::regex_match(text, grammar))
            throw ParseError("not a rational: \"" + text + "\"");
        mpq_class v(text, 10);
        if (v.get_den() == 0)
            throw ParseError("zero denominator: \"" + text + "\"");
        v.canonicalize();
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
    bool is_negative_integer() const { return is_integer() && sgn(v_) < 0; }
    bool is_positive_integer() const { return is_integer() && sgn(v_) > 0; }
    int sign() const { return sgn(v_); }

    /// Value as long; the value must be an integer that fits.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw Error("rational does not fit a machine integer: " + to_string());
        return v_.get_num().get_si();
    }

    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace hyperseq
