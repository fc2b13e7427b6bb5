// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_RATIONAL_HPP
#define LEGENDRE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "legendre/errors.hpp"

namespace legendre {

// Arbitrary-precision rational in canonical form: reduced, denominator > 0,
// canonical zero 0/1.  The canonical form is maintained by GMP after every
// operation, so equality is plain value comparison and rendering is
// reproducible character-for-character.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "num/den" or "num" (optional sign, decimal digits only).
    static Rational from_string(const std::string& s);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational inverse() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Distinguished constants as instance methods so generic code can mint
    // them without knowing the field's runtime context.
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // "num/den" with the "/den" omitted for integers.
    std::string str() const;

private:
    mpq_class v_;
};

}  // namespace legendre

#endif  // LEGENDRE_RATIONAL_HPP
