// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_RATPOLY_HPP
#define LEGENDRE_RATPOLY_HPP

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "legendre/rational.hpp"

namespace legendre {

// Univariate polynomial over the rationals, coefficients ascending by power
// (index k holds the coefficient of X^k).  The zero polynomial is the empty
// coefficient sequence; otherwise the leading coefficient is nonzero.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(std::size_t k, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly scaled(const Rational& c) const;

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RationalPoly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& x) const;
    RationalPoly derivative() const;
    RationalPoly monic() const;  // throws DivisionByZeroError on zero poly

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// X^n - aX - b, the trinomial family the whole construction lives on.
// Throws InvalidParamError for n < 2.
RationalPoly trinomial(int n, const Rational& a, const Rational& b);

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q);

// Euclidean division: p = q*quot + rem with deg(rem) < deg(q).
// Throws DivisionByZeroError if q = 0.
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& p, const RationalPoly& q);

// Extended gcd: returns (g, s, t) with g = s*p + t*q, g monic and dividing
// both inputs.  Throws InvalidParamError if both inputs are zero.
std::tuple<RationalPoly, RationalPoly, RationalPoly> poly_xgcd(const RationalPoly& p,
                                                               const RationalPoly& q);

}  // namespace legendre

#endif  // LEGENDRE_RATPOLY_HPP
