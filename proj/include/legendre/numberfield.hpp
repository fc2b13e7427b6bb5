// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_NUMBERFIELD_HPP
#define LEGENDRE_NUMBERFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "legendre/quadext.hpp"
#include "legendre/ratpoly.hpp"

namespace legendre {

// The quotient ring K = Q[X]/(f), deg f = n.  For the trinomials used here f
// is irreducible (a classical result of Selmer for X^n - X - 1), making K a
// number field; inversion surfaces a factor of f as a witness if it is not.
class NumberField {
public:
    // Requires deg f >= 1 and f monic.
    static std::shared_ptr<const NumberField> make(RationalPoly f);
    // K_n for f = X^n - X - 1.
    static std::shared_ptr<const NumberField> trinomial_field(int n);

    const RationalPoly& modulus() const { return f_; }
    int degree() const { return f_.degree(); }

    bool operator==(const NumberField& o) const { return f_ == o.f_; }

private:
    explicit NumberField(RationalPoly f) : f_(std::move(f)) {}
    RationalPoly f_;
};

// Element of K as exactly n rational coefficients, ascending powers of u.
class NumberFieldElement {
public:
    NumberFieldElement(std::shared_ptr<const NumberField> field, const RationalPoly& value);

    static NumberFieldElement u(const std::shared_ptr<const NumberField>& field);
    static NumberFieldElement from_rational(const std::shared_ptr<const NumberField>& field,
                                            const Rational& c);
    static NumberFieldElement from_coeffs(const std::shared_ptr<const NumberField>& field,
                                          std::vector<Rational> coeffs);

    const std::shared_ptr<const NumberField>& field() const { return field_; }
    // Always length n = deg f.
    const std::vector<Rational>& coeffs() const { return c_; }
    RationalPoly as_poly() const;

    NumberFieldElement operator+(const NumberFieldElement& o) const;
    NumberFieldElement operator-(const NumberFieldElement& o) const;
    NumberFieldElement operator*(const NumberFieldElement& o) const;
    NumberFieldElement operator-() const;
    // Throws DivisionByZeroError on zero; ReducibleModulusError (carrying
    // the discovered factor) when gcd(value, f) is a proper factor of f.
    NumberFieldElement inverse() const;
    NumberFieldElement pow(long k) const;

    bool is_zero() const;
    NumberFieldElement zero() const;
    NumberFieldElement one() const;

    bool operator==(const NumberFieldElement& o) const;
    bool operator!=(const NumberFieldElement& o) const { return !(*this == o); }

private:
    void require_same_field(const NumberFieldElement& o) const;

    std::shared_ptr<const NumberField> field_;
    std::vector<Rational> c_;
};

// The tower L = K[T]/(T^2 - d): a + b*T with d = u + lambda in the Legendre
// construction.  T stays formal; characteristic-zero computation never
// extracts a square root.
using TowerElement = QuadExt<NumberFieldElement>;

// Outcome of the one-sided mod-p test for "u + lambda is not a square in K".
struct SqrtBaseCheck {
    // True: a witness prime certifies u + lambda is NOT a square in K.
    // False: no witness found below the bound; status indeterminate.
    bool proven_not_square = false;
    std::optional<std::uint64_t> witness_prime;
};

// Searches primes p < prime_bound with X^n - X - 1 irreducible mod p and the
// image of u + lambda a non-square in F_{p^n}.  Finding one proves u + lambda
// is not a square in K (squares reduce to squares); exhausting the bound
// proves nothing and is reported as indeterminate.
SqrtBaseCheck sqrt_not_in_base_check(int n, const Rational& lambda,
                                     std::uint64_t prime_bound = 500);

}  // namespace legendre

#endif  // LEGENDRE_NUMBERFIELD_HPP
