// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_PRIMEPOLY_HPP
#define LEGENDRE_PRIMEPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "legendre/errors.hpp"

namespace legendre {

// Univariate polynomial over F_p, coefficients ascending by power and always
// reduced into [0, p).  The zero polynomial is the empty sequence.
class PrimePoly {
public:
    explicit PrimePoly(std::uint64_t p) : p_(p) { check_modulus(); }
    PrimePoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static PrimePoly constant(std::uint64_t p, std::uint64_t c);
    static PrimePoly monomial(std::uint64_t p, std::size_t k, std::uint64_t c);
    static PrimePoly x(std::uint64_t p) { return monomial(p, 1, 1); }
    // Reduction of a rational polynomial: denominators must be prime to p.
    static PrimePoly reduce(const class RationalPoly& f, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    PrimePoly operator+(const PrimePoly& o) const;
    PrimePoly operator-(const PrimePoly& o) const;
    PrimePoly operator*(const PrimePoly& o) const;
    PrimePoly operator-() const;
    PrimePoly scaled(std::uint64_t c) const;
    bool operator==(const PrimePoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const PrimePoly& o) const { return !(*this == o); }

    // Canonical ordering used wherever factor lists must be reproducible:
    // by degree, then coefficient vectors compared from the constant term up.
    bool operator<(const PrimePoly& o) const;

    std::uint64_t eval(std::uint64_t x) const;
    PrimePoly derivative() const;
    PrimePoly monic() const;  // throws DivisionByZeroError on zero poly

private:
    void check_modulus() const {
        if (p_ < 2) throw InvalidParamError("PrimePoly modulus must be at least 2");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

// Euclidean division over F_p.  Throws DivisionByZeroError if q = 0.
std::pair<PrimePoly, PrimePoly> pp_divmod(const PrimePoly& p, const PrimePoly& q);

// Monic gcd; gcd(0, 0) = 0 by convention here (callers in the factorization
// pipeline rely on it).
PrimePoly pp_gcd(PrimePoly a, PrimePoly b);

// base^exp mod f, with an arbitrary-precision exponent (needed for Frobenius
// powers p^e and Euler exponents (q-1)/2 at large q).
PrimePoly pp_powmod(const PrimePoly& base, const mpz_class& exp, const PrimePoly& f);

// Inverse of a mod f.  Throws DivisionByZeroError when a = 0 mod f, and
// ReducibleModulusError (carrying the discovered factor) when a proper
// common factor of a and f turns up, i.e. when f is not irreducible.
PrimePoly pp_invmod(const PrimePoly& a, const PrimePoly& f);

}  // namespace legendre

#endif  // LEGENDRE_PRIMEPOLY_HPP
