// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_EXTFIELD_HPP
#define LEGENDRE_EXTFIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "legendre/primepoly.hpp"

namespace legendre {

// The field F_{p^e} = F_p[x]/(g) with g monic irreducible of degree e.
// Shared by every element as an immutable context.  e = 1 (g = x) gives the
// prime field itself, so one element type serves F_p and its extensions.
class ExtField {
public:
    // Validates that p is prime and g is monic irreducible (throws
    // InvalidParamError / ReducibleModulusError otherwise).
    static std::shared_ptr<const ExtField> make(std::uint64_t p, PrimePoly g);
    static std::shared_ptr<const ExtField> prime_field(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    int e() const { return g_.degree(); }
    const PrimePoly& g() const { return g_; }
    const mpz_class& q() const { return q_; }  // p^e

    bool operator==(const ExtField& o) const { return p_ == o.p_ && g_ == o.g_; }

private:
    ExtField(std::uint64_t p, PrimePoly g, mpz_class q)
        : p_(p), g_(std::move(g)), q_(std::move(q)) {}

    std::uint64_t p_;
    PrimePoly g_;
    mpz_class q_;
};

// Element of F_{p^e}: e residues, ascending powers of the generator x mod g.
class ExtFieldElement {
public:
    ExtFieldElement(std::shared_ptr<const ExtField> field, PrimePoly value);
    // The i-th power basis element, i.e. x^i mod g.
    static ExtFieldElement generator(const std::shared_ptr<const ExtField>& field);
    static ExtFieldElement from_int(const std::shared_ptr<const ExtField>& field,
                                    std::uint64_t c);

    const std::shared_ptr<const ExtField>& field() const { return field_; }
    const PrimePoly& value() const { return v_; }
    // Always length e, ascending powers, entries in [0, p).
    std::vector<std::uint64_t> coeff_vector() const;

    ExtFieldElement operator+(const ExtFieldElement& o) const;
    ExtFieldElement operator-(const ExtFieldElement& o) const;
    ExtFieldElement operator*(const ExtFieldElement& o) const;
    ExtFieldElement operator-() const;
    ExtFieldElement inverse() const;  // throws DivisionByZeroError on zero
    ExtFieldElement pow(const mpz_class& exp) const;

    bool is_zero() const { return v_.is_zero(); }
    ExtFieldElement zero() const;
    ExtFieldElement one() const;

    bool operator==(const ExtFieldElement& o) const;
    bool operator!=(const ExtFieldElement& o) const { return !(*this == o); }
    // Lexicographic on the length-e coefficient vector of integer
    // representatives; the canonical-square-root tie-break.
    bool lex_less(const ExtFieldElement& o) const;

private:
    void require_same_field(const ExtFieldElement& o) const;

    std::shared_ptr<const ExtField> field_;
    PrimePoly v_;
};

// Euler criterion: true iff x is zero or x^((q-1)/2) = 1.  Throws
// UnsupportedCharacteristicError for p = 2.
bool ff_is_square(const ExtFieldElement& x);

// Canonical square root: Tonelli-Shanks in F_{p^e} (with the q = 3 mod 4
// exponentiation shortcut), returning whichever of the two roots has the
// lexicographically smaller coefficient vector.  Throws NonResidueError on
// non-squares and UnsupportedCharacteristicError for p = 2.
ExtFieldElement ff_sqrt(const ExtFieldElement& x);

}  // namespace legendre

#endif  // LEGENDRE_EXTFIELD_HPP
