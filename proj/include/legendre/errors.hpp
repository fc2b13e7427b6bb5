// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_ERRORS_HPP
#define LEGENDRE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace legendre {

// Root of the library's error hierarchy.  Three broad families map onto the
// CLI exit-code contract: parameter errors (exit 2), verification failures
// (exit 1) and evidence-stage errors (exit 3).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- parameter / input errors -------------------------------------------

class InvalidParamError : public Error {
public:
    using Error::Error;
};

// Even n where an odd degree is required, or similar parity violations.
class ParityError : public InvalidParamError {
public:
    using InvalidParamError::InvalidParamError;
};

// lambda in {0,1} (or A=0, B=0, A=B): the cubic has a repeated root.
class SingularCurveError : public InvalidParamError {
public:
    using InvalidParamError::InvalidParamError;
};

// ---- arithmetic errors ---------------------------------------------------

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// Mixing elements of different quotient rings (e.g. K_3 with K_5, or
// quadratic extensions with different discriminants).
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

// Inversion failed because the modulus is reducible; the offending factor is
// carried along as a witness instead of a bare crash.
class ReducibleModulusError : public Error {
public:
    ReducibleModulusError(const std::string& what, std::string factor)
        : Error(what), factor_(std::move(factor)) {}
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

// Zero-norm element of a quadratic extension (signals d is a square, or x=0).
class NonInvertibleError : public Error {
public:
    using Error::Error;
};

// Square root requested of a quadratic non-residue.
class NonResidueError : public Error {
public:
    using Error::Error;
};

// Characteristic 2 (or 3) where odd characteristic is required.
class UnsupportedCharacteristicError : public Error {
public:
    using Error::Error;
};

// ---- curve / reduction errors -------------------------------------------

// A point fed to the group law does not satisfy the curve equation.
class NotOnCurveError : public Error {
public:
    using Error::Error;
};

// Reduction of the curve mod p is singular: p divides A, B or A-B.
class BadReductionError : public Error {
public:
    using Error::Error;
};

// A prime excluded from evidence (ramified for f, or otherwise ineligible).
class ExcludedPrimeError : public Error {
public:
    using Error::Error;
};

// point_order was handed an N with N*P != O.
class InconsistentOrderError : public Error {
public:
    using Error::Error;
};

// ---- evidence / tooling errors ------------------------------------------

// A work estimate exceeds the configured cap (e.g. the sieve's (2B+1)^n).
class BudgetError : public Error {
public:
    using Error::Error;
};

// No usable primes (or similar unusable configuration) for an evidence run.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Golden fixtures file missing, malformed, or failing its checksum.
class FixtureError : public Error {
public:
    using Error::Error;
};

}  // namespace legendre

#endif  // LEGENDRE_ERRORS_HPP
