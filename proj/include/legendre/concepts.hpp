// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_CONCEPTS_HPP
#define LEGENDRE_CONCEPTS_HPP

#include <concepts>

namespace legendre {

// The field contract shared by exact rationals, number-field towers and
// finite fields.  Distinguished constants are instance methods because most
// implementations carry a runtime context (a modulus, a discriminant) that a
// static factory could not know.  inverse() must fail loudly (an exception,
// never undefined behavior) so the curve group law can propagate meaningful
// errors such as a zero norm in a quadratic extension.
template <typename F>
concept FieldElement = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.inverse() } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero() } -> std::convertible_to<F>;
    { a.one() } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
};

}  // namespace legendre

#endif  // LEGENDRE_CONCEPTS_HPP
