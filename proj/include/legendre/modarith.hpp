// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_MODARITH_HPP
#define LEGENDRE_MODARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>

namespace legendre {

// Modular arithmetic on uint64_t with 128-bit intermediates.  The moduli in
// this project are small primes, but all routines are correct for any
// modulus below 2^63.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    const std::uint64_t s = a + b;
    return s >= m || s < a ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t negmod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, const mpz_class& exp, std::uint64_t m);

// Inverse mod m; throws DivisionByZeroError when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

// Prime factorization by trial division plus Pollard's rho; exact for all
// 64-bit inputs.  Returns prime -> multiplicity in increasing prime order.
std::map<std::uint64_t, int> factorize(std::uint64_t n);

}  // namespace legendre

#endif  // LEGENDRE_MODARITH_HPP
