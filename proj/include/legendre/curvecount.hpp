// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_CURVECOUNT_HPP
#define LEGENDRE_CURVECOUNT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "legendre/extfield.hpp"

namespace legendre {

// Frobenius trace a1 = p + 1 - #E(F_p) together with the group order over
// the degree-e extension, derived from the trace recurrence
//   s_0 = 2,  s_1 = a1,  s_e = a1*s_{e-1} - p*s_{e-2},  N_e = p^e + 1 - s_e.
struct TraceOrder {
    std::int64_t a1 = 0;
    mpz_class Ne;
};

// Exhaustive point count of Y^2 = X(X+A)(X+B) over F_p followed by the trace
// recurrence.  a_res/b_res are residues mod p.  Preconditions: p prime, p > 3,
// p within the exhaustive-count bound, nonsingular reduction.
TraceOrder trace_and_order(std::uint64_t a_res, std::uint64_t b_res, std::uint64_t p, int e,
                           std::uint64_t count_bound = 10000);

// Group order sequence N_1..N_emax from a single exhaustive count.
std::vector<mpz_class> order_sequence(std::uint64_t a_res, std::uint64_t b_res, std::uint64_t p,
                                      int emax, std::uint64_t count_bound = 10000);

// Literal enumeration of #E over an extension field (test oracle for the
// recurrence); q = p^e must stay within count_bound.
mpz_class exhaustive_count_ext(std::uint64_t a_res, std::uint64_t b_res,
                               const std::shared_ptr<const ExtField>& field,
                               std::uint64_t count_bound = 10000);

// Prime factorization of a group-order-sized integer as (prime, multiplicity)
// pairs, sorted ascending.  Values must fit in 64 bits.
std::vector<std::pair<mpz_class, int>> factorize_order(const mpz_class& N);

}  // namespace legendre

#endif  // LEGENDRE_CURVECOUNT_HPP
