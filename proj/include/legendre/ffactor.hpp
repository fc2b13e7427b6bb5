// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_FFACTOR_HPP
#define LEGENDRE_FFACTOR_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "legendre/primepoly.hpp"

namespace legendre {

// Frobenius cycle data: the multiset of irreducible-factor degrees of a
// squarefree reduction, sorted descending in canonical form.
struct CycleType {
    std::vector<int> degrees;

    bool operator==(const CycleType& o) const { return degrees == o.degrees; }
};

// Full factorization over F_p: squarefree decomposition, then
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
// (seeded, so runs are reproducible).  For p = 2 the equal-degree step is an
// exhaustive sweep over the finitely many monic candidates instead of the
// randomized split.  Factors come back monic and irreducible, sorted by
// (degree, coefficients), with their multiplicities; the input equals the
// leading coefficient times the product of factor^multiplicity.
std::vector<std::pair<PrimePoly, int>> ff_factor(const PrimePoly& f, std::uint64_t seed = 0);

// Rabin irreducibility test (x^(p^n) = x mod f plus proper-divisor checks).
bool pp_is_irreducible(const PrimePoly& f);

// Cycle type of X^n - X - 1 at p: factor degrees if the reduction is
// squarefree, std::nullopt when p is ramified (repeated factor).
std::optional<CycleType> cycle_type(int n, std::uint64_t p, std::uint64_t seed = 0);

}  // namespace legendre

#endif  // LEGENDRE_FFACTOR_HPP
