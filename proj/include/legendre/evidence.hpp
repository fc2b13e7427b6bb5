// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_EVIDENCE_HPP
#define LEGENDRE_EVIDENCE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legendre/construct.hpp"
#include "legendre/curvecount.hpp"
#include "legendre/ffactor.hpp"

namespace legendre {

// ---------------------------------------------------------------------------
// Galois evidence for x^n - x - 1 via factorization types mod p.
//
// Frobenius at an unramified p acts on the roots with cycle type equal to the
// degree multiset of the factorization mod p.  By a classical criterion of
// Jordan, a transitive subgroup of S_n containing a transposition and a
// q-cycle for some prime q > n/2 must be all of S_n; transitivity holds
// because the trinomial is irreducible over Q (Selmer).

struct GaloisSample {
    std::uint64_t p = 0;
    // Degree multiset of the factorization mod p; empty optional = ramified
    // (repeated factor), excluded from the Frobenius argument.
    std::optional<CycleType> type;
};

struct GaloisEvidence {
    int n = 0;
    int prime_budget = 0;
    std::vector<GaloisSample> samples;
    bool has_n_cycle = false;
    // A type with exactly one part equal to 2 and every other part odd: an
    // odd power of such a permutation is a transposition.
    bool has_transposition_type = false;
    // A type containing a prime part q with 2q > n: the corresponding power
    // is a q-cycle of the kind Jordan's criterion needs.
    bool has_long_prime_cycle = false;
    std::string verdict;  // "S_n-certified-by-Jordan" or "inconclusive"
};

// Examines the first prime_budget primes 2, 3, 5, ... in order (no early
// exit), recording the cycle type or ramification of each.
GaloisEvidence galois_evidence(int n, int prime_budget = 200, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Rational torsion bound for Y^2 = X(X+A)(X+B) by reduction.

struct TorsionWitness {
    std::uint64_t p = 0;
    int e = 0;
    mpz_class q;      // p^e
    mpz_class order;  // #E(F_q)
};

struct TorsionBoundResult {
    long A = 0, B = 0;
    std::vector<TorsionWitness> witnesses;
    // gcd of the witnessed orders; torsion injects into each good odd
    // reduction, so its order divides the bound.  The four 2-torsion points
    // {O, (0,0), (-A,0), (-B,0)} show the bound is attained when it is 4.
    mpz_class bound;
};

// Uses the first prime_budget good primes p > 3 (p not dividing A*B*(A-B)),
// with group orders over F_{p^e} for each listed exponent e.
TorsionBoundResult torsion_bound(long A, long B, int prime_budget = 5,
                                 const std::vector<int>& exponents = {1, 2});

// ---------------------------------------------------------------------------
// Torsion bound over the tower L = K(sqrt(u+lambda)), K = Q[X]/(x^n - x - 1).

struct TowerBoundPart {
    std::uint64_t q = 0;
    int eprime = 0;  // residue degree of the tower at q: n, or 2n if u+lambda
                     // is a non-square in F_{q^n}
    mpz_class order;  // #E(F_{q^eprime})
};

struct TowerTorsionBound {
    mpz_class m;  // gcd of the part orders: torsion of E(L) has order dividing m
    std::vector<TowerBoundPart> parts;
};

// Collects prime_count primes q > 5 with x^n - x - 1 irreducible mod q, good
// reduction, and u + lambda nonzero in F_{q^n}.  At such q every prime of L
// above q has residue degree n or 2n (decided by the square class of
// u + lambda), and torsion injects order-preserved into E over the residue
// field, so the gcd of those group orders bounds the torsion order.
TowerTorsionBound tower_torsion_bound(int n, const Rational& lambda, int prime_count = 3,
                                      std::uint64_t count_bound = 10000);

// ---------------------------------------------------------------------------
// Non-torsion certificates for the constructed point.

struct NonTorsionWitness {
    std::uint64_t p = 0;
    int root_index = 0;
    int factor_degree = 0;  // degree of the chosen factor of x^n - x - 1 mod p
    int field_degree = 0;   // degree of the field containing the point image
    bool sqrt_in_base = false;
    mpz_class group_order;  // #E over that field
    mpz_class image_order;  // exact order of the reduced point
    bool reverified = false;
};

struct NonTorsionProof {
    int n = 0;
    Rational lambda;
    std::vector<NonTorsionWitness> witnesses;
    // "orders-differ": the two image orders disagree, impossible for a
    //   torsion point since reduction preserves torsion orders at good odd
    //   unramified primes.
    // "order-exceeds-bound": both image orders exceed the tower torsion
    //   bound m.
    std::string rule;
    std::optional<mpz_class> bound_m;
    bool proven = false;
    std::string verdict;  // "nontorsion-proven" or "inconclusive"
};

// Reduces the constructed point at two primes p1 != p2 (both > 5, good and
// unramified for the tower) and compares exact image orders.
NonTorsionProof prove_nontorsion(int n, const Rational& lambda, std::uint64_t p1,
                                 std::uint64_t p2, std::uint64_t seed = 0);

// First two primes > 5 usable by prove_nontorsion for these parameters.
std::pair<std::uint64_t, std::uint64_t> default_nontorsion_primes(int n, const Rational& lambda);

// ---------------------------------------------------------------------------
// Relation sieve among the Frobenius-conjugate points.

struct SieveScanResult {
    std::uint64_t visited = 0;    // nonzero exponent vectors examined
    std::uint64_t group_ops = 0;  // curve additions spent stepping
    std::vector<std::vector<int>> flagged;
};

// Enumerates every exponent vector (a_1..a_k) in [-B, B]^k minus the zero
// vector by an odometer walk, maintaining S = sum a_i * (m * P_i)
// incrementally, and flags vectors with S = O.  S = O iff m * sum(a_i P_i)
// = O, i.e. iff sum(a_i P_i) lies in the subgroup killed by m; with m a
// torsion bound this is exactly "sum(a_i P_i) is torsion", so a clean scan
// rules out every relation with max |a_i| <= B.  Throws BudgetError when
// (2B+1)^k exceeds work_cap.
template <FieldElement F>
SieveScanResult sieve_scan(const CurveParams<F>& params,
                           const std::vector<CurvePoint<F>>& pts, const mpz_class& m, int B,
                           std::uint64_t work_cap) {
    if (B < 1) throw InvalidParamError("sieve_scan: bound B must be >= 1");
    if (sgn(m) <= 0) throw InvalidParamError("sieve_scan: multiplier m must be positive");
    const std::size_t k = pts.size();
    if (k == 0) throw InvalidParamError("sieve_scan: need at least one point");

    mpz_class total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 2 * B + 1;
    if (total > mpz_class(static_cast<unsigned long>(work_cap)))
        throw BudgetError("sieve_scan: (2B+1)^k exceeds the work cap");

    std::vector<CurvePoint<F>> Q, R;
    Q.reserve(k);
    R.reserve(k);
    for (const auto& P : pts) {
        if (!on_curve(params, P)) throw NotOnCurveError("sieve_scan: point not on curve");
        Q.push_back(scalar_mul(params, m, P));
        R.push_back(scalar_mul(params, mpz_class(2 * B), Q.back()));
    }

    SieveScanResult out;
    std::vector<int> e(k, -B);
    CurvePoint<F> S = CurvePoint<F>::infinity();
    for (const auto& Qi : Q) {
        S = add(params, S, scalar_mul(params, mpz_class(-B), Qi));
        out.group_ops += 1;
    }
    const std::uint64_t states = total.get_ui();
    for (std::uint64_t step = 0;; ++step) {
        const bool all_zero = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
        if (!all_zero) {
            out.visited += 1;
            if (S.is_infinity()) out.flagged.push_back(e);
        }
        if (step + 1 == states) break;
        // Odometer increment with incremental S updates.
        std::size_t j = 0;
        while (true) {
            if (e[j] < B) {
                e[j] += 1;
                S = detail::add_unchecked(params, S, Q[j]);
                out.group_ops += 1;
                break;
            }
            e[j] = -B;
            S = detail::add_unchecked(params, S, curve_negate(R[j]));
            out.group_ops += 1;
            ++j;
        }
    }
    return out;
}

struct SieveOutcome {
    std::uint64_t p = 0;
    int B = 0;
    mpz_class m;
    bool sqrt_in_base = false;
    int num_points = 0;
    std::uint64_t visited = 0;
    std::uint64_t group_ops = 0;
    std::vector<std::vector<int>> flagged;
    std::string result;  // "no-small-relation" or "flagged"
};

// Scans all integer combinations sum(a_i * conj_i(P)) with |a_i| <= B of the
// n Frobenius conjugates of the constructed point reduced mod p, testing
// m * combination = O.  Requires x^n - x - 1 irreducible mod p (so the
// conjugates are the full Galois orbit), p > 5, good reduction, and
// u + lambda nonzero in the residue field.
SieveOutcome relation_sieve(int n, const Rational& lambda, std::uint64_t p, int B,
                            const mpz_class& m, std::uint64_t work_cap = 50000000,
                            std::uint64_t seed = 0);

struct SievePipeline {
    int n = 0;
    Rational lambda;
    int B = 0;
    TowerTorsionBound bound;
    std::vector<SieveOutcome> attempts;
    // True when some attempt came back clean.  A flagged attempt at one prime
    // only shows the reduction has a relation (e.g. an all-torsion reduction);
    // a clean scan at any single prime rules the global relation out, because
    // a global relation would reduce to a relation at every good prime.
    bool certified = false;
};

// Derives m from tower_torsion_bound, then tries eligible primes in
// ascending order until a scan comes back clean (or max_attempts is spent).
SievePipeline relation_sieve_auto(int n, const Rational& lambda, int B = 2,
                                  std::uint64_t work_cap = 50000000, std::uint64_t seed = 0,
                                  int max_attempts = 3);

}  // namespace legendre

#endif  // LEGENDRE_EVIDENCE_HPP
