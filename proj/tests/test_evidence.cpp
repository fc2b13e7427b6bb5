// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <random>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/errors.hpp"
#include "legendre/evidence.hpp"
#include "legendre/extfield.hpp"

using namespace legendre;

TEST_CASE("Galois evidence: cycle types at small primes for n = 5") {
    const auto ev = galois_evidence(5, 25);
    CHECK(ev.n == 5);
    CHECK(ev.prime_budget == 25);
    REQUIRE(ev.samples.size() == 25);
    // First primes in order, no early exit.
    CHECK(ev.samples[0].p == 2);
    CHECK(ev.samples[1].p == 3);
    CHECK(ev.samples[24].p == 97);
    // x^5 - x - 1 = (x^2 + x + 1)(x^3 + x^2 + 1) mod 2: type [3, 2].
    REQUIRE(ev.samples[0].type.has_value());
    CHECK(ev.samples[0].type->degrees == std::vector<int>{3, 2});
    // Ramified primes 19 and 151 of that trinomial: 19 is the 8th prime.
    CHECK(ev.samples[7].p == 19);
    CHECK_FALSE(ev.samples[7].type.has_value());
    // [3,2] contains a prime part 3 with 2*3 > 5 and the lone even part 2,
    // so this single sample supplies both Jordan ingredients.
    CHECK(ev.has_transposition_type);
    CHECK(ev.has_long_prime_cycle);
    CHECK(ev.has_n_cycle);
    CHECK(ev.verdict == "S_n-certified-by-Jordan");
}

TEST_CASE("Galois evidence: ramified prime for n = 3 is recorded, not fatal") {
    const auto ev = galois_evidence(3, 9);
    REQUIRE(ev.samples.size() == 9);
    // disc(x^3 - x - 1) = -23; the 9th prime is 23.
    CHECK(ev.samples[8].p == 23);
    CHECK_FALSE(ev.samples[8].type.has_value());
    for (std::size_t i = 0; i + 1 < ev.samples.size(); ++i)
        CHECK(ev.samples[i].type.has_value());
    // x^3 - x - 1 irreducible mod 2 gives the 3-cycle, [2,1] at p = 7 the
    // transposition, and q = 3 > 3/2 the long prime cycle.
    CHECK(ev.verdict == "S_n-certified-by-Jordan");
}

TEST_CASE("Galois evidence: insufficient budget stays inconclusive") {
    // With only p = 2 examined for n = 3 the type list is {[3]}: no
    // transposition witness yet.
    const auto ev = galois_evidence(3, 1);
    REQUIRE(ev.samples.size() == 1);
    CHECK(ev.has_n_cycle);
    CHECK_FALSE(ev.has_transposition_type);
    CHECK(ev.verdict == "inconclusive");
    CHECK_THROWS_AS(galois_evidence(1, 10), InvalidParamError);
    CHECK_THROWS_AS(galois_evidence(5, 0), ConfigurationError);
}

TEST_CASE("rational torsion bound for the running curves is exactly 4") {
    for (long B : {5L, 7L}) {
        CAPTURE(B);
        const auto r = torsion_bound(1, B);
        CHECK(r.A == 1);
        CHECK(r.B == B);
        // 5 primes x exponents {1, 2}.
        CHECK(r.witnesses.size() == 10);
        CHECK(r.bound == 4);
        for (const auto& w : r.witnesses) {
            CHECK(w.p > 3);
            CHECK(w.order % 4 == 0);  // the four 2-torsion points survive
        }
    }
    // First good prime for (A, B) = (1, 5) is 7 = first prime > 3 not
    // dividing A*B*(A-B) = 20.
    const auto r5 = torsion_bound(1, 5);
    CHECK(r5.witnesses[0].p == 7);
    CHECK(r5.witnesses[0].e == 1);
    CHECK(r5.witnesses[0].order == 4);
    CHECK_THROWS_AS(torsion_bound(0, 5), SingularCurveError);
    CHECK_THROWS_AS(torsion_bound(1, 1), SingularCurveError);
    CHECK_THROWS_AS(torsion_bound(1, 5, 0), ConfigurationError);
    CHECK_THROWS_AS(torsion_bound(1, 5, 5, std::vector<int>{}), InvalidParamError);
}

TEST_CASE("tower torsion bound: m = 8 for (n, lambda) = (3, 5)") {
    const auto tb = tower_torsion_bound(3, Rational(5), 3);
    CHECK(tb.m == 8);
    REQUIRE(tb.parts.size() == 3);
    CHECK(tb.parts[0].q == 13);
    CHECK(tb.parts[1].q == 29);
    CHECK(tb.parts[2].q == 31);
    for (const auto& part : tb.parts) {
        CHECK(part.eprime == 3);  // u + 5 is a square in all three F_{q^3}
        CHECK(part.order % tb.m == 0);
    }
}

TEST_CASE("tower torsion bound: m = 4 for (n, lambda) = (7, 5)") {
    const auto tb = tower_torsion_bound(7, Rational(5), 3);
    CHECK(tb.m == 4);
    REQUIRE(tb.parts.size() == 3);
    // x^7 - x - 1 is irreducible mod q only for q = 7 (excluded: q must
    // exceed 5 but 7 qualifies), 199, 239 in this range.
    CHECK(tb.parts[0].q == 7);
    CHECK(tb.parts[0].eprime == 7);    // u + 5 is a square in F_{7^7}
    CHECK(tb.parts[1].q == 199);
    CHECK(tb.parts[1].eprime == 14);   // non-square: pass to the quadratic ext
    CHECK(tb.parts[2].q == 239);
    CHECK(tb.parts[2].eprime == 14);
    CHECK_THROWS_AS(tower_torsion_bound(4, Rational(5)), InvalidParamError);
    CHECK_THROWS_AS(tower_torsion_bound(3, Rational(5), 0), ConfigurationError);
}

TEST_CASE("non-torsion proof by incompatible reduction orders: (3, 5)") {
    const auto proof = prove_nontorsion(3, Rational(5), 7, 13);
    CHECK(proof.n == 3);
    CHECK(proof.proven);
    CHECK(proof.rule == "orders-differ");
    CHECK(proof.verdict == "nontorsion-proven");
    REQUIRE(proof.witnesses.size() == 2);

    const auto& w7 = proof.witnesses[0];
    CHECK(w7.p == 7);
    CHECK(w7.factor_degree == 1);
    CHECK(w7.field_degree == 2);      // sqrt(u + 5) needs F_49
    CHECK_FALSE(w7.sqrt_in_base);
    CHECK(w7.group_order == 48);
    CHECK(w7.image_order == 3);
    CHECK(w7.reverified);

    const auto& w13 = proof.witnesses[1];
    CHECK(w13.p == 13);
    CHECK(w13.factor_degree == 3);
    CHECK(w13.field_degree == 3);     // sqrt already in F_13^3
    CHECK(w13.sqrt_in_base);
    CHECK(w13.group_order == 2128);
    CHECK(w13.image_order == 532);
    CHECK(w13.reverified);

    // A torsion point of order N would reduce to points of order exactly N
    // at every good odd prime; 3 != 532 rules that out.
    CHECK(w7.image_order != w13.image_order);
}

TEST_CASE("non-torsion proof for (5, 7) at the default primes") {
    const auto primes = default_nontorsion_primes(5, Rational(7));
    CHECK(primes.first == 11);   // p = 7 is skipped: lambda = 0 mod 7
    CHECK(primes.second == 13);
    const auto proof = prove_nontorsion(5, Rational(7), primes.first, primes.second);
    CHECK(proof.proven);
    CHECK(proof.rule == "orders-differ");
    REQUIRE(proof.witnesses.size() == 2);
    CHECK(proof.witnesses[0].image_order == 20141);
    CHECK(proof.witnesses[1].image_order == 93122);
}

TEST_CASE("default prime selection skips degenerate residue data") {
    // For (3, 5): p = 11 has x^3 - x - 1 with root 6 = -5 mod 11, so the
    // first residue field would put u + 5 = 0 (a 2-torsion x); it is skipped
    // and the pair is (7, 13).
    const auto primes = default_nontorsion_primes(3, Rational(5));
    CHECK(primes.first == 7);
    CHECK(primes.second == 13);
}

TEST_CASE("prove_nontorsion rejects bad prime choices") {
    CHECK_THROWS_AS(prove_nontorsion(3, Rational(5), 5, 13), ExcludedPrimeError);
    CHECK_THROWS_AS(prove_nontorsion(3, Rational(5), 7, 7), InvalidParamError);
    // 23 is ramified for n = 3.
    CHECK_THROWS_AS(prove_nontorsion(3, Rational(5), 23, 13), ExcludedPrimeError);
    // p = 11 makes u + 5 vanish in the first residue field.
    CHECK_THROWS_AS(prove_nontorsion(3, Rational(5), 11, 13), ExcludedPrimeError);
}

TEST_CASE("sieve_scan flags exactly the planted relations") {
    const auto F = ExtField::prime_field(13);
    using FP = ExtFieldElement;
    const CurveParams<FP> params(FP::from_int(F, 1), FP::from_int(F, 5));

    // Collect the group once.
    std::vector<CurvePoint<FP>> all;
    for (std::uint64_t xi = 0; xi < 13; ++xi) {
        const FP x = FP::from_int(F, xi);
        const FP rhs = x * (x + params.A) * (x + params.B);
        for (std::uint64_t yi = 0; yi < 13; ++yi) {
            const FP y = FP::from_int(F, yi);
            if (y * y == rhs) all.push_back(CurvePoint<FP>::affine(x, y));
        }
    }
    REQUIRE(all.size() >= 7);

    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const int B = 2;
    const std::size_t k = 3;
    int planted_found = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // Random target vector with an invertible pivot coefficient.
        std::uniform_int_distribution<int> coeff(-B, B);
        std::vector<int> a(k);
        for (auto& v : a) v = coeff(rng);
        const std::size_t j = trial % k;
        a[j] = (trial % 2 == 0) ? 1 : -1;

        // Random points, then solve for P_j so sum a_i P_i = O.
        std::vector<CurvePoint<FP>> pts(k, CurvePoint<FP>::infinity());
        CurvePoint<FP> rest = CurvePoint<FP>::infinity();
        for (std::size_t i = 0; i < k; ++i) {
            if (i == j) continue;
            pts[i] = all[pick(rng)];
            rest = add(params, rest, scalar_mul(params, mpz_class(a[i]), pts[i]));
        }
        pts[j] = scalar_mul(params, mpz_class(-a[j]), rest);  // a_j in {1, -1}

        const auto scan = sieve_scan(params, pts, mpz_class(1), B, 100000);
        CHECK(scan.visited == 124);  // 5^3 - 1
        // The planted vector must be flagged...
        bool found = false;
        for (const auto& f : scan.flagged)
            if (f == a) found = true;
        CHECK(found);
        planted_found += found ? 1 : 0;
        // ...and everything flagged must genuinely sum to O.
        for (const auto& f : scan.flagged) {
            CurvePoint<FP> S = CurvePoint<FP>::infinity();
            for (std::size_t i = 0; i < k; ++i)
                S = add(params, S, scalar_mul(params, mpz_class(f[i]), pts[i]));
            CHECK(S.is_infinity());
        }
    }
    CHECK(planted_found == 100);
}

TEST_CASE("sieve_scan parameter validation") {
    const auto F = ExtField::prime_field(13);
    using FP = ExtFieldElement;
    const CurveParams<FP> params(FP::from_int(F, 1), FP::from_int(F, 5));
    const std::vector<CurvePoint<FP>> pts{CurvePoint<FP>::infinity()};
    CHECK_THROWS_AS(sieve_scan(params, pts, mpz_class(1), 0, 1000), InvalidParamError);
    CHECK_THROWS_AS(sieve_scan(params, pts, mpz_class(0), 1, 1000), InvalidParamError);
    CHECK_THROWS_AS(sieve_scan(params, {}, mpz_class(1), 1, 1000), InvalidParamError);
    // (2*4+1)^1 = 9 > 8.
    CHECK_THROWS_AS(sieve_scan(params, pts, mpz_class(1), 4, 8), BudgetError);
    const auto bogus = CurvePoint<FP>::affine(FP::from_int(F, 2), FP::from_int(F, 1));
    CHECK_THROWS_AS(
        sieve_scan(params, std::vector<CurvePoint<FP>>{bogus}, mpz_class(1), 1, 1000),
        NotOnCurveError);
}

TEST_CASE("relation sieve at a clean prime certifies no small relation") {
    const auto out = relation_sieve(3, Rational(5), 31, 2, mpz_class(8));
    CHECK(out.p == 31);
    CHECK(out.B == 2);
    CHECK(out.m == 8);
    CHECK(out.num_points == 3);
    CHECK(out.visited == 124);
    CHECK(out.flagged.empty());
    CHECK(out.result == "no-small-relation");
}

TEST_CASE("relation sieve at p = 13 flags the all-equal torsion pattern") {
    const auto out = relation_sieve(3, Rational(5), 13, 2, mpz_class(8));
    CHECK(out.result == "flagged");
    REQUIRE(out.flagged.size() == 4);
    CHECK(out.flagged[0] == std::vector<int>{-2, 2, -2});
    CHECK(out.flagged[1] == std::vector<int>{-1, 1, -1});
    CHECK(out.flagged[2] == std::vector<int>{1, -1, 1});
    CHECK(out.flagged[3] == std::vector<int>{2, -2, 2});
    // Flagged vectors come in +- pairs (the scan region is symmetric).
}

TEST_CASE("relation sieve input validation") {
    CHECK_THROWS_AS(relation_sieve(4, Rational(5), 31, 2, mpz_class(8)),
                    InvalidParamError);
    CHECK_THROWS_AS(relation_sieve(3, Rational(5), 31, 0, mpz_class(8)),
                    InvalidParamError);
    CHECK_THROWS_AS(relation_sieve(3, Rational(5), 31, 2, mpz_class(0)),
                    InvalidParamError);
    CHECK_THROWS_AS(relation_sieve(3, Rational(5), 5, 2, mpz_class(8)),
                    ExcludedPrimeError);
    CHECK_THROWS_AS(relation_sieve(3, Rational(5), 12, 2, mpz_class(8)),
                    ExcludedPrimeError);
    // x^3 - x - 1 is reducible mod 7: conjugates are not a Galois orbit.
    CHECK_THROWS_AS(relation_sieve(3, Rational(5), 7, 2, mpz_class(8)),
                    ExcludedPrimeError);
    // lambda = 0 mod 5... 5 < 7 is already excluded; use 31 with lambda 31.
    CHECK_THROWS_AS(relation_sieve(3, Rational(31), 31, 2, mpz_class(8)),
                    BadReductionError);
    // Work cap.
    CHECK_THROWS_AS(relation_sieve(3, Rational(5), 31, 2, mpz_class(8), 10),
                    BudgetError);
}

TEST_CASE("automatic sieve pipeline walks primes until a clean scan") {
    const auto pipe = relation_sieve_auto(3, Rational(5), 2);
    CHECK(pipe.n == 3);
    CHECK(pipe.B == 2);
    CHECK(pipe.bound.m == 8);
    CHECK(pipe.certified);
    REQUIRE(pipe.attempts.size() == 3);
    // 7 and 11 are ineligible (reducible / u+5 vanishing); 13 and 29 carry
    // reduction-level relations; 31 comes back clean.
    CHECK(pipe.attempts[0].p == 13);
    CHECK(pipe.attempts[0].result == "flagged");
    CHECK(pipe.attempts[1].p == 29);
    CHECK(pipe.attempts[1].result == "flagged");
    CHECK(pipe.attempts[2].p == 31);
    CHECK(pipe.attempts[2].result == "no-small-relation");
}
