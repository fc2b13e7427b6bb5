// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "legendre/errors.hpp"
#include "legendre/primepoly.hpp"
#include "legendre/ratpoly.hpp"

using namespace legendre;

namespace {

PrimePoly random_pp(std::mt19937_64& rng, std::uint64_t p, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint64_t> cf(0, p - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = cf(rng);
    return PrimePoly(p, std::move(c));
}

}  // namespace

TEST_CASE("construction reduces coefficients and trims") {
    const PrimePoly f(7, {10, 7, 14, 3});
    CHECK(f.coeffs() == std::vector<std::uint64_t>{3, 0, 0, 3});
    CHECK(f.degree() == 3);
    const PrimePoly z(5, {10, 15, 20});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK_THROWS_AS(PrimePoly(1), InvalidParamError);
    CHECK(PrimePoly::x(5) == PrimePoly(5, {0, 1}));
}

TEST_CASE("reduce handles rational coefficients via modular inverses") {
    // (1/2)x + 3 mod 7: 1/2 = 4 since 2*4 = 8 = 1.
    RationalPoly f = RationalPoly::monomial(1, Rational(1, 2)) +
                     RationalPoly::constant(Rational(3));
    const PrimePoly g = PrimePoly::reduce(f, 7);
    CHECK(g == PrimePoly(7, {3, 4}));

    // Negative coefficients land in [0, p).
    const PrimePoly h = PrimePoly::reduce(trinomial(3, Rational(1), Rational(1)), 5);
    CHECK(h == PrimePoly(5, {4, 4, 0, 1}));

    // Denominator divisible by p is rejected.
    RationalPoly bad = RationalPoly::monomial(2, Rational(1, 7));
    CHECK_THROWS_AS(PrimePoly::reduce(bad, 7), ExcludedPrimeError);
}

TEST_CASE("ring laws and division invariant over several primes") {
    std::mt19937_64 rng(5150);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL, 10007ULL}) {
        for (int i = 0; i < 80; ++i) {
            const PrimePoly a = random_pp(rng, p, 6), b = random_pp(rng, p, 6),
                            c = random_pp(rng, p, 4);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == PrimePoly(p));
            CHECK(-(-a) == a);
            PrimePoly d = random_pp(rng, p, 4);
            if (d.is_zero()) d = PrimePoly::x(p);
            const auto [q, r] = pp_divmod(a, d);
            CHECK(a == q * d + r);
            CHECK(r.degree() < d.degree());
        }
        CHECK_THROWS_AS(pp_divmod(PrimePoly::x(p), PrimePoly(p)), DivisionByZeroError);
    }
}

TEST_CASE("gcd is monic and divides both inputs") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 150; ++i) {
        const std::uint64_t p = 11;
        const PrimePoly common = random_pp(rng, p, 3);
        const PrimePoly a = common * random_pp(rng, p, 3);
        const PrimePoly b = common * random_pp(rng, p, 3);
        const PrimePoly g = pp_gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(g.is_monic());
        if (!common.is_zero() && !a.is_zero() && !b.is_zero())
            CHECK(g.degree() >= common.degree());
        if (!a.is_zero()) CHECK(pp_divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(pp_divmod(b, g).second.is_zero());
    }
    CHECK(pp_gcd(PrimePoly(7), PrimePoly(7)).is_zero());
}

TEST_CASE("powmod matches square-and-multiply against naive power") {
    const std::uint64_t p = 13;
    const PrimePoly f(p, {2, 0, 0, 1});  // x^3 + 2, any nonzero modulus works
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const PrimePoly a = random_pp(rng, p, 2);
        PrimePoly naive = PrimePoly::constant(p, 1);
        for (int e = 0; e <= 20; ++e) {
            CHECK(pp_powmod(a, mpz_class(e), f) == pp_divmod(naive, f).second);
            naive = naive * a;
        }
    }
    // Fermat for the quotient ring F_p[x]/(irreducible cubic): a^(p^3) = a.
    // x^3 - x - 1 is irreducible mod 13 (no roots, and no quadratic factor
    // since a cubic without roots is irreducible).
    const PrimePoly irr(13, {12, 12, 0, 1});
    mpz_class q = 13 * 13 * 13;
    for (int i = 0; i < 30; ++i) {
        const PrimePoly a = random_pp(rng, 13, 2);
        CHECK(pp_powmod(a, q, irr) == pp_divmod(a, irr).second);
    }
}

TEST_CASE("invmod round-trips and reports reducible moduli with a witness") {
    const PrimePoly irr(13, {12, 12, 0, 1});  // x^3 - x - 1, irreducible mod 13
    std::mt19937_64 rng(271828);
    for (int i = 0; i < 100; ++i) {
        PrimePoly a = random_pp(rng, 13, 2);
        if (a.is_zero()) continue;
        const PrimePoly inv = pp_invmod(a, irr);
        CHECK(pp_divmod(a * inv, irr).second == PrimePoly::constant(13, 1));
    }
    CHECK_THROWS_AS(pp_invmod(PrimePoly(13), irr), DivisionByZeroError);

    // x^2 - 1 = (x-1)(x+1) mod 5: inverting x - 1 must surface a factor.
    // gcd(x + 4, x^2 - 1) = x + 4, reported as its coefficient list.
    const PrimePoly red(5, {4, 0, 1});
    const PrimePoly xm1(5, {4, 1});
    try {
        pp_invmod(xm1, red);
        FAIL("expected ReducibleModulusError");
    } catch (const ReducibleModulusError& e) {
        CHECK(e.factor() == "[4,1]");
    }
}

TEST_CASE("canonical ordering sorts by degree then coefficients") {
    const PrimePoly a(7, {1, 1});        // x + 1
    const PrimePoly b(7, {2, 1});        // x + 2
    const PrimePoly c(7, {0, 0, 1});     // x^2
    const PrimePoly d(7, {3, 5, 1});     // x^2 + 5x + 3
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK_FALSE(d < c);
    CHECK_FALSE(a < a);
    std::vector<PrimePoly> v{d, c, b, a};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<PrimePoly>{a, b, c, d});
}

TEST_CASE("evaluation and derivative over F_p") {
    const PrimePoly f(7, {6, 6, 0, 1});  // x^3 - x - 1 mod 7
    CHECK(f.eval(0) == 6);
    CHECK(f.eval(1) == 6);
    CHECK(f.eval(2) == 5);   // 8 - 2 - 1 = 5
    CHECK(f.derivative() == PrimePoly(7, {6, 0, 3}));
    // Characteristic kills p-th powers: d/dx (x^5) = 0 mod 5.
    CHECK(PrimePoly::monomial(5, 5, 1).derivative().is_zero());
    CHECK_THROWS_AS(PrimePoly(7).monic(), DivisionByZeroError);
}
