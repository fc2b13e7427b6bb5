// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <string>
#include <variant>
#include <vector>

#include "legendre/construct.hpp"
#include "legendre/errors.hpp"
#include "legendre/io.hpp"

using namespace legendre;

TEST_CASE("point construction across an (n, lambda) matrix") {
    for (int n : {3, 5, 7, 9, 11}) {
        for (const Rational& lam :
             {Rational(2), Rational(3), Rational(5), Rational(7), Rational(-2)}) {
            CAPTURE(n);
            const auto c = legendre_point(n, lam);
            CHECK(c.verified);
            CHECK_FALSE(c.hypothesis_warning);
            CHECK(c.field->degree() == n);
            CHECK(c.curve_A == Rational(1));
            CHECK(c.curve_B == lam);
            REQUIRE_FALSE(c.point.is_infinity());
            CHECK(on_curve(c.params, c.point));
            // x = u embedded in the tower; d = u + lambda.
            const auto u = NumberFieldElement::u(c.field);
            CHECK(c.point.x() == TowerElement::embed(u, c.d));
            CHECK(c.d == u + NumberFieldElement::from_rational(c.field, lam));
            // y = u^{(n+1)/2} * t: pure t-part with the expected coefficient.
            CHECK(c.point.y().a().is_zero());
            CHECK(c.point.y().b() == u.pow((n + 1) / 2));
        }
    }
}

TEST_CASE("general parameters (A, B) work the same way") {
    const auto c = general_point(5, Rational(3), Rational(7));
    CHECK(c.verified);
    CHECK(c.field->modulus() == trinomial(5, Rational(1), Rational(3)));
    CHECK(on_curve(c.params, c.point));
    const auto u = NumberFieldElement::u(c.field);
    CHECK(c.d == u + NumberFieldElement::from_rational(c.field, Rational(7)));
    // u^5 = u + 3 here, so y^2 = u(u+3)(u+7) needs the shifted trinomial.
    CHECK(u.pow(5) == u + NumberFieldElement::from_rational(c.field, Rational(3)));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(legendre_point(4, Rational(5)), ParityError);
    // n = 2 fails the n >= 3 gate before parity is even considered.
    CHECK_THROWS_AS(legendre_point(2, Rational(5)), InvalidParamError);
    CHECK_THROWS_AS(legendre_point(1, Rational(5)), InvalidParamError);
    CHECK_THROWS_AS(legendre_point(-3, Rational(5)), InvalidParamError);
    CHECK_THROWS_AS(legendre_point(5, Rational(0)), SingularCurveError);
    CHECK_THROWS_AS(legendre_point(5, Rational(1)), SingularCurveError);
    CHECK_THROWS_AS(general_point(5, Rational(0), Rational(3)), SingularCurveError);
    CHECK_THROWS_AS(general_point(5, Rational(3), Rational(3)), SingularCurveError);
    CHECK_THROWS_AS(general_point(4, Rational(1), Rational(3)), ParityError);
}

TEST_CASE("variant construction over X^p - X - lambda") {
    // p = 5, lambda = 2: no divisibility issue.
    const auto c = variant_point(5, Rational(2));
    CHECK(c.verified);
    CHECK_FALSE(c.hypothesis_warning);
    CHECK(c.field->modulus() == trinomial(5, Rational(1), Rational(2)));
    CHECK(on_curve(c.params, c.point));
    // Curve is (1, lambda) but the root adjoined is sqrt(u + 1).
    CHECK(c.curve_A == Rational(1));
    CHECK(c.curve_B == Rational(2));
    const auto u = NumberFieldElement::u(c.field);
    CHECK(c.d == u + u.one());

    // p = 3 dividing the numerator of lambda triggers the warning (the
    // trinomial may be reducible; the construction is still formally valid
    // in the quotient ring).
    const auto warned = variant_point(3, Rational(3));
    CHECK(warned.hypothesis_warning);
    CHECK(warned.verified);
    const auto warned2 = variant_point(3, Rational(6, 5));
    CHECK(warned2.hypothesis_warning);

    CHECK_THROWS_AS(variant_point(9, Rational(2)), InvalidParamError);  // not prime
    CHECK_THROWS_AS(variant_point(2, Rational(5)), InvalidParamError);  // even prime
    CHECK_THROWS_AS(variant_point(5, Rational(1)), SingularCurveError);
}

TEST_CASE("golden multiples reproduce the recorded fixtures") {
    const auto payload = load_fixture(LEGENDRE_FIXTURE_PATH);
    REQUIRE(payload.contains("examples"));
    int checked = 0;
    for (const auto& ex : payload["examples"]) {
        const int n = ex["n"].get<int>();
        const Rational lam = Rational::from_string(ex["lambda"].get<std::string>());
        const mpz_class k(ex["k"].get<int>());
        const auto c = legendre_point(n, lam);
        const auto kP = multiply_point(c, k);
        REQUIRE_FALSE(kP.is_infinity());
        CHECK(json_nf(kP.x().a()) == ex["x"]);
        CHECK(json_nf(kP.y().a()) == ex["y"]["a"]);
        CHECK(json_nf(kP.y().b()) == ex["y"]["b"]);
        // x stays in the base field: no t-component ever shows up in x.
        CHECK(kP.x().b().is_zero());
        ++checked;
    }
    CHECK(checked == 5);
}

TEST_CASE("explicit doubling on the n = 3, lambda = 5 tower") {
    const auto c = legendre_point(3, Rational(5));
    const auto P = c.point;
    const auto P2 = multiply_point(c, 2);
    CHECK(render_tower(P2.x()) == "141/484*u^2 + 505/484*u - 851/484");
    CHECK(render_tower(P2.y()) ==
          "(1841/117128*u^2 + 7758/14641*u - 126789/117128)*t");
    // Group identities on exact tower coordinates.
    const auto P3 = multiply_point(c, 3);
    CHECK(add(c.params, P2, P) == P3);
    CHECK(add(c.params, P, P2) == P3);
    CHECK(add(c.params, add(c.params, P, P), P) ==
          add(c.params, P, add(c.params, P, P)));
    CHECK(add(c.params, P, curve_negate(P)).is_infinity());
    CHECK(multiply_point(c, 0).is_infinity());
    CHECK(multiply_point(c, -2) == curve_negate(P2));
}

TEST_CASE("unit identities for 2 <= n <= 50 follow the parity rule") {
    for (int n = 2; n <= 50; ++n) {
        CAPTURE(n);
        const auto r = units_identities(n);
        CHECK(r.n == n);
        CHECK(r.u_identity);
        CHECK(r.u_minus_1_identity);
        // The alternating identity for (u+1) holds exactly for odd n.
        CHECK(r.u_plus_1_identity == (n % 2 == 1));
        CHECK(r.all_hold() == (n % 2 == 1));
        if (n % 2 == 0) {
            CHECK_FALSE(r.parity_note.empty());
            // Recorded literal product: u^n + u = 2u + 1 for even n.
            const auto K = NumberField::trinomial_field(n);
            const auto u = NumberFieldElement::u(K);
            CHECK(r.u_plus_1_product == u + u + u.one());
        } else {
            CHECK(r.u_plus_1_product == r.u_plus_1_product.one());
        }
    }
    CHECK_THROWS_AS(units_identities(1), InvalidParamError);
}

TEST_CASE("universal identity over Q(lambda) for odd 3 <= n <= 25") {
    for (int n = 3; n <= 25; n += 2) {
        CAPTURE(n);
        const auto r = universal_identity(n);
        CHECK(r.n == n);
        CHECK(r.identity_holds);
        CHECK(r.u_unit);
        // 1/u = u^{n-1} - 1.
        const auto expect = RationalPoly::monomial(static_cast<std::size_t>(n - 1),
                                                   Rational(1)) -
                            RationalPoly::constant(Rational(1));
        CHECK(r.u_inverse == expect);
    }
    CHECK_THROWS_AS(universal_identity(4), ParityError);
}

TEST_CASE("finite-field instantiation shapes") {
    SUBCASE("n=3, lambda=5, p=7: split 1+2, both through quadratic extensions") {
        const auto inst = ff_instantiate(3, Rational(5), 7);
        REQUIRE(inst.points.size() == 2);
        CHECK(inst.points[0].root_index == 0);
        CHECK(inst.points[0].factor == PrimePoly(7, {2, 1}));
        CHECK(inst.points[0].degree == 1);
        CHECK_FALSE(inst.points[0].sqrt_in_base);
        CHECK(std::holds_alternative<ExtPoint>(inst.points[0].point));
        CHECK(inst.points[1].factor == PrimePoly(7, {3, 5, 1}));
        CHECK(inst.points[1].degree == 2);
        CHECK_FALSE(inst.points[1].sqrt_in_base);
        CHECK(std::holds_alternative<ExtPoint>(inst.points[1].point));
    }
    SUBCASE("n=3, lambda=5, p=13: inert, square root already in F_13^3") {
        const auto inst = ff_instantiate(3, Rational(5), 13);
        REQUIRE(inst.points.size() == 1);
        CHECK(inst.points[0].degree == 3);
        CHECK(inst.points[0].sqrt_in_base);
        CHECK(std::holds_alternative<BasePoint>(inst.points[0].point));
        CHECK(inst.points[0].residue_field->q() == 13 * 13 * 13);
    }
    SUBCASE("n=15, lambda=5, p=173: a single degree-15 factor") {
        const auto inst = ff_instantiate(15, Rational(5), 173);
        REQUIRE(inst.points.size() == 1);
        CHECK(inst.points[0].degree == 15);
        CHECK(std::holds_alternative<BasePoint>(inst.points[0].point));
    }
}

TEST_CASE("instantiated points satisfy the reduced curve equation") {
    for (const auto& [n, p] : std::vector<std::pair<int, std::uint64_t>>{
             {3, 7}, {3, 13}, {5, 7}, {5, 11}, {7, 11}}) {
        CAPTURE(n);
        CAPTURE(p);
        const auto inst = ff_instantiate(n, Rational(5), p);
        REQUIRE_FALSE(inst.points.empty());
        for (const auto& fp : inst.points) {
            const auto F = fp.residue_field;
            const auto one = ExtFieldElement::from_int(F, 1);
            const auto lam = ExtFieldElement::from_int(F, 5);
            if (std::holds_alternative<BasePoint>(fp.point)) {
                const CurveParams<ExtFieldElement> params(one, lam);
                const auto& P = std::get<BasePoint>(fp.point);
                CHECK(on_curve(params, P));
                // The x-coordinate is a root of the recorded factor.
                const auto& x = P.x();
                ExtFieldElement acc = x.zero();
                ExtFieldElement xp = one;
                for (std::uint64_t c : fp.factor.coeffs()) {
                    acc = acc + ExtFieldElement::from_int(F, c) * xp;
                    xp = xp * x;
                }
                CHECK(acc.is_zero());
            } else {
                const auto& P = std::get<ExtPoint>(fp.point);
                const auto d = P.x().d();
                using Q2 = QuadExt<ExtFieldElement>;
                const CurveParams<Q2> params(Q2::embed(one, d), Q2::embed(lam, d));
                CHECK(on_curve(params, P));
                // The adjoined discriminant is exactly x + lambda.
                CHECK(d == P.x().a() + lam);
            }
        }
    }
}

TEST_CASE("reduction commutes with the group law up to the sign of y") {
    // 2P over the tower, reduced mod 13, against doubling the mod-13 point.
    const auto c = legendre_point(3, Rational(5));
    const auto P2 = multiply_point(c, 2);
    const auto inst = ff_instantiate(3, Rational(5), 13);
    REQUIRE(inst.points.size() == 1);
    REQUIRE(std::holds_alternative<BasePoint>(inst.points[0].point));
    const auto F = inst.points[0].residue_field;
    const auto& Pbar = std::get<BasePoint>(inst.points[0].point);
    const CurveParams<ExtFieldElement> params(ExtFieldElement::from_int(F, 1),
                                              ExtFieldElement::from_int(F, 5));
    const auto Pbar2 = add(params, Pbar, Pbar);

    // Reduce the exact rational coefficients of x(2P) mod 13 and evaluate at
    // the residue of u (the generator of F_13^3 by construction).
    const auto xcoeffs = P2.x().a().coeffs();
    const auto ubar = ExtFieldElement::generator(F);
    ExtFieldElement xred = ubar.zero();
    ExtFieldElement up = ubar.one();
    for (const auto& q : xcoeffs) {
        const auto cred = PrimePoly::reduce(RationalPoly::constant(q), 13);
        const std::uint64_t ci = cred.is_zero() ? 0 : cred.coeff(0);
        xred = xred + ExtFieldElement::from_int(F, ci) * up;
        up = up * ubar;
    }
    CHECK(Pbar2.x() == xred);
    // y is defined up to the choice of square root: y-bar = +/- y(2P) mod p.
    // Verify through the curve equation instead of fixing the sign.
    CHECK(Pbar2.y() * Pbar2.y() ==
          xred * (xred + ubar.one()) * (xred + ExtFieldElement::from_int(F, 5)));
}

TEST_CASE("instantiation rejects bad primes and bad residues") {
    CHECK_THROWS_AS(ff_instantiate(3, Rational(5), 2), UnsupportedCharacteristicError);
    CHECK_THROWS_AS(ff_instantiate(3, Rational(5), 3), UnsupportedCharacteristicError);
    CHECK_THROWS_AS(ff_instantiate(3, Rational(5), 6), InvalidParamError);
    CHECK_THROWS_AS(ff_instantiate(3, Rational(1, 7), 7), ExcludedPrimeError);
    CHECK_THROWS_AS(ff_instantiate(3, Rational(5), 5), BadReductionError);   // lambda = 0
    CHECK_THROWS_AS(ff_instantiate(3, Rational(6), 5), BadReductionError);   // lambda = 1
    // 23 ramifies in Q[X]/(X^3 - X - 1) (disc = -23): repeated factor.
    CHECK_THROWS_AS(ff_instantiate(3, Rational(5), 23), ExcludedPrimeError);
    CHECK_THROWS_AS(ff_instantiate(4, Rational(5), 7), ParityError);
}
