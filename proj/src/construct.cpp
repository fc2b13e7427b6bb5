// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/construct.hpp"

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>

#include "legendre/ffactor.hpp"
#include "legendre/modarith.hpp"

namespace legendre {

namespace {

void require_odd_degree(int n) {
    if (n < 3) throw InvalidParamError("tower construction requires n >= 3");
    if (n % 2 == 0)
        throw ParityError("tower construction requires odd n: y = u^{(n+1)/2}*t needs (n+1)/2 "
                          "integral");
}

// Shared core: K = Q[X]/(X^n - X - f_const), t^2 = u + root_shift, curve
// parameters (curve_a, curve_b), point (u, u^{(n+1)/2} * t).
TowerConstruction build_tower(int n, const Rational& f_const, const Rational& root_shift,
                              const Rational& curve_a, const Rational& curve_b, bool warn) {
    require_odd_degree(n);
    if (curve_a.is_zero() || curve_b.is_zero() || curve_a == curve_b)
        throw SingularCurveError("curve parameters must satisfy A != 0, B != 0, A != B");

    auto field = NumberField::make(trinomial(n, Rational(1), f_const));
    const NumberFieldElement u = NumberFieldElement::u(field);
    const NumberFieldElement d =
        u + NumberFieldElement::from_rational(field, root_shift);

    const TowerElement x = TowerElement::embed(u, d);
    const TowerElement t = TowerElement::generator(d);
    const TowerElement y = TowerElement::embed(u.pow((n + 1) / 2), d) * t;

    CurveParams<TowerElement> params(
        TowerElement::embed(NumberFieldElement::from_rational(field, curve_a), d),
        TowerElement::embed(NumberFieldElement::from_rational(field, curve_b), d));
    CurvePoint<TowerElement> point = CurvePoint<TowerElement>::affine(x, y);

    const bool ok = on_curve(params, point);
    if (!ok) throw Error("internal error: constructed point failed the on-curve check");
    return TowerConstruction{std::move(field), curve_a,   curve_b, d,
                             std::move(params), std::move(point), ok,      warn};
}

}  // namespace

TowerConstruction legendre_point(int n, const Rational& lambda) {
    return build_tower(n, Rational(1), lambda, Rational(1), lambda, false);
}

TowerConstruction general_point(int n, const Rational& A, const Rational& B) {
    return build_tower(n, A, B, A, B, false);
}

TowerConstruction variant_point(int p, const Rational& lambda) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidParamError("variant construction requires an odd prime exponent");
    // X^p - X - lambda can drop irreducibility when p divides lambda
    // (Artin-Schreier collapse mod p); the quotient-ring identity still holds,
    // so flag rather than refuse.
    const bool warn =
        !lambda.is_zero() && mpz_class(lambda.numerator() % p) == 0;
    return build_tower(p, lambda, Rational(1), Rational(1), lambda, warn);
}

CurvePoint<TowerElement> multiply_point(const TowerConstruction& c, const mpz_class& k) {
    CurvePoint<TowerElement> R = scalar_mul(c.params, k, c.point);
    if (!on_curve(c.params, R)) throw Error("internal error: multiple left the curve");
    return R;
}

UnitsReport units_identities(int n) {
    if (n < 2) throw InvalidParamError("units_identities requires n >= 2");
    auto field = NumberField::trinomial_field(n);
    const NumberFieldElement u = NumberFieldElement::u(field);
    const NumberFieldElement one = u.one();

    const bool id_u = (u * (u.pow(n - 1) - one)) == one;

    NumberFieldElement geom = u.zero();
    for (int k = 1; k <= n - 1; ++k) geom = geom + u.pow(k);
    const bool id_u_minus = ((u - one) * geom) == one;

    // Alternating sum u^{n-1} - u^{n-2} + ... +- u (signs fixed by the
    // leading +u^{n-1}); the product with u+1 telescopes to u^n + (-1)^n u.
    NumberFieldElement alt = u.zero();
    for (int k = 1; k <= n - 1; ++k) {
        const NumberFieldElement term = u.pow(k);
        alt = ((n - 1 - k) % 2 == 0) ? alt + term : alt - term;
    }
    const NumberFieldElement prod = (u + one) * alt;
    const bool id_u_plus = prod == one;

    const std::string note =
        (n % 2 == 1)
            ? "(u+1) * (alternating sum) = u^n + (-1)^n*u = u^n - u = 1 for odd n"
            : "(u+1) * (alternating sum) = u^n + (-1)^n*u = u^n + u = 2u + 1 for even n; "
              "the identity is odd-n only";

    return UnitsReport{n, id_u, id_u_minus, id_u_plus, prod, note};
}

namespace {

// Bivariate arithmetic for the universal check: index = power of U, entry =
// polynomial in lambda over Q.  Kept local; nothing else needs it.
using BiPoly = std::vector<RationalPoly>;

BiPoly bi_zero(std::size_t len) { return BiPoly(len, RationalPoly()); }

BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
    if (a.empty() || b.empty()) return {};
    BiPoly out = bi_zero(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].degree() < 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

BiPoly bi_sub(BiPoly a, const BiPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), RationalPoly());
    for (std::size_t j = 0; j < b.size(); ++j) a[j] = a[j] - b[j];
    return a;
}

// Rewrite U^k for k >= n using U^n = U + 1 until everything sits below U^n.
void bi_reduce(BiPoly& a, int n) {
    for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(n);) {
        const RationalPoly c = a[k];
        if (c.degree() < 0) continue;
        a[k] = RationalPoly();
        a[k - static_cast<std::size_t>(n) + 1] =
            a[k - static_cast<std::size_t>(n) + 1] + c;
        a[k - static_cast<std::size_t>(n)] = a[k - static_cast<std::size_t>(n)] + c;
    }
    while (a.size() > static_cast<std::size_t>(n)) a.pop_back();
}

bool bi_is_zero(const BiPoly& a) {
    for (const auto& c : a)
        if (c.degree() >= 0) return false;
    return true;
}

}  // namespace

UniversalReport universal_identity(int n) {
    require_odd_degree(n);
    const RationalPoly one_l = RationalPoly::constant(Rational(1));
    const RationalPoly lam = RationalPoly::monomial(1, Rational(1));  // the parameter

    // U, U+1, U+lambda as bivariate values.
    BiPoly U = {RationalPoly(), one_l};
    BiPoly U1 = {one_l, one_l};
    BiPoly Ul = {lam, one_l};

    // y^2 = (U^{(n+1)/2})^2 * t^2 = U^{n+1} * (U + lambda).
    BiPoly upow = {one_l};
    for (int i = 0; i < n + 1; ++i) {
        upow = bi_mul(upow, U);
        bi_reduce(upow, n);
    }
    BiPoly lhs = bi_mul(upow, Ul);
    bi_reduce(lhs, n);

    BiPoly rhs = bi_mul(bi_mul(U, U1), Ul);
    bi_reduce(rhs, n);

    const bool identity = bi_is_zero(bi_sub(lhs, rhs));

    // u-inverse stays lambda-free: U * (U^{n-1} - 1) = U^n - U = 1.
    BiPoly upow_nm1 = {one_l};
    for (int i = 0; i < n - 1; ++i) {
        upow_nm1 = bi_mul(upow_nm1, U);
        bi_reduce(upow_nm1, n);
    }
    BiPoly inv = upow_nm1;
    inv[0] = inv[0] - one_l;
    BiPoly prod = bi_mul(U, inv);
    bi_reduce(prod, n);
    BiPoly bi_one = {one_l};
    const bool u_unit = bi_is_zero(bi_sub(prod, bi_one));

    RationalPoly u_inverse =
        RationalPoly::monomial(static_cast<std::size_t>(n - 1), Rational(1)) -
        RationalPoly::constant(Rational(1));
    return UniversalReport{n, identity, u_unit, std::move(u_inverse)};
}

bool sqrt_stays_in_base(const ExtFieldElement& d) {
    return d.is_zero() || ff_is_square(d);
}

FFInstantiation ff_instantiate(int n, const Rational& lambda, std::uint64_t p,
                               std::uint64_t seed) {
    require_odd_degree(n);
    if (!is_prime(p)) throw InvalidParamError("ff_instantiate: p must be prime");
    if (p <= 3)
        throw UnsupportedCharacteristicError("ff_instantiate: characteristic must exceed 3");
    if (mpz_class(lambda.denominator() % p) == 0)
        throw ExcludedPrimeError("ff_instantiate: p divides the denominator of lambda");

    const std::uint64_t lam_num = mpz_fdiv_ui(lambda.numerator().get_mpz_t(), p);
    const std::uint64_t lam_den = mpz_fdiv_ui(lambda.denominator().get_mpz_t(), p);
    const std::uint64_t lam_res = mulmod(lam_num, invmod(lam_den, p), p);
    if (lam_res == 0 || lam_res == 1)
        throw BadReductionError("ff_instantiate: lambda reduces to 0 or 1, reduction singular");

    const PrimePoly fbar = PrimePoly::reduce(trinomial(n, Rational(1), Rational(1)), p);
    if (pp_gcd(fbar, fbar.derivative()).degree() > 0)
        throw ExcludedPrimeError("ff_instantiate: x^n - x - 1 is not squarefree mod p");

    FFInstantiation out{n, lambda, p, {}};
    int index = 0;
    for (const auto& [g, mult] : ff_factor(fbar, seed)) {
        assert(mult == 1);
        auto field = ExtField::make(p, g);
        const ExtFieldElement u = ExtFieldElement::generator(field);
        const ExtFieldElement lam = ExtFieldElement::from_int(field, lam_res);
        const ExtFieldElement one = ExtFieldElement::from_int(field, 1);
        const ExtFieldElement d = u + lam;
        const mpz_class half(( n + 1) / 2);
        const ExtFieldElement u_half = u.pow(half);

        const bool in_base = sqrt_stays_in_base(d);
        if (in_base) {
            CurveParams<ExtFieldElement> params(one, lam);
            const ExtFieldElement y = u_half * ff_sqrt(d);
            BasePoint pt = BasePoint::affine(u, y);
            if (!on_curve(params, pt))
                throw Error("internal error: base-field point failed the on-curve check");
            out.points.push_back(FFPoint{index, g, g.degree(), true, pt, field});
        } else {
            using Q = QuadExt<ExtFieldElement>;
            CurveParams<Q> params(Q::embed(one, d), Q::embed(lam, d));
            const Q y = Q::embed(u_half, d) * Q::generator(d);
            ExtPoint pt = ExtPoint::affine(Q::embed(u, d), y);
            if (!on_curve(params, pt))
                throw Error("internal error: extension point failed the on-curve check");
            out.points.push_back(FFPoint{index, g, g.degree(), false, pt, field});
        }
        ++index;
    }
    return out;
}

}  // namespace legendre
