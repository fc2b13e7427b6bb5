// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_CURVE_HPP
#define LEGENDRE_CURVE_HPP

#include <gmpxx.h>

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "legendre/concepts.hpp"
#include "legendre/errors.hpp"

namespace legendre {

// Y^2 = X(X+A)(X+B), handled internally as Y^2 = X^3 + (A+B)X^2 + ABX.
// The Legendre case is A = 1, B = lambda.  One template serves exact
// rationals, the number-field tower and finite fields via the field contract.
template <FieldElement F>
struct CurveParams {
    F A, B;

    CurveParams(F A_, F B_) : A(std::move(A_)), B(std::move(B_)) {
        if (A.is_zero() || B.is_zero() || A == B)
            throw SingularCurveError(
                "singular curve: need A != 0, B != 0, A != B (lambda not in {0,1})");
    }
};

template <FieldElement F>
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(F x, F y) { return CurvePoint(std::move(x), std::move(y)); }

    bool is_infinity() const { return !xy_.has_value(); }
    const F& x() const { return coords().first; }
    const F& y() const { return coords().second; }

    bool operator==(const CurvePoint& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return x() == o.x() && y() == o.y();
    }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

private:
    CurvePoint() = default;
    CurvePoint(F x, F y) : xy_(std::in_place, std::move(x), std::move(y)) {}
    const std::pair<F, F>& coords() const {
        if (!xy_) throw InvalidParamError("coordinate access on the point at infinity");
        return *xy_;
    }

    std::optional<std::pair<F, F>> xy_;
};

template <FieldElement F>
bool on_curve(const CurveParams<F>& params, const CurvePoint<F>& pt) {
    if (pt.is_infinity()) return true;
    const F& x = pt.x();
    const F lhs = pt.y() * pt.y();
    const F rhs = x * (x + params.A) * (x + params.B);
    return lhs == rhs;
}

template <FieldElement F>
CurvePoint<F> curve_negate(const CurvePoint<F>& pt) {
    if (pt.is_infinity()) return pt;
    return CurvePoint<F>::affine(pt.x(), -pt.y());
}

namespace detail {

// Chord-tangent addition without the domain re-check; callers guarantee both
// inputs are on the curve.
template <FieldElement F>
CurvePoint<F> add_unchecked(const CurveParams<F>& params, const CurvePoint<F>& P,
                            const CurvePoint<F>& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const F& x1 = P.x();
    const F& y1 = P.y();
    const F& x2 = Q.x();
    const F& y2 = Q.y();

    F slope = y1.zero();
    if (x1 == x2) {
        if ((y1 + y2).is_zero()) return CurvePoint<F>::infinity();
        // Tangent: (3x^2 + 2(A+B)x + AB) / (2y).
        const F two = y1.one() + y1.one();
        const F three = two + y1.one();
        const F ab_sum = params.A + params.B;
        const F numer = three * x1 * x1 + two * ab_sum * x1 + params.A * params.B;
        slope = numer * (two * y1).inverse();
    } else {
        slope = (y2 - y1) * (x2 - x1).inverse();
    }
    const F x3 = slope * slope - (params.A + params.B) - x1 - x2;
    const F y3 = slope * (x1 - x3) - y1;
    CurvePoint<F> R = CurvePoint<F>::affine(x3, y3);
    assert(on_curve(params, R) && "group law left the curve");
    return R;
}

}  // namespace detail

// Abelian group law.  Feeding a point that is not on the curve is a domain
// error, reported as NotOnCurveError.
template <FieldElement F>
CurvePoint<F> add(const CurveParams<F>& params, const CurvePoint<F>& P, const CurvePoint<F>& Q) {
    if (!on_curve(params, P) || !on_curve(params, Q))
        throw NotOnCurveError("add: input point is not on the curve");
    return detail::add_unchecked(params, P, Q);
}

// k-fold sum by double-and-add; scalar_mul(0, P) = O and
// scalar_mul(-k, P) = -scalar_mul(k, P).
template <FieldElement F>
CurvePoint<F> scalar_mul(const CurveParams<F>& params, const mpz_class& k,
                         const CurvePoint<F>& P) {
    if (!on_curve(params, P)) throw NotOnCurveError("scalar_mul: point is not on the curve");
    if (sgn(k) < 0) return curve_negate(scalar_mul(params, mpz_class(-k), P));
    CurvePoint<F> acc = CurvePoint<F>::infinity();
    CurvePoint<F> base = P;
    const mp_bitcnt_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (sgn(k) == 0) return acc;
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = detail::add_unchecked(params, acc, base);
        if (i + 1 < bits) base = detail::add_unchecked(params, base, base);
    }
    return acc;
}

// The full rational 2-torsion {O, (0,0), (-A,0), (-B,0)}: the roots of
// X(X+A)(X+B) with y = 0, each of which doubles to O.
template <FieldElement F>
std::vector<CurvePoint<F>> two_torsion(const CurveParams<F>& params) {
    const F zero = params.A.zero();
    return {CurvePoint<F>::infinity(), CurvePoint<F>::affine(zero, zero),
            CurvePoint<F>::affine(-params.A, zero), CurvePoint<F>::affine(-params.B, zero)};
}

// Exact order of P given the group order N (N*P must be O) and the prime
// factorization of N: divide out primes while the scalar multiple stays O.
template <FieldElement F>
mpz_class point_order(const CurveParams<F>& params, const CurvePoint<F>& P, const mpz_class& N,
                      const std::vector<std::pair<mpz_class, int>>& factorization) {
    if (!scalar_mul(params, N, P).is_infinity())
        throw InconsistentOrderError("point_order: N*P != O for the supplied N");
    mpz_class order = N;
    for (const auto& [ell, mult] : factorization) {
        for (int i = 0; i < mult; ++i) {
            const mpz_class candidate = order / ell;
            if (order % ell == 0 && scalar_mul(params, candidate, P).is_infinity())
                order = candidate;
            else
                break;
        }
    }
    return order;
}

}  // namespace legendre

#endif  // LEGENDRE_CURVE_HPP
