// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/ratpoly.hpp"

#include <algorithm>

namespace legendre {

RationalPoly RationalPoly::constant(const Rational& c) {
    if (c.is_zero()) return RationalPoly();
    return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(std::size_t k, const Rational& c) {
    if (c.is_zero()) return RationalPoly();
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return RationalPoly();
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return RationalPoly(std::move(r));
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) throw DivisionByZeroError("monic scaling of the zero polynomial");
    return scaled(leading().inverse());
}

RationalPoly trinomial(int n, const Rational& a, const Rational& b) {
    if (n < 2) throw InvalidParamError("trinomial degree must be at least 2");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[0] = -b;
    c[1] = -a;
    c[static_cast<std::size_t>(n)] = Rational(1);
    return RationalPoly(std::move(c));
}

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q) { return p * q; }

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& p, const RationalPoly& q) {
    if (q.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (p.degree() < q.degree()) return {RationalPoly(), p};
    std::vector<Rational> rem(p.coeffs());
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1);
    const Rational inv_lead = q.leading().inverse();
    for (int d = p.degree(); d >= q.degree();) {
        if (rem[static_cast<std::size_t>(d)].is_zero()) {
            --d;
            continue;
        }
        const Rational c = rem[static_cast<std::size_t>(d)] * inv_lead;
        const int shift = d - q.degree();
        quot[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= q.degree(); ++i) {
            const auto k = static_cast<std::size_t>(shift + i);
            rem[k] = rem[k] - c * q.coeff(static_cast<std::size_t>(i));
        }
        --d;
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::tuple<RationalPoly, RationalPoly, RationalPoly> poly_xgcd(const RationalPoly& p,
                                                               const RationalPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw InvalidParamError("gcd of two zero polynomials is undefined");
    // Invariants: r0 = s0*p + t0*q and r1 = s1*p + t1*q.
    RationalPoly r0 = p, r1 = q;
    RationalPoly s0 = RationalPoly::constant(Rational(1)), s1;
    RationalPoly t0, t1 = RationalPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [quot, rem] = poly_divmod(r0, r1);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s0 - quot * s1);
        t0 = std::exchange(t1, t0 - quot * t1);
    }
    const Rational scale = r0.leading().inverse();
    return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

}  // namespace legendre
