// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/primepoly.hpp"

#include <algorithm>

#include "legendre/modarith.hpp"
#include "legendre/ratpoly.hpp"

namespace legendre {

PrimePoly::PrimePoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    check_modulus();
    for (auto& x : c_) x %= p_;
    trim();
}

PrimePoly PrimePoly::constant(std::uint64_t p, std::uint64_t c) {
    return PrimePoly(p, std::vector<std::uint64_t>{c});
}

PrimePoly PrimePoly::monomial(std::uint64_t p, std::size_t k, std::uint64_t c) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return PrimePoly(p, std::move(v));
}

PrimePoly PrimePoly::reduce(const RationalPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational& q = f.coeffs()[i];
        const mpz_class num = q.numerator() % static_cast<long>(p);
        const mpz_class den = q.denominator() % static_cast<long>(p);
        if (den == 0)
            throw ExcludedPrimeError("coefficient denominator divisible by p=" + std::to_string(p));
        std::uint64_t n = mpz_class(num < 0 ? num + static_cast<long>(p) : num).get_ui();
        c[i] = mulmod(n, invmod(den.get_ui(), p), p);
    }
    return PrimePoly(p, std::move(c));
}

PrimePoly PrimePoly::operator+(const PrimePoly& o) const {
    if (p_ != o.p_) throw ContextMismatchError("PrimePoly moduli differ");
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(coeff(i), o.coeff(i), p_);
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator-(const PrimePoly& o) const {
    if (p_ != o.p_) throw ContextMismatchError("PrimePoly moduli differ");
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(coeff(i), o.coeff(i), p_);
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator*(const PrimePoly& o) const {
    if (p_ != o.p_) throw ContextMismatchError("PrimePoly moduli differ");
    if (is_zero() || o.is_zero()) return PrimePoly(p_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(c_[i], o.c_[j], p_), p_);
    }
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator-() const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = negmod(c_[i], p_);
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::scaled(std::uint64_t c) const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], c % p_, p_);
    return PrimePoly(p_, std::move(r));
}

bool PrimePoly::operator<(const PrimePoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return c_ < o.c_;
}

std::uint64_t PrimePoly::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = addmod(mulmod(acc, x % p_, p_), c_[i], p_);
    return acc;
}

PrimePoly PrimePoly::derivative() const {
    if (c_.size() <= 1) return PrimePoly(p_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
    return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::monic() const {
    if (is_zero()) throw DivisionByZeroError("monic scaling of the zero polynomial");
    if (is_monic()) return *this;
    return scaled(invmod(leading(), p_));
}

std::pair<PrimePoly, PrimePoly> pp_divmod(const PrimePoly& p, const PrimePoly& q) {
    if (p.modulus() != q.modulus()) throw ContextMismatchError("PrimePoly moduli differ");
    if (q.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const std::uint64_t m = p.modulus();
    if (p.degree() < q.degree()) return {PrimePoly(m), p};
    std::vector<std::uint64_t> rem(p.coeffs());
    std::vector<std::uint64_t> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, 0);
    const std::uint64_t inv_lead = invmod(q.leading(), m);
    for (int d = p.degree(); d >= q.degree();) {
        if (rem[static_cast<std::size_t>(d)] == 0) {
            --d;
            continue;
        }
        const std::uint64_t c = mulmod(rem[static_cast<std::size_t>(d)], inv_lead, m);
        const int shift = d - q.degree();
        quot[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= q.degree(); ++i) {
            const auto k = static_cast<std::size_t>(shift + i);
            rem[k] = submod(rem[k], mulmod(c, q.coeff(static_cast<std::size_t>(i)), m), m);
        }
        --d;
    }
    return {PrimePoly(m, std::move(quot)), PrimePoly(m, std::move(rem))};
}

PrimePoly pp_gcd(PrimePoly a, PrimePoly b) {
    if (a.modulus() != b.modulus()) throw ContextMismatchError("PrimePoly moduli differ");
    while (!b.is_zero()) {
        PrimePoly r = pp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

PrimePoly pp_powmod(const PrimePoly& base, const mpz_class& exp, const PrimePoly& f) {
    if (base.modulus() != f.modulus()) throw ContextMismatchError("PrimePoly moduli differ");
    if (sgn(exp) < 0) throw InvalidParamError("negative exponent in pp_powmod");
    PrimePoly r = PrimePoly::constant(f.modulus(), 1);
    r = pp_divmod(r, f).second;
    PrimePoly b = pp_divmod(base, f).second;
    const mp_bitcnt_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (sgn(exp) == 0) return r;
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = pp_divmod(r * b, f).second;
        b = pp_divmod(b * b, f).second;
    }
    return r;
}

PrimePoly pp_invmod(const PrimePoly& a, const PrimePoly& f) {
    if (a.modulus() != f.modulus()) throw ContextMismatchError("PrimePoly moduli differ");
    // Extended Euclid tracking only the coefficient on a: r = s*a (mod f).
    PrimePoly r0 = f, r1 = pp_divmod(a, f).second;
    PrimePoly s0(f.modulus()), s1 = PrimePoly::constant(f.modulus(), 1);
    if (r1.is_zero()) throw DivisionByZeroError("inverse of zero residue");
    while (!r1.is_zero()) {
        auto [quot, rem] = pp_divmod(r0, r1);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s0 - quot * s1);
    }
    if (r0.degree() > 0) {
        // A proper factor of f was found along the way; carry it as witness.
        std::string factor = "[";
        const PrimePoly w = r0.monic();
        for (std::size_t i = 0; i < w.coeffs().size(); ++i)
            factor += (i ? "," : "") + std::to_string(w.coeffs()[i]);
        factor += "]";
        throw ReducibleModulusError("modulus is reducible; inversion impossible", factor);
    }
    return s0.scaled(invmod(r0.leading(), f.modulus()));
}

}  // namespace legendre
