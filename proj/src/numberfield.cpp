// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/numberfield.hpp"

#include "legendre/extfield.hpp"
#include "legendre/ffactor.hpp"
#include "legendre/modarith.hpp"

namespace legendre {

namespace {

std::string render_coeff_list(const RationalPoly& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out += (i ? "," : "") + f.coeffs()[i].str();
    return out + "]";
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::make(RationalPoly f) {
    if (f.degree() < 1) throw InvalidParamError("number field modulus must have degree >= 1");
    if (!f.is_monic()) throw InvalidParamError("number field modulus must be monic");
    return std::shared_ptr<const NumberField>(new NumberField(std::move(f)));
}

std::shared_ptr<const NumberField> NumberField::trinomial_field(int n) {
    return make(trinomial(n, Rational(1), Rational(1)));
}

NumberFieldElement::NumberFieldElement(std::shared_ptr<const NumberField> field,
                                       const RationalPoly& value)
    : field_(std::move(field)) {
    const RationalPoly reduced = poly_divmod(value, field_->modulus()).second;
    c_.resize(static_cast<std::size_t>(field_->degree()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = reduced.coeff(i);
}

NumberFieldElement NumberFieldElement::u(const std::shared_ptr<const NumberField>& field) {
    return NumberFieldElement(field, RationalPoly::monomial(1, Rational(1)));
}

NumberFieldElement NumberFieldElement::from_rational(
    const std::shared_ptr<const NumberField>& field, const Rational& c) {
    return NumberFieldElement(field, RationalPoly::constant(c));
}

NumberFieldElement NumberFieldElement::from_coeffs(
    const std::shared_ptr<const NumberField>& field, std::vector<Rational> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(field->degree()))
        throw InvalidParamError("coefficient count must equal the field degree");
    return NumberFieldElement(field, RationalPoly(std::move(coeffs)));
}

RationalPoly NumberFieldElement::as_poly() const { return RationalPoly(c_); }

void NumberFieldElement::require_same_field(const NumberFieldElement& o) const {
    if (field_ == o.field_) return;
    if (!(*field_ == *o.field_))
        throw ContextMismatchError("number field contexts differ");
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
    require_same_field(o);
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] + o.c_[i];
    NumberFieldElement out = *this;
    out.c_ = std::move(r);
    return out;
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
    require_same_field(o);
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] - o.c_[i];
    NumberFieldElement out = *this;
    out.c_ = std::move(r);
    return out;
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
    require_same_field(o);
    return NumberFieldElement(field_, as_poly() * o.as_poly());
}

NumberFieldElement NumberFieldElement::operator-() const {
    NumberFieldElement out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero number field element");
    auto [g, s, t] = poly_xgcd(as_poly(), field_->modulus());
    (void)t;
    if (g.degree() > 0) {
        // gcd(value, f) proper: f is reducible and we found a factor.
        throw ReducibleModulusError("number field modulus is reducible; inversion impossible",
                                    render_coeff_list(g));
    }
    // g is the constant 1 after monic scaling, so s * value = 1 (mod f).
    return NumberFieldElement(field_, s);
}

NumberFieldElement NumberFieldElement::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    NumberFieldElement r = one(), b = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool NumberFieldElement::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

NumberFieldElement NumberFieldElement::zero() const {
    return from_rational(field_, Rational());
}

NumberFieldElement NumberFieldElement::one() const {
    return from_rational(field_, Rational(1));
}

bool NumberFieldElement::operator==(const NumberFieldElement& o) const {
    require_same_field(o);
    return c_ == o.c_;
}

SqrtBaseCheck sqrt_not_in_base_check(int n, const Rational& lambda, std::uint64_t prime_bound) {
    if (n < 2) throw InvalidParamError("sqrt_not_in_base_check requires n >= 2");
    const RationalPoly f = trinomial(n, Rational(1), Rational(1));
    for (std::uint64_t p = 3; p < prime_bound; p = next_prime(p)) {
        if (lambda.denominator() % static_cast<long>(p) == 0) continue;
        const PrimePoly fp = PrimePoly::reduce(f, p);
        if (!pp_is_irreducible(fp)) continue;
        const auto field = ExtField::make(p, fp);
        const ExtFieldElement u = ExtFieldElement::generator(field);
        const ExtFieldElement lam = ExtFieldElement(
            field, PrimePoly::reduce(RationalPoly::constant(lambda), p));
        const ExtFieldElement d = u + lam;
        if (!d.is_zero() && !ff_is_square(d)) return {true, p};
    }
    return {false, std::nullopt};
}

}  // namespace legendre
