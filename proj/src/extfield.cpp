// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/extfield.hpp"

#include <cassert>

#include "legendre/ffactor.hpp"
#include "legendre/modarith.hpp"

namespace legendre {

std::shared_ptr<const ExtField> ExtField::make(std::uint64_t p, PrimePoly g) {
    if (!is_prime(p)) throw InvalidParamError("ExtField characteristic must be prime");
    if (g.modulus() != p) throw ContextMismatchError("modulus of g differs from p");
    if (!g.is_monic()) throw InvalidParamError("ExtField modulus polynomial must be monic");
    if (!pp_is_irreducible(g))
        throw ReducibleModulusError("ExtField modulus polynomial is reducible",
                                    "g of degree " + std::to_string(g.degree()));
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(g.degree()));
    return std::shared_ptr<const ExtField>(new ExtField(p, std::move(g), std::move(q)));
}

std::shared_ptr<const ExtField> ExtField::prime_field(std::uint64_t p) {
    return make(p, PrimePoly::x(p));
}

ExtFieldElement::ExtFieldElement(std::shared_ptr<const ExtField> field, PrimePoly value)
    : field_(std::move(field)), v_(pp_divmod(value, field_->g()).second) {}

ExtFieldElement ExtFieldElement::generator(const std::shared_ptr<const ExtField>& field) {
    return ExtFieldElement(field, PrimePoly::x(field->p()));
}

ExtFieldElement ExtFieldElement::from_int(const std::shared_ptr<const ExtField>& field,
                                          std::uint64_t c) {
    return ExtFieldElement(field, PrimePoly::constant(field->p(), c % field->p()));
}

std::vector<std::uint64_t> ExtFieldElement::coeff_vector() const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(field_->e()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = v_.coeff(i);
    return out;
}

void ExtFieldElement::require_same_field(const ExtFieldElement& o) const {
    if (field_ == o.field_) return;
    if (!(*field_ == *o.field_))
        throw ContextMismatchError("ExtFieldElement contexts differ");
}

ExtFieldElement ExtFieldElement::operator+(const ExtFieldElement& o) const {
    require_same_field(o);
    return ExtFieldElement(field_, v_ + o.v_);
}

ExtFieldElement ExtFieldElement::operator-(const ExtFieldElement& o) const {
    require_same_field(o);
    return ExtFieldElement(field_, v_ - o.v_);
}

ExtFieldElement ExtFieldElement::operator*(const ExtFieldElement& o) const {
    require_same_field(o);
    return ExtFieldElement(field_, pp_divmod(v_ * o.v_, field_->g()).second);
}

ExtFieldElement ExtFieldElement::operator-() const { return ExtFieldElement(field_, -v_); }

ExtFieldElement ExtFieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    return ExtFieldElement(field_, pp_invmod(v_, field_->g()));
}

ExtFieldElement ExtFieldElement::pow(const mpz_class& exp) const {
    if (sgn(exp) < 0) return inverse().pow(-exp);
    return ExtFieldElement(field_, pp_powmod(v_, exp, field_->g()));
}

ExtFieldElement ExtFieldElement::zero() const {
    return ExtFieldElement(field_, PrimePoly(field_->p()));
}

ExtFieldElement ExtFieldElement::one() const {
    return ExtFieldElement(field_, PrimePoly::constant(field_->p(), 1));
}

bool ExtFieldElement::operator==(const ExtFieldElement& o) const {
    require_same_field(o);
    return v_ == o.v_;
}

bool ExtFieldElement::lex_less(const ExtFieldElement& o) const {
    require_same_field(o);
    return coeff_vector() < o.coeff_vector();
}

bool ff_is_square(const ExtFieldElement& x) {
    if (x.field()->p() == 2)
        throw UnsupportedCharacteristicError("Euler criterion requires odd characteristic");
    if (x.is_zero()) return true;
    const mpz_class exp = (x.field()->q() - 1) / 2;
    return x.pow(exp) == x.one();
}

namespace {

// Deterministic non-residue search: walk elements in canonical index order
// (index digits base p give ascending-power coefficients) until the Euler
// criterion fails.  Half of all nonzero elements qualify, so this terminates
// quickly; constants are tried first.
ExtFieldElement first_non_residue(const ExtFieldElement& sample) {
    const auto& field = sample.field();
    const std::uint64_t p = field->p();
    const mpz_class exp = (field->q() - 1) / 2;
    for (std::uint64_t idx = 2;; ++idx) {
        std::vector<std::uint64_t> c;
        for (std::uint64_t rest = idx; rest; rest /= p) c.push_back(rest % p);
        const ExtFieldElement cand(field, PrimePoly(p, std::move(c)));
        if (cand.is_zero()) continue;
        if (!(cand.pow(exp) == cand.one())) return cand;
    }
}

}  // namespace

ExtFieldElement ff_sqrt(const ExtFieldElement& x) {
    const auto& field = x.field();
    if (field->p() == 2)
        throw UnsupportedCharacteristicError("square root requires odd characteristic");
    if (x.is_zero()) return x;
    if (!ff_is_square(x)) throw NonResidueError("ff_sqrt of a quadratic non-residue");

    const mpz_class& q = field->q();
    ExtFieldElement r = x.one();
    if (mpz_class(q % 4) == 3) {
        r = x.pow((q + 1) / 4);
    } else {
        // Tonelli-Shanks: q - 1 = 2^s * t with t odd.
        mpz_class t = q - 1;
        unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);
        ExtFieldElement c = first_non_residue(x).pow(t);
        r = x.pow((t + 1) / 2);
        ExtFieldElement d = x.pow(t);
        // Invariant: r^2 = x * d, with ord(d) a power of two dividing 2^(s-1).
        while (!(d == x.one())) {
            unsigned long i = 0;
            ExtFieldElement probe = d;
            while (!(probe == x.one())) {
                probe = probe * probe;
                ++i;
            }
            ExtFieldElement b = c;
            for (unsigned long j = 0; j + i + 1 < s; ++j) b = b * b;
            r = r * b;
            c = b * b;
            d = d * c;
            s = i;
        }
    }
    assert(r * r == x);
    const ExtFieldElement neg = -r;
    return neg.lex_less(r) ? neg : r;
}

}  // namespace legendre
