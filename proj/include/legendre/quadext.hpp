// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_QUADEXT_HPP
#define LEGENDRE_QUADEXT_HPP

#include "legendre/concepts.hpp"
#include "legendre/errors.hpp"

namespace legendre {

// The quadratic extension F[T]/(T^2 - d) of a base field F, as a rank-2
// module: a + b*T with the defining discriminant d carried by every element.
// T is a purely formal square root; no root extraction ever happens here.
// The same template serves the number-field tower L = K[T]/(T^2 - (u+lambda))
// and the quadratic extensions of finite fields used for reductions.
template <FieldElement F>
class QuadExt {
public:
    QuadExt(F a, F b, F d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    // The embedding of the base field, a + 0*T.
    static QuadExt embed(const F& a, const F& d) { return QuadExt(a, a.zero(), d); }
    // The generator T itself.
    static QuadExt generator(const F& d) { return QuadExt(d.zero(), d.one(), d); }

    const F& a() const { return a_; }
    const F& b() const { return b_; }
    const F& d() const { return d_; }

    QuadExt operator+(const QuadExt& o) const {
        require_same_d(o);
        return QuadExt(a_ + o.a_, b_ + o.b_, d_);
    }
    QuadExt operator-(const QuadExt& o) const {
        require_same_d(o);
        return QuadExt(a_ - o.a_, b_ - o.b_, d_);
    }
    QuadExt operator*(const QuadExt& o) const {
        require_same_d(o);
        return QuadExt(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + o.a_ * b_, d_);
    }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    // (a + bT)^-1 = (a - bT) / (a^2 - b^2 d).  A zero norm with a nonzero
    // element signals that d is a square in the base field.
    QuadExt inverse() const {
        const F norm = a_ * a_ - b_ * b_ * d_;
        if (norm.is_zero()) {
            if (is_zero()) throw DivisionByZeroError("inverse of zero in quadratic extension");
            throw NonInvertibleError(
                "zero norm in quadratic extension: the discriminant is a square");
        }
        const F inv_norm = norm.inverse();
        return QuadExt(a_ * inv_norm, -(b_ * inv_norm), d_);
    }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    QuadExt zero() const { return QuadExt(a_.zero(), a_.zero(), d_); }
    QuadExt one() const { return QuadExt(a_.one(), a_.zero(), d_); }

    bool operator==(const QuadExt& o) const {
        require_same_d(o);
        return a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

private:
    void require_same_d(const QuadExt& o) const {
        if (!(d_ == o.d_))
            throw ContextMismatchError("quadratic extension discriminants differ");
    }

    F a_, b_, d_;
};

}  // namespace legendre

#endif  // LEGENDRE_QUADEXT_HPP
