// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/curvecount.hpp"

#include <cassert>
#include <cstdlib>

#include "legendre/errors.hpp"
#include "legendre/modarith.hpp"
#include "legendre/quadext.hpp"

namespace legendre {

namespace {

// #E(F_p) for Y^2 = X(X+A)(X+B) by direct enumeration with a quadratic
// residue table: 1 (infinity) + sum over x of (1 + chi(f(x))).
std::int64_t count_base_points(std::uint64_t a_res, std::uint64_t b_res, std::uint64_t p) {
    std::vector<char> is_square(p, 0);
    for (std::uint64_t t = 0; t < p; ++t) is_square[mulmod(t, t, p)] = 1;
    std::int64_t count = 1;  // the point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t rhs =
            mulmod(mulmod(x, addmod(x, a_res, p), p), addmod(x, b_res, p), p);
        if (rhs == 0)
            count += 1;
        else if (is_square[rhs])
            count += 2;
    }
    return count;
}

void check_count_inputs(std::uint64_t a_res, std::uint64_t b_res, std::uint64_t p, int e,
                        std::uint64_t count_bound) {
    if (!is_prime(p)) throw InvalidParamError("trace_and_order: p must be prime");
    if (p <= 3)
        throw UnsupportedCharacteristicError("trace_and_order: characteristic must exceed 3");
    if (p > count_bound)
        throw BudgetError("trace_and_order: p exceeds the exhaustive-count bound");
    if (e < 1) throw InvalidParamError("trace_and_order: extension degree must be >= 1");
    a_res %= p;
    b_res %= p;
    if (a_res == 0 || b_res == 0 || a_res == b_res)
        throw BadReductionError("trace_and_order: curve is singular mod p");
}

}  // namespace

TraceOrder trace_and_order(std::uint64_t a_res, std::uint64_t b_res, std::uint64_t p, int e,
                           std::uint64_t count_bound) {
    check_count_inputs(a_res, b_res, p, e, count_bound);
    const std::int64_t N1 = count_base_points(a_res % p, b_res % p, p);
    TraceOrder out;
    out.a1 = static_cast<std::int64_t>(p) + 1 - N1;
    // Hasse bound |a1| <= 2*sqrt(p); a1^2 <= 4p avoids floating point.
    assert(out.a1 * out.a1 <= 4 * static_cast<std::int64_t>(p));
    mpz_class s_prev = 2, s_cur = out.a1;
    for (int i = 2; i <= e; ++i) {
        mpz_class s_next = mpz_class(out.a1) * s_cur - mpz_class(p) * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
    }
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(e));
    out.Ne = (e == 1) ? mpz_class(N1) : q + 1 - s_cur;
    return out;
}

std::vector<mpz_class> order_sequence(std::uint64_t a_res, std::uint64_t b_res, std::uint64_t p,
                                      int emax, std::uint64_t count_bound) {
    check_count_inputs(a_res, b_res, p, emax, count_bound);
    const std::int64_t N1 = count_base_points(a_res % p, b_res % p, p);
    const std::int64_t a1 = static_cast<std::int64_t>(p) + 1 - N1;
    std::vector<mpz_class> orders;
    mpz_class s_prev = 2, s_cur = a1, q = 1;
    for (int e = 1; e <= emax; ++e) {
        q *= p;
        orders.push_back(q + 1 - s_cur);
        mpz_class s_next = mpz_class(a1) * s_cur - mpz_class(p) * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
    }
    return orders;
}

mpz_class exhaustive_count_ext(std::uint64_t a_res, std::uint64_t b_res,
                               const std::shared_ptr<const ExtField>& field,
                               std::uint64_t count_bound) {
    if (field->q() > count_bound)
        throw BudgetError("exhaustive_count_ext: field size exceeds the count bound");
    const std::uint64_t q = field->q().get_ui();
    const std::uint64_t p = field->p();
    const int e = field->e();
    const ExtFieldElement a = ExtFieldElement::from_int(field, a_res % p);
    const ExtFieldElement b = ExtFieldElement::from_int(field, b_res % p);
    if (a.is_zero() || b.is_zero() || a == b)
        throw BadReductionError("exhaustive_count_ext: curve is singular over this field");
    mpz_class count = 1;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        // Decode idx in base p to sweep every field element exactly once.
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(e), 0);
        std::uint64_t rem = idx;
        for (int i = 0; i < e; ++i) {
            digits[static_cast<std::size_t>(i)] = rem % p;
            rem /= p;
        }
        const ExtFieldElement x(field, PrimePoly(p, digits));
        const ExtFieldElement rhs = x * (x + a) * (x + b);
        if (rhs.is_zero())
            count += 1;
        else if (ff_is_square(rhs))
            count += 2;
    }
    return count;
}

std::vector<std::pair<mpz_class, int>> factorize_order(const mpz_class& N) {
    if (sgn(N) <= 0) throw InvalidParamError("factorize_order: N must be positive");
    if (!N.fits_ulong_p())
        throw InvalidParamError("factorize_order: N exceeds the 64-bit factorization range");
    std::vector<std::pair<mpz_class, int>> out;
    for (const auto& [prime, mult] : factorize(N.get_ui()))
        out.emplace_back(mpz_class(static_cast<unsigned long>(prime)), mult);
    return out;
}

}  // namespace legendre
