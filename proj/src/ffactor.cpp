// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/ffactor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>

#include "legendre/modarith.hpp"

namespace legendre {

namespace {

// f = lc * prod squarefree_part_i ^ i.  Char-p aware: the non-separable part
// is a p-th power whose root is extracted coefficient-wise (a^(1/p) = a over
// the prime field F_p).
void squarefree_decompose(const PrimePoly& f, int outer_mult,
                          std::vector<std::pair<PrimePoly, int>>& out) {
    const std::uint64_t p = f.modulus();
    PrimePoly w = f.monic();
    if (w.degree() == 0) return;
    PrimePoly c = pp_gcd(w, w.derivative());
    w = pp_divmod(w, c).first;
    int i = 1;
    while (w.degree() > 0) {
        PrimePoly y = pp_gcd(w, c);
        PrimePoly z = pp_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
        ++i;
        w = std::move(y);
        c = pp_divmod(c, w).first;
    }
    if (c.degree() > 0) {
        // c(x) = g(x^p); extract the p-th root coefficient-wise.
        std::vector<std::uint64_t> root(static_cast<std::size_t>(c.degree() / p) + 1, 0);
        for (std::size_t i2 = 0; i2 < root.size(); ++i2) root[i2] = c.coeff(i2 * p);
        squarefree_decompose(PrimePoly(p, std::move(root)), outer_mult * static_cast<int>(p),
                             out);
    }
}

// Distinct-degree splitting of a squarefree monic g: returns (product of all
// irreducible factors of degree d, d) with d increasing.
std::vector<std::pair<PrimePoly, int>> distinct_degree(PrimePoly g) {
    const std::uint64_t p = g.modulus();
    std::vector<std::pair<PrimePoly, int>> out;
    PrimePoly h = PrimePoly::x(p);
    h = pp_divmod(h, g).second;
    const PrimePoly x = PrimePoly::x(p);
    for (int d = 1; g.degree() >= 2 * d; ++d) {
        h = pp_powmod(h, mpz_class(static_cast<unsigned long>(p)), g);
        const PrimePoly split = pp_gcd(g, h - pp_divmod(x, g).second);
        if (split.degree() > 0) {
            out.emplace_back(split, d);
            g = pp_divmod(g, split).first;
            h = pp_divmod(h, g).second;
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

// Equal-degree splitting for odd p (Cantor-Zassenhaus).  g is a squarefree
// monic product of irreducibles all of degree d.
void equal_degree_odd(const PrimePoly& g, int d, std::mt19937_64& rng,
                      std::vector<PrimePoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.modulus();
    mpz_class exp;
    mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    exp = (exp - 1) / 2;
    for (;;) {
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(g.degree()));
        for (auto& c : rc) c = rng() % p;
        const PrimePoly r(p, std::move(rc));
        if (r.degree() < 1) continue;
        PrimePoly t = pp_gcd(g, r);
        if (t.degree() == 0) {
            const PrimePoly s = pp_powmod(r, exp, g);
            t = pp_gcd(g, s - PrimePoly::constant(p, 1));
        }
        if (t.degree() > 0 && t.degree() < g.degree()) {
            equal_degree_odd(t, d, rng, out);
            equal_degree_odd(pp_divmod(g, t).first, d, rng, out);
            return;
        }
    }
}

// Equal-degree splitting for p = 2 by exhaustive trial division: any monic
// degree-d divisor of a squarefree product of degree-d irreducibles is
// itself one of those irreducibles.
void equal_degree_two(PrimePoly g, int d, std::vector<PrimePoly>& out) {
    if (d > 25) throw BudgetError("equal-degree sweep over F_2 too large (degree > 25)");
    for (std::uint64_t idx = 0; g.degree() > 0; ++idx) {
        assert(idx >> d == 0 && "ran out of degree-d candidates");
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
        for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = (idx >> i) & 1;
        c[static_cast<std::size_t>(d)] = 1;
        const PrimePoly cand(2, std::move(c));
        auto [quot, rem] = pp_divmod(g, cand);
        if (rem.is_zero()) {
            out.push_back(cand);
            g = std::move(quot);
        }
    }
}

}  // namespace

std::vector<std::pair<PrimePoly, int>> ff_factor(const PrimePoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw InvalidParamError("factorization of the zero polynomial");
    std::vector<std::pair<PrimePoly, int>> result;
    if (f.degree() == 0) return result;

    std::vector<std::pair<PrimePoly, int>> squarefree;
    squarefree_decompose(f, 1, squarefree);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : distinct_degree(part.monic())) {
            std::vector<PrimePoly> irreducibles;
            if (f.modulus() == 2)
                equal_degree_two(prod, d, irreducibles);
            else
                equal_degree_odd(prod, d, rng, irreducibles);
            for (auto& g : irreducibles) result.emplace_back(std::move(g), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return a.first < b.first;
    });

#ifndef NDEBUG
    PrimePoly check = PrimePoly::constant(f.modulus(), f.leading());
    for (const auto& [g, m] : result)
        for (int i = 0; i < m; ++i) check = check * g;
    assert(check == f && "factor product must reconstruct the input");
#endif
    return result;
}

bool pp_is_irreducible(const PrimePoly& f) {
    if (f.degree() < 1) return false;
    const std::uint64_t p = f.modulus();
    const PrimePoly g = f.monic();
    const int n = g.degree();
    const PrimePoly x = pp_divmod(PrimePoly::x(p), g).second;

    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    if (pp_powmod(PrimePoly::x(p), pn, g) != x) return false;
    for (const auto& [ell, mult] : factorize(static_cast<std::uint64_t>(n))) {
        (void)mult;
        mpz_class pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(n / static_cast<int>(ell)));
        const PrimePoly h = pp_powmod(PrimePoly::x(p), pd, g) - x;
        if (pp_gcd(g, h).degree() != 0) return false;
    }
    return true;
}

std::optional<CycleType> cycle_type(int n, std::uint64_t p, std::uint64_t seed) {
    if (n < 2) throw InvalidParamError("cycle_type requires n >= 2");
    (void)seed;  // degrees come from distinct-degree splitting alone
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = p - 1;
    c[1] = p - 1;
    c[static_cast<std::size_t>(n)] = 1;
    const PrimePoly f(p, std::move(c));
    if (pp_gcd(f, f.derivative()).degree() != 0) return std::nullopt;  // ramified
    CycleType t;
    for (const auto& [prod, d] : distinct_degree(f)) {
        for (int i = 0; i < prod.degree() / d; ++i) t.degrees.push_back(d);
    }
    std::sort(t.degrees.begin(), t.degrees.end(), std::greater<int>());
    return t;
}

}  // namespace legendre
