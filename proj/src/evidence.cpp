// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/evidence.hpp"

#include <cassert>
#include <cstdlib>

#include "legendre/modarith.hpp"

namespace legendre {

namespace {

// lambda as a residue mod p; requires p coprime to the denominator.
std::uint64_t lambda_residue(const Rational& lambda, std::uint64_t p) {
    if (mpz_class(lambda.denominator() % p) == 0)
        throw ExcludedPrimeError("p divides the denominator of lambda");
    const std::uint64_t num = mpz_fdiv_ui(lambda.numerator().get_mpz_t(), p);
    const std::uint64_t den = mpz_fdiv_ui(lambda.denominator().get_mpz_t(), p);
    return mulmod(num, invmod(den, p), p);
}

struct TowerPrimeData {
    std::uint64_t lam_res = 0;
    PrimePoly fbar;
};

// Usability of q for the tower-level arguments: q > 5, good nonsingular
// reduction, x^n - x - 1 irreducible mod q, and u + lambda nonzero in the
// residue field (equivalently fbar(-lambda) != 0).
std::optional<TowerPrimeData> tower_prime_data(int n, const Rational& lambda, std::uint64_t q) {
    if (q <= 5 || !is_prime(q)) return std::nullopt;
    if (mpz_class(lambda.denominator() % q) == 0) return std::nullopt;
    const std::uint64_t lam = lambda_residue(lambda, q);
    if (lam == 0 || lam == 1) return std::nullopt;
    PrimePoly fbar = PrimePoly::reduce(trinomial(n, Rational(1), Rational(1)), q);
    if (!pp_is_irreducible(fbar)) return std::nullopt;
    if (fbar.eval(q - lam) == 0) return std::nullopt;  // -lambda a root of fbar
    return TowerPrimeData{lam, std::move(fbar)};
}

}  // namespace

GaloisEvidence galois_evidence(int n, int prime_budget, std::uint64_t seed) {
    if (n < 2) throw InvalidParamError("galois_evidence: n must be >= 2");
    if (prime_budget < 1)
        throw ConfigurationError("galois_evidence: prime budget must be >= 1");

    GaloisEvidence out;
    out.n = n;
    out.prime_budget = prime_budget;
    std::uint64_t p = 2;
    for (int i = 0; i < prime_budget; ++i) {
        out.samples.push_back(GaloisSample{p, cycle_type(n, p, seed)});
        p = next_prime(p);
    }
    for (const auto& sample : out.samples) {
        if (!sample.type) continue;
        const auto& parts = sample.type->degrees;
        if (parts.size() == 1 && parts[0] == n) out.has_n_cycle = true;
        int twos = 0, other_even = 0;
        for (int d : parts) {
            if (d == 2)
                ++twos;
            else if (d % 2 == 0)
                ++other_even;
        }
        if (twos == 1 && other_even == 0) out.has_transposition_type = true;
        for (int d : parts)
            if (is_prime(static_cast<std::uint64_t>(d)) && 2 * d > n)
                out.has_long_prime_cycle = true;
    }
    out.verdict = (out.has_n_cycle && out.has_transposition_type && out.has_long_prime_cycle)
                      ? "S_n-certified-by-Jordan"
                      : "inconclusive";
    return out;
}

TorsionBoundResult torsion_bound(long A, long B, int prime_budget,
                                 const std::vector<int>& exponents) {
    if (A == 0 || B == 0 || A == B)
        throw SingularCurveError("torsion_bound: need A != 0, B != 0, A != B");
    if (prime_budget < 1) throw ConfigurationError("torsion_bound: prime budget must be >= 1");
    if (exponents.empty()) throw InvalidParamError("torsion_bound: exponent list is empty");
    int emax = 0;
    for (int e : exponents) {
        if (e < 1) throw InvalidParamError("torsion_bound: exponents must be >= 1");
        emax = std::max(emax, e);
    }

    TorsionBoundResult out;
    out.A = A;
    out.B = B;
    mpz_class g = 0;
    int used = 0;
    const std::uint64_t count_bound = 10000;
    for (std::uint64_t p = 5; p <= count_bound && used < prime_budget; p = next_prime(p)) {
        const std::uint64_t a_res = mpz_fdiv_ui(mpz_class(A).get_mpz_t(), p);
        const std::uint64_t b_res = mpz_fdiv_ui(mpz_class(B).get_mpz_t(), p);
        if (a_res == 0 || b_res == 0 || a_res == b_res) continue;
        const std::vector<mpz_class> orders = order_sequence(a_res, b_res, p, emax, count_bound);
        for (int e : exponents) {
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(e));
            const mpz_class& N = orders[static_cast<std::size_t>(e - 1)];
            out.witnesses.push_back(TorsionWitness{p, e, q, N});
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), N.get_mpz_t());
        }
        ++used;
    }
    if (used == 0)
        throw ConfigurationError("torsion_bound: no good prime found below the count bound");
    out.bound = g;
    return out;
}

TowerTorsionBound tower_torsion_bound(int n, const Rational& lambda, int prime_count,
                                      std::uint64_t count_bound) {
    if (n < 3 || n % 2 == 0)
        throw InvalidParamError("tower_torsion_bound: n must be odd and >= 3");
    if (prime_count < 1)
        throw ConfigurationError("tower_torsion_bound: prime count must be >= 1");

    TowerTorsionBound out;
    mpz_class g = 0;
    for (std::uint64_t q = 7; q <= count_bound && static_cast<int>(out.parts.size()) < prime_count;
         q = next_prime(q)) {
        const auto data = tower_prime_data(n, lambda, q);
        if (!data) continue;
        // Residue degree of the tower at q: n when u + lambda is a square in
        // F_{q^n} (the quadratic splits), 2n otherwise.
        auto field = ExtField::make(q, data->fbar);
        const ExtFieldElement d = ExtFieldElement::generator(field) +
                                  ExtFieldElement::from_int(field, data->lam_res);
        const int eprime = ff_is_square(d) ? n : 2 * n;
        const TraceOrder to = trace_and_order(1, data->lam_res, q, eprime, count_bound);
        out.parts.push_back(TowerBoundPart{q, eprime, to.Ne});
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), to.Ne.get_mpz_t());
    }
    if (static_cast<int>(out.parts.size()) < prime_count)
        throw ConfigurationError(
            "tower_torsion_bound: not enough usable primes below the count bound");
    out.m = g;
    return out;
}

namespace {

// Exact order re-verification: order*P = O and (order/ell)*P != O for each
// prime ell | order.
template <FieldElement F>
bool reverify_order(const CurveParams<F>& params, const CurvePoint<F>& P,
                    const mpz_class& order) {
    if (!scalar_mul(params, order, P).is_infinity()) return false;
    for (const auto& [ell, mult] : factorize_order(order)) {
        (void)mult;
        if (scalar_mul(params, mpz_class(order / ell), P).is_infinity()) return false;
    }
    return true;
}

NonTorsionWitness nontorsion_witness(int n, const Rational& lambda, std::uint64_t p,
                                     std::uint64_t seed) {
    if (p <= 5) throw ExcludedPrimeError("prove_nontorsion: primes must exceed 5");
    const FFInstantiation inst = ff_instantiate(n, lambda, p, seed);
    const FFPoint& fp = inst.points.front();
    const std::uint64_t lam_res = lambda_residue(lambda, p);

    NonTorsionWitness w;
    w.p = p;
    w.root_index = fp.root_index;
    w.factor_degree = fp.degree;
    w.sqrt_in_base = fp.sqrt_in_base;
    w.field_degree = fp.sqrt_in_base ? fp.degree : 2 * fp.degree;
    w.group_order = trace_and_order(1, lam_res, p, w.field_degree).Ne;
    const auto factorization = factorize_order(w.group_order);

    if (std::holds_alternative<BasePoint>(fp.point)) {
        const BasePoint& pt = std::get<BasePoint>(fp.point);
        if (pt.y().is_zero())
            throw ExcludedPrimeError(
                "prove_nontorsion: u + lambda vanishes in the residue field");
        const ExtFieldElement one = ExtFieldElement::from_int(fp.residue_field, 1);
        const ExtFieldElement lam = ExtFieldElement::from_int(fp.residue_field, lam_res);
        CurveParams<ExtFieldElement> params(one, lam);
        w.image_order = point_order(params, pt, w.group_order, factorization);
        w.reverified = reverify_order(params, pt, w.image_order);
    } else {
        using Q = QuadExt<ExtFieldElement>;
        const ExtPoint& pt = std::get<ExtPoint>(fp.point);
        const ExtFieldElement& d = pt.x().d();
        const ExtFieldElement one = ExtFieldElement::from_int(fp.residue_field, 1);
        const ExtFieldElement lam = ExtFieldElement::from_int(fp.residue_field, lam_res);
        CurveParams<Q> params(Q::embed(one, d), Q::embed(lam, d));
        w.image_order = point_order(params, pt, w.group_order, factorization);
        w.reverified = reverify_order(params, pt, w.image_order);
    }
    return w;
}

}  // namespace

NonTorsionProof prove_nontorsion(int n, const Rational& lambda, std::uint64_t p1,
                                 std::uint64_t p2, std::uint64_t seed) {
    if (p1 == p2) throw InvalidParamError("prove_nontorsion: the two primes must differ");
    NonTorsionProof out;
    out.n = n;
    out.lambda = lambda;
    out.witnesses.push_back(nontorsion_witness(n, lambda, p1, seed));
    out.witnesses.push_back(nontorsion_witness(n, lambda, p2, seed));
    const mpz_class& o1 = out.witnesses[0].image_order;
    const mpz_class& o2 = out.witnesses[1].image_order;

    if (o1 != o2) {
        // Reduction at a good odd unramified prime is injective on torsion
        // and preserves the order, so differing image orders rule torsion out.
        out.rule = "orders-differ";
        out.proven = true;
    } else {
        const TowerTorsionBound bound = tower_torsion_bound(n, lambda);
        out.bound_m = bound.m;
        if (o1 > bound.m) {
            out.rule = "order-exceeds-bound";
            out.proven = true;
        } else {
            out.rule = "inconclusive";
            out.proven = false;
        }
    }
    out.verdict = out.proven ? "nontorsion-proven" : "inconclusive";
    return out;
}

std::pair<std::uint64_t, std::uint64_t> default_nontorsion_primes(int n,
                                                                  const Rational& lambda) {
    std::vector<std::uint64_t> found;
    for (std::uint64_t p = 7; p <= 10000 && found.size() < 2; p = next_prime(p)) {
        if (mpz_class(lambda.denominator() % p) == 0) continue;
        const std::uint64_t lam = lambda_residue(lambda, p);
        if (lam == 0 || lam == 1) continue;
        const PrimePoly fbar = PrimePoly::reduce(trinomial(n, Rational(1), Rational(1)), p);
        if (pp_gcd(fbar, fbar.derivative()).degree() > 0) continue;
        // The first canonical factor must not put the image at a 2-torsion
        // point: u + lambda = 0 in the residue field forces y = 0, which can
        // only happen for a linear factor with root -lambda.
        const PrimePoly g0 = ff_factor(fbar).front().first;
        if (g0.degree() == 1 && g0.eval(p - lam) == 0) continue;
        found.push_back(p);
    }
    if (found.size() < 2)
        throw ConfigurationError("default_nontorsion_primes: fewer than two usable primes");
    return {found[0], found[1]};
}

SieveOutcome relation_sieve(int n, const Rational& lambda, std::uint64_t p, int B,
                            const mpz_class& m, std::uint64_t work_cap, std::uint64_t seed) {
    (void)seed;  // kept for interface symmetry; the scan is deterministic
    if (n < 3 || n % 2 == 0)
        throw InvalidParamError("relation_sieve: n must be odd and >= 3");
    if (B < 1) throw InvalidParamError("relation_sieve: bound B must be >= 1");
    if (sgn(m) <= 0) throw InvalidParamError("relation_sieve: multiplier m must be positive");
    if (p <= 5 || !is_prime(p))
        throw ExcludedPrimeError("relation_sieve: p must be a prime greater than 5");
    if (mpz_class(lambda.denominator() % p) == 0)
        throw ExcludedPrimeError("relation_sieve: p divides the denominator of lambda");
    const std::uint64_t lam_res = lambda_residue(lambda, p);
    if (lam_res == 0 || lam_res == 1)
        throw BadReductionError("relation_sieve: lambda reduces to 0 or 1");
    const PrimePoly fbar = PrimePoly::reduce(trinomial(n, Rational(1), Rational(1)), p);
    if (!pp_is_irreducible(fbar))
        throw ExcludedPrimeError(
            "relation_sieve: x^n - x - 1 must be irreducible mod p for a full conjugate orbit");
    if (fbar.eval(p - lam_res) == 0)
        throw ExcludedPrimeError("relation_sieve: u + lambda vanishes in the residue field");

    auto field = ExtField::make(p, fbar);
    const ExtFieldElement lam = ExtFieldElement::from_int(field, lam_res);
    const ExtFieldElement one = ExtFieldElement::from_int(field, 1);
    const mpz_class half((n + 1) / 2);

    // Frobenius orbit u, u^p, u^{p^2}, ... of the root of fbar.
    std::vector<ExtFieldElement> conj;
    ExtFieldElement cur = ExtFieldElement::generator(field);
    for (int i = 0; i < n; ++i) {
        conj.push_back(cur);
        cur = cur.pow(mpz_class(static_cast<unsigned long>(p)));
    }
    assert(cur == conj.front());  // Frobenius has order n on the orbit

    const bool in_base = ff_is_square(conj.front() + lam);
    SieveOutcome out;
    out.p = p;
    out.B = B;
    out.m = m;
    out.sqrt_in_base = in_base;
    out.num_points = n;

    SieveScanResult scan{};
    if (in_base) {
        CurveParams<ExtFieldElement> params(one, lam);
        std::vector<BasePoint> pts;
        for (const auto& u : conj) {
            const ExtFieldElement d = u + lam;
            assert(ff_is_square(d));  // conjugate discriminants share a square class
            pts.push_back(BasePoint::affine(u, u.pow(half) * ff_sqrt(d)));
        }
        scan = sieve_scan(params, pts, m, B, work_cap);
    } else {
        using Q = QuadExt<ExtFieldElement>;
        // Common formal root T with T^2 = d_0; the other discriminants d_i
        // differ from d_0 by squares (two non-squares always do), so
        // sqrt(d_i) = c_i * T with c_i = sqrt(d_i / d_0) in the base field.
        const ExtFieldElement d0 = conj.front() + lam;
        CurveParams<Q> params(Q::embed(one, d0), Q::embed(lam, d0));
        std::vector<ExtPoint> pts;
        for (const auto& u : conj) {
            const ExtFieldElement di = u + lam;
            assert(!ff_is_square(di));
            const ExtFieldElement ci = ff_sqrt(di * d0.inverse());
            const Q y = Q(u.zero(), u.pow(half) * ci, d0);
            pts.push_back(ExtPoint::affine(Q::embed(u, d0), y));
        }
        scan = sieve_scan(params, pts, m, B, work_cap);
    }
    out.visited = scan.visited;
    out.group_ops = scan.group_ops;
    out.flagged = std::move(scan.flagged);
    out.result = out.flagged.empty() ? "no-small-relation" : "flagged";
    return out;
}

SievePipeline relation_sieve_auto(int n, const Rational& lambda, int B,
                                  std::uint64_t work_cap, std::uint64_t seed,
                                  int max_attempts) {
    if (max_attempts < 1)
        throw ConfigurationError("relation_sieve_auto: need at least one attempt");
    SievePipeline out{n, lambda, B, tower_torsion_bound(n, lambda), {}, false};
    int attempts = 0;
    for (std::uint64_t q = 7; q <= 10000 && attempts < max_attempts; q = next_prime(q)) {
        if (!tower_prime_data(n, lambda, q)) continue;
        out.attempts.push_back(relation_sieve(n, lambda, q, B, out.bound.m, work_cap, seed));
        ++attempts;
        if (out.attempts.back().result == "no-small-relation") {
            out.certified = true;
            break;
        }
    }
    if (out.attempts.empty())
        throw ConfigurationError("relation_sieve_auto: no eligible prime below the search bound");
    return out;
}

}  // namespace legendre
