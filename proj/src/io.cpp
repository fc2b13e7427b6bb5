// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>

namespace legendre {

namespace {

// Descending-power renderer shared by the rational and mod-p polynomial
// types.  Each term arrives as (negative?, magnitude string, magnitude==1?).
struct Term {
    bool is_zero = true;
    bool negative = false;
    std::string magnitude;
    bool magnitude_is_one = false;
};

template <typename TermAt>
std::string render_terms(int degree, const std::string& var, TermAt term_at) {
    std::string out;
    bool first = true;
    for (int k = degree; k >= 0; --k) {
        const Term t = term_at(static_cast<std::size_t>(k));
        if (t.is_zero) continue;
        std::string body;
        if (k == 0) {
            body = t.magnitude;
        } else {
            if (!t.magnitude_is_one) body = t.magnitude + "*";
            body += var;
            if (k > 1) body += "^" + std::to_string(k);
        }
        if (first) {
            out = (t.negative ? "-" : "") + body;
            first = false;
        } else {
            out += (t.negative ? " - " : " + ") + body;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_rational(const Rational& r) { return r.str(); }

std::string render_poly(const RationalPoly& f, const std::string& var) {
    if (f.degree() < 0) return "0";
    return render_terms(f.degree(), var, [&](std::size_t k) {
        const Rational c = f.coeff(k);
        if (c.is_zero()) return Term{};
        const Rational mag = c.sign() < 0 ? -c : c;
        return Term{false, c.sign() < 0, mag.str(), mag.is_one()};
    });
}

std::string render_prime_poly(const PrimePoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    return render_terms(f.degree(), var, [&](std::size_t k) {
        const std::uint64_t c = f.coeff(k);
        if (c == 0) return Term{};
        return Term{false, false, std::to_string(c), c == 1};
    });
}

std::string render_nf(const NumberFieldElement& a, const std::string& var) {
    return render_poly(a.as_poly(), var);
}

std::string render_tower(const TowerElement& z, const std::string& var,
                         const std::string& tvar) {
    const bool a_zero = z.a().is_zero();
    const bool b_zero = z.b().is_zero();
    if (b_zero) return render_nf(z.a(), var);
    const std::string tpart = (z.b() == z.b().one())
                                  ? tvar
                                  : "(" + render_nf(z.b(), var) + ")*" + tvar;
    if (a_zero) return tpart;
    return render_nf(z.a(), var) + " + " + tpart;
}

std::string render_tower_point(const CurvePoint<TowerElement>& P, const std::string& var,
                               const std::string& tvar) {
    if (P.is_infinity()) return "O";
    return "(" + render_tower(P.x(), var, tvar) + ", " + render_tower(P.y(), var, tvar) + ")";
}

std::string render_ff(const ExtFieldElement& a, const std::string& var) {
    return render_prime_poly(a.value(), var);
}

std::string render_ff_quad(const QuadExt<ExtFieldElement>& z, const std::string& var,
                           const std::string& tvar) {
    const bool a_zero = z.a().is_zero();
    const bool b_zero = z.b().is_zero();
    if (b_zero) return render_ff(z.a(), var);
    const std::string tpart = (z.b() == z.b().one())
                                  ? tvar
                                  : "(" + render_ff(z.b(), var) + ")*" + tvar;
    if (a_zero) return tpart;
    return render_ff(z.a(), var) + " + " + tpart;
}

std::string render_ff_point(const FFPoint& fp) {
    if (std::holds_alternative<BasePoint>(fp.point)) {
        const BasePoint& pt = std::get<BasePoint>(fp.point);
        if (pt.is_infinity()) return "O";
        return "(" + render_ff(pt.x()) + ", " + render_ff(pt.y()) + ")";
    }
    const ExtPoint& pt = std::get<ExtPoint>(fp.point);
    if (pt.is_infinity()) return "O";
    return "(" + render_ff_quad(pt.x()) + ", " + render_ff_quad(pt.y()) + ")";
}

Rational parse_rational(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    return Rational::from_string(trimmed);
}

RationalPoly parse_poly(const std::string& text, const std::string& var) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidParamError("parse_poly: empty input");

    RationalPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        const std::string term = s.substr(i, j - i);
        if (term.empty()) throw InvalidParamError("parse_poly: dangling sign");

        Rational coeff(1);
        std::size_t k = 0;  // power of var
        const std::size_t star = term.find('*');
        std::string coeff_part, var_part;
        if (star != std::string::npos) {
            coeff_part = term.substr(0, star);
            var_part = term.substr(star + 1);
        } else if (term.compare(0, var.size(), var) == 0) {
            var_part = term;
        } else {
            coeff_part = term;
        }
        if (!coeff_part.empty()) coeff = Rational::from_string(coeff_part);
        if (!var_part.empty()) {
            if (var_part.compare(0, var.size(), var) != 0)
                throw InvalidParamError("parse_poly: unexpected symbol in '" + term + "'");
            const std::string rest = var_part.substr(var.size());
            if (rest.empty()) {
                k = 1;
            } else if (rest.size() >= 2 && rest[0] == '^') {
                for (std::size_t t = 1; t < rest.size(); ++t)
                    if (!std::isdigit(static_cast<unsigned char>(rest[t])))
                        throw InvalidParamError("parse_poly: bad exponent in '" + term + "'");
                k = static_cast<std::size_t>(std::stoul(rest.substr(1)));
            } else {
                throw InvalidParamError("parse_poly: bad term '" + term + "'");
            }
        }
        const Rational signed_coeff = (sign < 0) ? -coeff : coeff;
        out = out + RationalPoly::monomial(k, signed_coeff);
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json coeff_array(const std::vector<Rational>& coeffs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs) arr.push_back(c.str());
    return arr;
}

}  // namespace

nlohmann::json json_poly(const RationalPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    if (f.degree() < 0) {
        arr.push_back("0");
    } else {
        for (int k = 0; k <= f.degree(); ++k)
            arr.push_back(f.coeff(static_cast<std::size_t>(k)).str());
    }
    return nlohmann::json{{"coeffs", arr}};
}

nlohmann::json json_nf(const NumberFieldElement& a) {
    return nlohmann::json{{"coeffs", coeff_array(a.coeffs())}};
}

nlohmann::json json_tower(const TowerElement& z) {
    return nlohmann::json{{"a", json_nf(z.a())}, {"b", json_nf(z.b())}, {"d", json_nf(z.d())}};
}

nlohmann::json json_tower_point(const CurvePoint<TowerElement>& P) {
    if (P.is_infinity()) return nlohmann::json{{"infinity", true}};
    return nlohmann::json{{"x", json_tower(P.x())}, {"y", json_tower(P.y())}};
}

nlohmann::json json_ff(const ExtFieldElement& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint64_t c : a.coeff_vector()) arr.push_back(std::to_string(c));
    return nlohmann::json{{"coeffs", arr}};
}

nlohmann::json json_ff_point(const FFPoint& fp) {
    if (std::holds_alternative<BasePoint>(fp.point)) {
        const BasePoint& pt = std::get<BasePoint>(fp.point);
        if (pt.is_infinity()) return nlohmann::json{{"infinity", true}};
        return nlohmann::json{{"x", json_ff(pt.x())}, {"y", json_ff(pt.y())}};
    }
    const ExtPoint& pt = std::get<ExtPoint>(fp.point);
    if (pt.is_infinity()) return nlohmann::json{{"infinity", true}};
    auto quad = [](const QuadExt<ExtFieldElement>& z) {
        return nlohmann::json{
            {"a", json_ff(z.a())}, {"b", json_ff(z.b())}, {"d", json_ff(z.d())}};
    };
    return nlohmann::json{{"x", quad(pt.x())}, {"y", quad(pt.y())}};
}

nlohmann::json json_construction(const TowerConstruction& c) {
    return nlohmann::json{{"curve", nlohmann::json{{"A", render_rational(c.curve_A)},
                                                   {"B", render_rational(c.curve_B)}}},
                          {"d", json_nf(c.d)},
                          {"modulus", json_poly(c.field->modulus())},
                          {"n", c.field->degree()},
                          {"on_curve", c.verified},
                          {"point", json_tower_point(c.point)},
                          {"warning_p_divides_lambda", c.hypothesis_warning}};
}

nlohmann::json json_instantiation(const FFInstantiation& inst) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& fp : inst.points) {
        pts.push_back(nlohmann::json{{"degree", fp.degree},
                                     {"factor", render_prime_poly(fp.factor)},
                                     {"point", json_ff_point(fp)},
                                     {"root_index", fp.root_index},
                                     {"sqrt_in_base", fp.sqrt_in_base}});
    }
    return nlohmann::json{{"lambda", render_rational(inst.lambda)},
                          {"n", inst.n},
                          {"p", inst.p},
                          {"points", pts}};
}

nlohmann::json json_units(const UnitsReport& r) {
    return nlohmann::json{{"n", r.n},
                          {"parity_note", r.parity_note},
                          {"u_identity", r.u_identity},
                          {"u_minus_one_identity", r.u_minus_1_identity},
                          {"u_plus_one_identity", r.u_plus_1_identity},
                          {"u_plus_one_product", render_nf(r.u_plus_1_product)}};
}

nlohmann::json json_universal(const UniversalReport& r) {
    return nlohmann::json{{"identity_holds", r.identity_holds},
                          {"n", r.n},
                          {"u_inverse", render_poly(r.u_inverse, "u")},
                          {"u_unit", r.u_unit}};
}

nlohmann::json json_galois(const GaloisEvidence& ev) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : ev.samples) {
        if (s.type) {
            samples.push_back(nlohmann::json{{"p", s.p}, {"type", s.type->degrees}});
        } else {
            samples.push_back(nlohmann::json{{"p", s.p}, {"ramified", true}});
        }
    }
    return nlohmann::json{
        {"claim", "the Galois group of x^n - x - 1 over Q is the full symmetric group S_n"},
        {"flags", nlohmann::json{{"has_long_prime_cycle", ev.has_long_prime_cycle},
                                 {"has_n_cycle", ev.has_n_cycle},
                                 {"has_transposition_type", ev.has_transposition_type}}},
        {"n", ev.n},
        {"prime_budget", ev.prime_budget},
        {"samples", samples},
        {"verdict", ev.verdict}};
}

nlohmann::json json_torsion(const TorsionBoundResult& ev) {
    nlohmann::json wits = nlohmann::json::array();
    for (const auto& w : ev.witnesses)
        wits.push_back(nlohmann::json{
            {"e", w.e}, {"order", w.order.get_str()}, {"p", w.p}, {"q", w.q.get_str()}});
    return nlohmann::json{
        {"A", ev.A},
        {"B", ev.B},
        {"bound", ev.bound.get_str()},
        {"claim",
         "the torsion subgroup of Y^2 = X(X+A)(X+B) over Q has order dividing the bound; the "
         "four 2-torsion points attain it when the bound is 4"},
        {"witnesses", wits}};
}

nlohmann::json json_nontorsion(const NonTorsionProof& ev) {
    nlohmann::json wits = nlohmann::json::array();
    for (const auto& w : ev.witnesses)
        wits.push_back(nlohmann::json{{"factor_degree", w.factor_degree},
                                      {"field_degree", w.field_degree},
                                      {"group_order", w.group_order.get_str()},
                                      {"image_order", w.image_order.get_str()},
                                      {"p", w.p},
                                      {"reverified", w.reverified},
                                      {"root_index", w.root_index},
                                      {"sqrt_in_base", w.sqrt_in_base}});
    nlohmann::json out{
        {"claim", "the constructed point on the curve over the tower field has infinite order"},
        {"lambda", render_rational(ev.lambda)},
        {"n", ev.n},
        {"proven", ev.proven},
        {"rule", ev.rule},
        {"verdict", ev.verdict},
        {"witnesses", wits}};
    if (ev.bound_m) out["bound_m"] = ev.bound_m->get_str();
    return out;
}

nlohmann::json json_sieve(const SievePipeline& ev) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : ev.bound.parts)
        parts.push_back(nlohmann::json{
            {"eprime", part.eprime}, {"order", part.order.get_str()}, {"q", part.q}});
    nlohmann::json attempts = nlohmann::json::array();
    for (const auto& a : ev.attempts) {
        nlohmann::json flags = nlohmann::json::array();
        for (const auto& v : a.flagged) flags.push_back(v);
        attempts.push_back(nlohmann::json{{"B", a.B},
                                          {"flagged", flags},
                                          {"group_ops", a.group_ops},
                                          {"num_points", a.num_points},
                                          {"p", a.p},
                                          {"result", a.result},
                                          {"sqrt_in_base", a.sqrt_in_base},
                                          {"visited", a.visited}});
    }
    return nlohmann::json{
        {"B", ev.B},
        {"attempts", attempts},
        {"bound_parts", parts},
        {"certified", ev.certified},
        {"claim",
         "no integer combination of the conjugate points with all exponents bounded by B in "
         "absolute value and not all zero is annihilated by the torsion bound m"},
        {"lambda", render_rational(ev.lambda)},
        {"m", ev.bound.m.get_str()},
        {"n", ev.n}};
}

// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string checksum_string(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

nlohmann::json load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw FixtureError("fixture is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object() || !doc.contains("checksum") || !doc.contains("payload") ||
        !doc["checksum"].is_string())
        throw FixtureError("fixture must be {\"checksum\": ..., \"payload\": ...}");
    const std::string expected = doc["checksum"].get<std::string>();
    const std::string actual = checksum_string(doc["payload"].dump());
    if (expected != actual)
        throw FixtureError("fixture checksum mismatch: stored " + expected + ", computed " +
                           actual);
    return doc["payload"];
}

void save_fixture(const std::string& path, const nlohmann::json& payload) {
    nlohmann::json doc{{"checksum", checksum_string(payload.dump())}, {"payload", payload}};
    std::ofstream out(path);
    if (!out) throw FixtureError("cannot write fixture file: " + path);
    out << doc.dump() << "\n";
}

}  // namespace legendre
