// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end: point construction on twisted Legendre curves over
// trinomial tower fields, identity verification, finite-field instantiation,
// and reduction-based evidence (Galois, torsion, non-torsion, relation sieve).

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "legendre/io.hpp"

namespace {

using namespace legendre;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitEvidenceError = 3;

#ifndef LEGENDRE_DEFAULT_FIXTURES
#define LEGENDRE_DEFAULT_FIXTURES "data/golden_examples.json"
#endif

struct Options {
    std::string format = "text";
    int n = 0;
    int n_max = 0;
    std::string lambda_text = "1";
    std::string a_text, b_text;
    std::string k_text = "1";
    std::uint64_t p = 0;
    int primes = 0;
    std::string primes_list;
    int bound = 2;
    std::uint64_t seed = 0;
    std::uint64_t work_cap = 50000000;
    bool variant = false;
    std::string fixtures = LEGENDRE_DEFAULT_FIXTURES;
};

bool is_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const nlohmann::json& doc, const std::string& text) {
    if (is_json(o))
        std::cout << doc.dump() << "\n";
    else
        std::cout << text;
}

mpz_class parse_mpz(const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw InvalidParamError("not an integer: '" + text + "'");
    }
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty()) throw InvalidParamError("empty entry in prime list");
            out.push_back(parse_mpz(cur).get_ui());
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

// The construction shared by `construct` and `multiply`.
TowerConstruction build_from_options(const Options& o) {
    if (o.variant) return variant_point(o.n, parse_rational(o.lambda_text));
    if (!o.a_text.empty() || !o.b_text.empty()) {
        if (o.a_text.empty() || o.b_text.empty())
            throw InvalidParamError("general curve needs both --A and --B");
        return general_point(o.n, parse_rational(o.a_text), parse_rational(o.b_text));
    }
    return legendre_point(o.n, parse_rational(o.lambda_text));
}

int cmd_construct(const Options& o) {
    const TowerConstruction c = build_from_options(o);
    nlohmann::json doc = json_construction(c);
    doc["command"] = "construct";
    std::string text = "curve: Y^2 = X(X+" + render_rational(c.curve_A) + ")(X+" +
                       render_rational(c.curve_B) + ")\nfield: Q[x]/(" +
                       render_poly(c.field->modulus()) + ")\ntower: t^2 = " + render_nf(c.d) +
                       "\nP = " + render_tower_point(c.point) + "\non curve: yes\n";
    if (c.hypothesis_warning)
        text += "warning: p divides lambda, the trinomial may be reducible\n";
    emit(o, doc, text);
    return kExitOk;
}

int cmd_multiply(const Options& o) {
    const TowerConstruction c = build_from_options(o);
    const mpz_class k = parse_mpz(o.k_text);
    const CurvePoint<TowerElement> R = multiply_point(c, k);
    nlohmann::json doc = json_construction(c);
    doc["command"] = "multiply";
    doc["k"] = k.get_str();
    doc["result"] = json_tower_point(R);
    const std::string text = "P = " + render_tower_point(c.point) + "\n" + k.get_str() +
                             "P = " + render_tower_point(R) + "\n";
    emit(o, doc, text);
    return kExitOk;
}

int cmd_verify_paper(const Options& o) {
    const nlohmann::json payload = load_fixture(o.fixtures);
    if (!payload.contains("examples") || !payload["examples"].is_array())
        throw FixtureError("fixture payload lacks an 'examples' array");

    nlohmann::json checks = nlohmann::json::array();
    std::string text;
    bool all_ok = true;
    for (const auto& ex : payload["examples"]) {
        const int n = ex.at("n").get<int>();
        const Rational lambda = parse_rational(ex.at("lambda").get<std::string>());
        const mpz_class k(ex.at("k").get<int>());
        const TowerConstruction c = legendre_point(n, lambda);
        const CurvePoint<TowerElement> R = multiply_point(c, k);

        const nlohmann::json got_x = json_nf(R.x().a());
        const nlohmann::json got_ya = json_nf(R.y().a());
        const nlohmann::json got_yb = json_nf(R.y().b());
        const bool x_pure = R.x().b().is_zero();
        const bool ok = x_pure && got_x == ex.at("x") && got_ya == ex.at("y").at("a") &&
                        got_yb == ex.at("y").at("b");
        all_ok = all_ok && ok;

        const std::string label =
            "n=" + std::to_string(n) + " lambda=" + render_rational(lambda) + " k=" + k.get_str();
        checks.push_back(nlohmann::json{{"k", ex.at("k")},
                                        {"lambda", ex.at("lambda")},
                                        {"n", n},
                                        {"ok", ok}});
        if (ok) {
            text += "ok    " + label + "\n";
        } else {
            text += "FAIL  " + label + "\n";
            text += "  computed x: " + got_x.dump() + "\n  expected x: " + ex.at("x").dump() +
                    "\n";
            text += "  computed y: {a:" + got_ya.dump() + ",b:" + got_yb.dump() +
                    "}\n  expected y: " + ex.at("y").dump() + "\n";
        }
    }
    nlohmann::json doc{{"all_ok", all_ok},
                       {"checks", checks},
                       {"command", "verify-paper"},
                       {"fixtures", o.fixtures}};
    text += all_ok ? "all examples verified\n" : "verification FAILED\n";
    emit(o, doc, text);
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_units(const Options& o) {
    const int lo = o.n, hi = (o.n_max >= o.n) ? o.n_max : o.n;
    nlohmann::json reports = nlohmann::json::array();
    std::string text;
    bool all_consistent = true;
    for (int n = lo; n <= hi; ++n) {
        const UnitsReport r = units_identities(n);
        // The first two identities hold for every n; the alternating-sum
        // identity is an odd-n statement and must fail for even n.
        const bool consistent = r.u_identity && r.u_minus_1_identity &&
                                (r.u_plus_1_identity == (n % 2 == 1));
        all_consistent = all_consistent && consistent;
        nlohmann::json jr = json_units(r);
        jr["consistent"] = consistent;
        reports.push_back(jr);
        text += "n=" + std::to_string(n) + ": u " + (r.u_identity ? "ok" : "FAIL") +
                ", u-1 " + (r.u_minus_1_identity ? "ok" : "FAIL") + ", u+1 " +
                (r.u_plus_1_identity ? "ok" : std::string("fails (product ") +
                                                  render_nf(r.u_plus_1_product) + ")") +
                (consistent ? "" : "  <-- inconsistent") + "\n";
    }
    nlohmann::json doc{
        {"all_consistent", all_consistent}, {"command", "units"}, {"reports", reports}};
    emit(o, doc, text);
    return all_consistent ? kExitOk : kExitVerifyFailed;
}

int cmd_universal(const Options& o) {
    if (o.n % 2 == 0) throw ParityError("universal: n must be odd");
    const int lo = o.n, hi = (o.n_max >= o.n) ? o.n_max : o.n;
    nlohmann::json reports = nlohmann::json::array();
    std::string text;
    bool all_ok = true;
    for (int n = lo; n <= hi; n += 2) {
        const UniversalReport r = universal_identity(n);
        all_ok = all_ok && r.identity_holds && r.u_unit;
        reports.push_back(json_universal(r));
        text += "n=" + std::to_string(n) + ": identity " +
                (r.identity_holds ? "ok" : "FAIL") + ", unit " + (r.u_unit ? "ok" : "FAIL") +
                ", u^-1 = " + render_poly(r.u_inverse, "u") + "\n";
    }
    nlohmann::json doc{{"all_ok", all_ok}, {"command", "universal"}, {"reports", reports}};
    emit(o, doc, text);
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_ff_instantiate(const Options& o) {
    const FFInstantiation inst =
        ff_instantiate(o.n, parse_rational(o.lambda_text), o.p, o.seed);
    nlohmann::json doc = json_instantiation(inst);
    doc["command"] = "ff-instantiate";
    std::string text = "x^" + std::to_string(inst.n) + " - x - 1 mod " +
                       std::to_string(inst.p) + ": " + std::to_string(inst.points.size()) +
                       " factor(s)\n";
    for (const auto& fp : inst.points) {
        text += "  [" + std::to_string(fp.root_index) + "] deg " + std::to_string(fp.degree) +
                ", factor " + render_prime_poly(fp.factor) + ", sqrt " +
                (fp.sqrt_in_base ? "in F_p^d" : "in F_p^2d") + "\n      P = " +
                render_ff_point(fp) + "\n";
    }
    emit(o, doc, text);
    return kExitOk;
}

int cmd_evidence_galois(const Options& o) {
    const GaloisEvidence ev = galois_evidence(o.n, o.primes > 0 ? o.primes : 200, o.seed);
    nlohmann::json doc = json_galois(ev);
    doc["command"] = "evidence-galois";
    std::string text = "galois evidence for x^" + std::to_string(ev.n) + " - x - 1, " +
                       std::to_string(ev.samples.size()) + " primes\n";
    text += std::string("  n-cycle: ") + (ev.has_n_cycle ? "yes" : "no") +
            ", transposition type: " + (ev.has_transposition_type ? "yes" : "no") +
            ", long prime cycle: " + (ev.has_long_prime_cycle ? "yes" : "no") + "\n";
    text += "verdict: " + ev.verdict + "\n";
    emit(o, doc, text);
    return kExitOk;
}

int cmd_evidence_torsion(const Options& o) {
    const long A = parse_mpz(o.a_text.empty() ? "1" : o.a_text).get_si();
    const long B = parse_mpz(o.b_text.empty() ? o.lambda_text : o.b_text).get_si();
    const TorsionBoundResult ev = torsion_bound(A, B, o.primes > 0 ? o.primes : 5);
    nlohmann::json doc = json_torsion(ev);
    doc["command"] = "evidence-torsion";
    std::string text = "torsion bound for Y^2 = X(X+" + std::to_string(A) + ")(X+" +
                       std::to_string(B) + "): " + ev.bound.get_str() + "\n";
    for (const auto& w : ev.witnesses)
        text += "  #E(F_" + std::to_string(w.p) + "^" + std::to_string(w.e) + ") = " +
                w.order.get_str() + "\n";
    emit(o, doc, text);
    return kExitOk;
}

int cmd_evidence_nontorsion(const Options& o) {
    std::uint64_t p1 = 0, p2 = 0;
    const Rational lambda = parse_rational(o.lambda_text);
    if (!o.primes_list.empty()) {
        const auto ps = parse_prime_list(o.primes_list);
        if (ps.size() != 2)
            throw InvalidParamError("nontorsion needs exactly two primes, e.g. --primes 7,13");
        p1 = ps[0];
        p2 = ps[1];
    } else {
        std::tie(p1, p2) = default_nontorsion_primes(o.n, lambda);
    }
    const NonTorsionProof ev = prove_nontorsion(o.n, lambda, p1, p2, o.seed);
    nlohmann::json doc = json_nontorsion(ev);
    doc["command"] = "evidence-nontorsion";
    std::string text = "non-torsion evidence, n=" + std::to_string(ev.n) +
                       " lambda=" + render_rational(ev.lambda) + "\n";
    for (const auto& w : ev.witnesses)
        text += "  p=" + std::to_string(w.p) + ": image order " + w.image_order.get_str() +
                " in a group of order " + w.group_order.get_str() + " (field degree " +
                std::to_string(w.field_degree) + ")\n";
    text += "rule: " + ev.rule + "\nverdict: " + ev.verdict + "\n";
    emit(o, doc, text);
    return kExitOk;
}

int cmd_evidence_sieve(const Options& o) {
    const Rational lambda = parse_rational(o.lambda_text);
    SievePipeline pipe{o.n, lambda, o.bound, tower_torsion_bound(o.n, lambda), {}, false};
    if (o.p != 0) {
        pipe.attempts.push_back(
            relation_sieve(o.n, lambda, o.p, o.bound, pipe.bound.m, o.work_cap, o.seed));
        pipe.certified = pipe.attempts.back().result == "no-small-relation";
    } else {
        pipe = relation_sieve_auto(o.n, lambda, o.bound, o.work_cap, o.seed);
    }
    nlohmann::json doc = json_sieve(pipe);
    doc["command"] = "evidence-sieve";
    std::string text = "relation sieve, n=" + std::to_string(pipe.n) +
                       " lambda=" + render_rational(pipe.lambda) +
                       " B=" + std::to_string(pipe.B) + " m=" + pipe.bound.m.get_str() + "\n";
    for (const auto& a : pipe.attempts) {
        text += "  p=" + std::to_string(a.p) + ": " + a.result + ", visited " +
                std::to_string(a.visited) + " vectors";
        if (!a.flagged.empty()) {
            text += ", flagged";
            for (const auto& v : a.flagged) {
                text += " [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    text += (i ? "," : "") + std::to_string(v[i]);
                text += "]";
            }
        }
        text += "\n";
    }
    text += pipe.certified ? "certified: no small relation\n" : "not certified\n";
    emit(o, doc, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"twisted Legendre curve points over trinomial tower fields"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto add_n = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--n", o.n, "trinomial degree n");
        if (required) opt->required();
    };
    auto add_lambda = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", o.lambda_text, "curve parameter lambda (rational)");
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "seed for the randomized factorization splitter");
    };

    std::function<int()> runner;

    auto* construct = app.add_subcommand("construct", "build the tower point P");
    add_n(construct);
    add_lambda(construct);
    construct->add_option("--A", o.a_text, "general curve parameter A (rational)");
    construct->add_option("--B", o.b_text, "general curve parameter B (rational)");
    construct->add_flag("--variant", o.variant,
                        "variant tower x^p - x - lambda with t^2 = u + 1");
    construct->callback([&] { runner = [&] { return cmd_construct(o); }; });

    auto* multiply = app.add_subcommand("multiply", "compute kP on the tower curve");
    add_n(multiply);
    add_lambda(multiply);
    multiply->add_option("--A", o.a_text, "general curve parameter A (rational)");
    multiply->add_option("--B", o.b_text, "general curve parameter B (rational)");
    multiply->add_option("--k", o.k_text, "multiplier k (integer)")->required();
    multiply->callback([&] { runner = [&] { return cmd_multiply(o); }; });

    auto* verify = app.add_subcommand("verify-paper", "check the golden worked examples");
    verify->add_option("--fixtures", o.fixtures, "path to the golden fixture file");
    verify->callback([&] { runner = [&] { return cmd_verify_paper(o); }; });

    auto* units = app.add_subcommand("units", "unit identities in Z[u]/(u^n - u - 1)");
    add_n(units);
    units->add_option("--n-max", o.n_max, "verify every n up to this bound");
    units->callback([&] { runner = [&] { return cmd_units(o); }; });

    auto* universal = app.add_subcommand(
        "universal", "lambda-generic verification of the point identity");
    add_n(universal);
    universal->add_option("--n-max", o.n_max, "verify every odd n up to this bound");
    universal->callback([&] { runner = [&] { return cmd_universal(o); }; });

    auto* ffinst = app.add_subcommand("ff-instantiate", "reduce the construction mod p");
    add_n(ffinst);
    add_lambda(ffinst);
    ffinst->add_option("--p", o.p, "prime modulus")->required();
    add_seed(ffinst);
    ffinst->callback([&] { runner = [&] { return cmd_ff_instantiate(o); }; });

    auto* evidence = app.add_subcommand("evidence", "reduction-based evidence");
    evidence->require_subcommand(1);

    auto* galois = evidence->add_subcommand("galois", "cycle types of Frobenius mod p");
    add_n(galois);
    galois->add_option("--primes", o.primes, "number of primes to examine");
    add_seed(galois);
    galois->callback([&] { runner = [&] { return cmd_evidence_galois(o); }; });

    auto* torsion = evidence->add_subcommand("torsion", "rational torsion bound");
    torsion->add_option("--A", o.a_text, "curve parameter A (integer)");
    torsion->add_option("--B", o.b_text, "curve parameter B (integer)");
    torsion->add_option("--primes", o.primes, "number of good primes to use");
    torsion->callback([&] { runner = [&] { return cmd_evidence_torsion(o); }; });

    auto* nontorsion =
        evidence->add_subcommand("nontorsion", "prove the point has infinite order");
    add_n(nontorsion);
    add_lambda(nontorsion);
    nontorsion->add_option("--primes", o.primes_list, "two reduction primes, e.g. 7,13");
    add_seed(nontorsion);
    nontorsion->callback([&] { runner = [&] { return cmd_evidence_nontorsion(o); }; });

    auto* sieve = evidence->add_subcommand("sieve", "small-relation sieve on conjugates");
    add_n(sieve);
    add_lambda(sieve);
    sieve->add_option("--bound", o.bound, "exponent bound B");
    sieve->add_option("--p", o.p, "sieve at this prime only (default: auto-select)");
    sieve->add_option("--work-cap", o.work_cap, "abort if (2B+1)^n exceeds this");
    add_seed(sieve);
    sieve->callback([&] { runner = [&] { return cmd_evidence_sieve(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitInvalidParams;
    }

    try {
        return runner();
    } catch (const InvalidParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEvidenceError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitEvidenceError;
    }
}
