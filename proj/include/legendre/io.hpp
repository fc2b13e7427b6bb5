// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef LEGENDRE_IO_HPP
#define LEGENDRE_IO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "legendre/construct.hpp"
#include "legendre/evidence.hpp"

namespace legendre {

// ---------------------------------------------------------------------------
// Human-readable rendering, descending powers: "141/484*u^2 + 505/484*u -
// 851/484".  Unit coefficients drop the "1*", the zero polynomial is "0".

std::string render_rational(const Rational& r);
std::string render_poly(const RationalPoly& f, const std::string& var = "x");
std::string render_prime_poly(const PrimePoly& f, const std::string& var = "x");
std::string render_nf(const NumberFieldElement& a, const std::string& var = "u");
// a + (b)*t, collapsing to one side when the other vanishes.
std::string render_tower(const TowerElement& z, const std::string& var = "u",
                         const std::string& tvar = "t");
// "(x, y)" or "O".
std::string render_tower_point(const CurvePoint<TowerElement>& P, const std::string& var = "u",
                               const std::string& tvar = "t");
std::string render_ff(const ExtFieldElement& a, const std::string& var = "w");
std::string render_ff_quad(const QuadExt<ExtFieldElement>& z, const std::string& var = "w",
                           const std::string& tvar = "t");
std::string render_ff_point(const FFPoint& fp);

// ---------------------------------------------------------------------------
// Parsing (inverse of the renderers for polynomials over Q).

Rational parse_rational(const std::string& text);
// Accepts the rendered form: terms like "3/4*x^2", "x", "-5", any order,
// '+'/'-' separated, optional whitespace.  Throws InvalidParamError on junk.
RationalPoly parse_poly(const std::string& text, const std::string& var = "x");

// ---------------------------------------------------------------------------
// JSON building blocks (nlohmann).  All coefficient lists are ascending by
// power and serialized as exact decimal strings; object keys serialize
// sorted, so dump() is byte-deterministic.

nlohmann::json json_poly(const RationalPoly& f);
nlohmann::json json_nf(const NumberFieldElement& a);
nlohmann::json json_tower(const TowerElement& z);  // {"a":..,"b":..,"d":..}
nlohmann::json json_tower_point(const CurvePoint<TowerElement>& P);
nlohmann::json json_ff(const ExtFieldElement& a);
nlohmann::json json_ff_point(const FFPoint& fp);

nlohmann::json json_construction(const TowerConstruction& c);
nlohmann::json json_instantiation(const FFInstantiation& inst);
nlohmann::json json_units(const UnitsReport& r);
nlohmann::json json_universal(const UniversalReport& r);
nlohmann::json json_galois(const GaloisEvidence& ev);
nlohmann::json json_torsion(const TorsionBoundResult& ev);
nlohmann::json json_nontorsion(const NonTorsionProof& ev);
nlohmann::json json_sieve(const SievePipeline& ev);

// ---------------------------------------------------------------------------
// Fixtures: {"checksum": "fnv1a64:<16 hex>", "payload": {...}} with the
// checksum taken over the compact dump of the payload.

std::uint64_t fnv1a64(const std::string& bytes);
std::string checksum_string(const std::string& bytes);
// Returns the verified payload; throws FixtureError on unreadable file, bad
// shape, or checksum mismatch.
nlohmann::json load_fixture(const std::string& path);
void save_fixture(const std::string& path, const nlohmann::json& payload);

}  // namespace legendre

#endif  // LEGENDRE_IO_HPP
