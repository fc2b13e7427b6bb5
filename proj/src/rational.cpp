// This file is part of legendre-points.
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "legendre/rational.hpp"

#include <cctype>

namespace legendre {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    if (!valid(num)) throw InvalidParamError("malformed rational: '" + s + "'");
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(num)));
    const std::string den = s.substr(slash + 1);
    if (!valid(den)) throw InvalidParamError("malformed rational: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw DivisionByZeroError("rational with zero denominator: '" + s + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace legendre
