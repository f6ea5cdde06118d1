#pragma once
// Exact rational arithmetic used throughout the symbolic engine.
//
// Rational is GMP's mpq_class: always stored in canonical form
// (coprime numerator/denominator, positive denominator).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <stdexcept>

namespace akns {

using Rational = mpq_class;

// Parses "a", "-a", "a/b" into a canonical rational. Throws std::invalid_argument on bad input.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

// Canonical text form: "a" for integers, "a/b" otherwise (b > 0).
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline int rational_sign(const Rational& q) { return sgn(q); }

// Exact conversion to double (for the numeric oracle only).
inline double rational_to_double(const Rational& q) { return q.get_d(); }

// Rational power with integer exponent >= 0.
inline Rational rational_pow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace akns
