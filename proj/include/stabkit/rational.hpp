#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stabkit {

using Rational = mpq_class;

// Lowest terms, "p/q" or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p/q", "p", and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
    Rational r = (a + b) / 2;
    return r;
}

}  // namespace stabkit
