#ifndef PCG_RATIONAL_HPP
#define PCG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pcg/errors.hpp"

namespace pcg {

// Exact scalar substrate: arbitrary-precision integers and rationals.
// cpp_rational keeps gcd(|num|, den) = 1 and den >= 1 as class invariants.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "p" or "p/q" with optional leading '-'.  Used by the CLI for
/// --pencil and point values; expression-level parsing lives in the parser.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorKind::SyntaxError, "empty rational literal");
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        fail(ErrorKind::SyntaxError, "malformed rational literal '" + text + "'");
    }
}

} // namespace pcg

#endif
