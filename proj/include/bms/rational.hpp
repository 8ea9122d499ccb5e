#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bms {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored reduced with positive denominator;
/// zero is 0/1. (cpp_rational normalizes on every operation.)
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num/den with any signs, normalized. Throws on a zero denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

/// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& r) {
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

}  // namespace bms
