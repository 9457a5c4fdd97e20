#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pencilstab {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// All arithmetic in this library is exact; there are no floats anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parse "p", "-p" or "p/q" (q > 0 after normalization).
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    };
    if (text.empty()) bad();
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) bad();
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

/// Canonical form "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.str(); }

/// q^e for integer e (negative allowed); q must be nonzero when e < 0.
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && q == 0) throw std::domain_error("zero base with negative exponent");
    Rational base = q, acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return inv ? Rational(1) / acc : acc;
}

}  // namespace pencilstab
