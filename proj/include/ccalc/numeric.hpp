#ifndef CCALC_NUMERIC_HPP
#define CCALC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ccalc {

// All coefficient arithmetic is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// gcd(a, b) >= 0, gcd(0, 0) = 0.
inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Extended Euclid: returns g = gcd(a, b) and x, y with a*x + b*y = g.
inline Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : Int(-a);
    }
    Int x1, y1;
    Int g = extended_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Least nonnegative residue of a mod n (n > 0).
inline Int mod_reduce(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Renders a rational as "p" or "p/q".
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace ccalc

#endif
