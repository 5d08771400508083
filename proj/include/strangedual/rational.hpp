#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "strangedual/error.hpp"

namespace strangedual {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Rat make_rat(Int n, Int d) {
    if (d == 0) fail("DivisionByZero", "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    return Rat(n, d);
}

inline Int igcd(const Int& a, const Int& b) { return gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) { return lcm(a, b); }

inline std::string to_string(const Rat& q) { return q.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

} // namespace strangedual
