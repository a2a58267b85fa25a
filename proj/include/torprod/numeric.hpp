#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace torprod {

// All exact arithmetic in the library runs on arbitrary-precision integers.
// Intermediate entries in Smith normal form and in the graded-ring
// eliminations can exceed 64 bits even for small inputs, so fixed-width
// integers are never used in the algebraic kernels.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(const Int& a) { return a.str(); }

// Parses "p" or "p/q" into an exact rational.  Used for functional and
// coordinate input; malformed strings throw std::runtime_error.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("rational with zero denominator: " + s);
    return Rat(num, den);
}

// mod-2 reduction of a binomial coefficient via Lucas: C(a,b) is odd iff the
// bits of b are a subset of the bits of a.  Only needed for small a, b but the
// bit test is exact for all non-negative arguments.
inline bool binomial_is_odd(long a, long b) {
    if (b < 0 || b > a) return false;
    return (static_cast<unsigned long>(b) & ~static_cast<unsigned long>(a)) == 0;
}

// Exact binomial coefficient, used by the Pontryagin and Steenrod tests.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace torprod
