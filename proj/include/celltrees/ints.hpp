#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace celltrees {

// Exact arithmetic everywhere: coefficients, Smith normal form, rational
// identities. No machine-word arithmetic on matrix entries.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Quotient nearest to a/p (ties toward zero), so that |a - q*p| <= |p|/2.
// Keeps remainders small during integer-preserving elimination.
inline Int symmetric_quotient(const Int& a, const Int& p) {
    Int q = a / p;
    Int r = a - q * p;
    if (2 * abs_int(r) > abs_int(p))
        q += ((r < 0) == (p < 0)) ? 1 : -1;
    return q;
}

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

}  // namespace celltrees
