#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qe {

// All quantities in this library are exact: unbounded integers for
// degrees, invariants and thresholds, and unbounded rationals for the
// Kodaira criterion value. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(a/b) for b > 0. cpp_int division truncates toward zero, which
// already equals the floor for non-negative a.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) {
        --q;
    }
    return q;
}

// ceil(a/b) for b > 0. Truncation equals the ceiling for a <= 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) {
        ++q;
    }
    return q;
}

}  // namespace qe
