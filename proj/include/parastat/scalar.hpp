#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "parastat/error.hpp"

namespace parastat {

/// Exact rational coefficient. gmpxx keeps results of arithmetic in lowest
/// terms with a positive denominator.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0)
        throw InvalidArgument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// "3", "-1/2"
inline std::string to_string(const Scalar& s) { return s.get_str(); }

inline Scalar sign_power(int exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

} // namespace parastat
