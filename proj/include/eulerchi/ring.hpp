#pragma once

#include "eulerchi/rational.hpp"

#include <type_traits>

namespace eulerchi {

// Glue for algorithms that are generic over the scalar ring
// (Rational, RatFunc, QuadExt<...>, double).

template <class T>
inline T ring_from_int(long long v)
{
    return T(v);
}

template <class T>
inline T ring_from_rational(const Rational& q)
{
    if constexpr (std::is_same_v<T, double>)
        return q.to_double();
    else
        return T(q);
}

inline bool ring_is_zero(double v) { return v == 0.0; }

template <class T>
inline bool ring_is_zero(const T& v)
{
    return v.is_zero();
}

} // namespace eulerchi
