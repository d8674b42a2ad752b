#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/symcurv.hpp"

namespace eulerchi {

// Gamma(k/2) for integer k >= 1, by Gamma(1/2) = sqrt(pi) and the
// recurrence Gamma(x+1) = x Gamma(x). Exact as a pi-graded rational.
inline PiRational gamma_half(int twice_x)
{
    if (twice_x < 1) fail(errc::domain_error, "gamma at a nonpositive half-integer");
    if (twice_x == 1) return PiRational::with_half_exp(Rational(1), 1); // sqrt(pi)
    if (twice_x == 2) return PiRational(Rational(1), 0);
    PiRational shift(Rational(twice_x - 2, 2), 0);
    return shift * gamma_half(twice_x - 2);
}

// Volume of the unit m-sphere, w_m = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
inline PiRational sphere_volume(int m)
{
    if (m < 1) fail(errc::domain_error, "sphere volume needs m >= 1");
    PiRational numerator = PiRational::with_half_exp(Rational(2), m + 1);
    return numerator / gamma_half(m + 1);
}

} // namespace eulerchi
