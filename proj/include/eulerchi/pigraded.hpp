#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/rational.hpp"
#include "eulerchi/ring.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

namespace eulerchi {

// An exact scalar carrying a power of pi: coeff * pi^(half_exp / 2).
// Half-integer powers appear transiently through Gamma(1/2) = sqrt(pi);
// every geometric quantity in the library lands back on a whole power.
// Sums across different grades are rejected: the identities being checked
// are pi-homogeneous, so a mixed-grade sum indicates a modeling bug.
template <class T = Rational>
class PiGraded {
public:
    PiGraded() : coeff_(ring_from_int<T>(0)), half_exp_(0) {}
    PiGraded(long long c) : coeff_(ring_from_int<T>(c)), half_exp_(0) {}
    PiGraded(T coeff, int pi_exp) : coeff_(std::move(coeff)), half_exp_(2 * pi_exp) { canonicalize(); }

    static PiGraded with_half_exp(T coeff, int half_exp)
    {
        PiGraded out;
        out.coeff_ = std::move(coeff);
        out.half_exp_ = half_exp;
        out.canonicalize();
        return out;
    }

    const T& coeff() const { return coeff_; }
    int half_exp() const { return half_exp_; }

    bool is_zero() const { return ring_is_zero(coeff_); }

    bool is_whole_power() const { return half_exp_ % 2 == 0; }

    // pi exponent as a whole number; requires an even half-grade
    int pi_exp() const
    {
        if (!is_whole_power()) fail(errc::domain_error, "half-integer pi power");
        return half_exp_ / 2;
    }

    bool is_pi_free() const { return half_exp_ == 0; }

    PiGraded operator-() const { return with_half_exp(-coeff_, half_exp_); }

    friend PiGraded operator*(const PiGraded& x, const PiGraded& y)
    {
        return with_half_exp(x.coeff_ * y.coeff_, x.half_exp_ + y.half_exp_);
    }
    friend PiGraded operator/(const PiGraded& x, const PiGraded& y)
    {
        if (y.is_zero()) fail(errc::zero_denominator, "pi-graded division by zero");
        return with_half_exp(x.coeff_ / y.coeff_, x.half_exp_ - y.half_exp_);
    }
    friend PiGraded operator+(const PiGraded& x, const PiGraded& y)
    {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.half_exp_ != y.half_exp_)
            fail(errc::domain_error, "sum of pi-graded scalars with different pi exponents");
        return with_half_exp(x.coeff_ + y.coeff_, x.half_exp_);
    }
    friend PiGraded operator-(const PiGraded& x, const PiGraded& y) { return x + (-y); }

    PiGraded& operator*=(const PiGraded& o) { *this = *this * o; return *this; }
    PiGraded& operator+=(const PiGraded& o) { *this = *this + o; return *this; }
    PiGraded& operator-=(const PiGraded& o) { *this = *this - o; return *this; }
    PiGraded& operator/=(const PiGraded& o) { *this = *this / o; return *this; }

    friend bool operator==(const PiGraded& x, const PiGraded& y)
    {
        return x.half_exp_ == y.half_exp_ && x.coeff_ == y.coeff_;
    }
    friend bool operator!=(const PiGraded& x, const PiGraded& y) { return !(x == y); }

    std::string to_string() const
    {
        std::string out = coeff_.to_string();
        if (half_exp_ == 0) return out;
        out += " * pi";
        if (half_exp_ != 2) {
            if (half_exp_ % 2 == 0)
                out += "^" + std::to_string(half_exp_ / 2);
            else
                out += "^(" + std::to_string(half_exp_) + "/2)";
        }
        return out;
    }

    double to_double() const
        requires std::is_same_v<T, Rational>
    {
        return coeff_.to_double() * std::pow(M_PI, half_exp_ / 2.0);
    }

private:
    T coeff_;
    int half_exp_;

    void canonicalize()
    {
        if (ring_is_zero(coeff_)) half_exp_ = 0;
    }
};

using PiRational = PiGraded<Rational>;

// pi^k as a graded unit
inline PiRational pi_power(int k) { return PiRational(Rational(1), k); }

} // namespace eulerchi
