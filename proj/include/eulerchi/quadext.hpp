#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/ring.hpp"

#include <string>
#include <utility>

namespace eulerchi {

// Element a + b*sqrt(3) of the quadratic extension of the base ring R.
// The radicand is fixed: sqrt(3) is the only radical the curvature
// ladders for three and six distinct curvatures introduce.
template <class R>
class QuadExt {
public:
    static constexpr int radicand = 3;

    QuadExt() : a_(ring_from_int<R>(0)), b_(ring_from_int<R>(0)) {}
    QuadExt(long long v) : a_(ring_from_int<R>(v)), b_(ring_from_int<R>(0)) {}
    QuadExt(R a) : a_(std::move(a)), b_(ring_from_int<R>(0)) {}
    QuadExt(R a, R b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt3() { return QuadExt(ring_from_int<R>(0), ring_from_int<R>(1)); }

    const R& rational_part() const { return a_; }
    const R& radical_part() const { return b_; }

    bool is_zero() const { return ring_is_zero(a_) && ring_is_zero(b_); }
    bool is_rational() const { return ring_is_zero(b_); }

    QuadExt conjugate() const { return QuadExt(a_, -b_); }
    R norm() const { return a_ * a_ - ring_from_int<R>(radicand) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return QuadExt(x.a_ + y.a_, x.b_ + y.b_); }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return QuadExt(x.a_ - y.a_, x.b_ - y.b_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y)
    {
        return QuadExt(x.a_ * y.a_ + ring_from_int<R>(radicand) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    QuadExt inverse() const
    {
        R n = norm();
        if (ring_is_zero(n)) fail(errc::not_invertible, "quadratic extension element has zero norm");
        R ninv = ring_from_int<R>(1) / n;
        return QuadExt(a_ * ninv, -(b_ * ninv));
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string to_string() const
    {
        return a_.to_string() + " + (" + b_.to_string() + ")*sqrt(3)";
    }

private:
    R a_;
    R b_;
};

} // namespace eulerchi
