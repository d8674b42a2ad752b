#pragma once

#include "eulerchi/bigint.hpp"
#include "eulerchi/error.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace eulerchi {

// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    // accepts "p", "-p/q", "p/q"
    static Rational parse(std::string_view s)
    {
        size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_decimal(s));
        return Rational(BigInt::from_decimal(s.substr(0, slash)), BigInt::from_decimal(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const
    {
        Rational out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero()) fail(errc::zero_denominator, "rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const
    {
        if (is_zero()) fail(errc::not_invertible, "inverse of zero");
        return Rational(den_, num_);
    }

    Rational pow(long e) const
    {
        Rational base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        return Rational(BigInt::pow(base.num_, k), BigInt::pow(base.den_, k));
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string to_string() const
    {
        if (den_.is_one()) return num_.to_decimal();
        return num_.to_decimal() + "/" + den_.to_decimal();
    }

    // true (and sets root) iff this is the square of a rational
    bool sqrt_exact(Rational& root) const
    {
        BigInt rn, rd;
        if (!num_.sqrt_exact(rn) || !den_.sqrt_exact(rd)) return false;
        root = Rational(rn, rd);
        return true;
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce()
    {
        if (den_.is_zero()) fail(errc::zero_denominator, "rational with zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace eulerchi
