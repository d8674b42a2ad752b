#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/rational.hpp"
#include "eulerchi/unipoly.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace eulerchi {

// Rational function over Q in one indeterminate, kept in canonical form:
// num and den coprime, den with coprime integer coefficients and positive
// leading coefficient, zero represented as 0/1. Canonical form makes
// operator== a genuine equality test.
class RatFunc {
public:
    using Poly = UniPoly<Rational>;

    RatFunc() : num_(), den_(1) {}
    RatFunc(long long v) : num_(v), den_(1) {}
    RatFunc(Rational v) : num_(std::move(v)), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) { normalize(); }
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) fail(errc::zero_denominator, "rational function with zero denominator");
        normalize();
    }

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    Rational constant_value() const
    {
        if (!is_constant()) fail(errc::domain_error, "rational function is not constant");
        if (num_.is_zero()) return Rational(0);
        return num_.coeff(0) / den_.coeff(0);
    }

    RatFunc operator-() const
    {
        RatFunc out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero()) fail(errc::zero_denominator, "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inverse() const
    {
        if (is_zero()) fail(errc::not_invertible, "inverse of the zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const
    {
        RatFunc base = e < 0 ? inverse() : *this;
        unsigned k = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
        return RatFunc(base.num_.pow(k), base.den_.pow(k));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    bool is_pole(const Rational& x) const { return den_.eval(x).is_zero(); }

    Rational eval(const Rational& x) const
    {
        Rational d = den_.eval(x);
        if (d.is_zero()) fail(errc::domain_error, "evaluation at a pole");
        return num_.eval(x) / d;
    }

    double eval_double(double x) const { return num_.eval(x) / den_.eval(x); }

    // Every exponent in num and den even, i.e. f(x) == f(-x) structurally.
    bool is_even() const
    {
        for (int i = 1; i <= num_.degree(); i += 2)
            if (!num_.coeff(i).is_zero()) return false;
        for (int i = 1; i <= den_.degree(); i += 2)
            if (!den_.coeff(i).is_zero()) return false;
        return true;
    }

    // For an even function, evaluate with x^2 = v. A reduced even rational
    // function always has even num and den (an odd factor of either would
    // force a common root at 0), so this never loses information.
    Rational eval_even(const Rational& v) const
    {
        if (!is_even()) fail(errc::domain_error, "rational function has odd terms");
        Rational n(0), d(0), vp(1);
        for (int k = 0; 2 * k <= std::max(num_.degree(), den_.degree()); ++k) {
            n += num_.coeff(2 * k) * vp;
            d += den_.coeff(2 * k) * vp;
            vp *= v;
        }
        if (d.is_zero()) fail(errc::domain_error, "evaluation at a pole");
        return n / d;
    }

    std::string to_string(const std::string& var = "λ") const
    {
        if (is_polynomial()) return num_.to_string(var);
        std::string n = num_.to_string(var);
        std::string d = den_.to_string(var);
        if (num_.degree() > 0) n = "(" + n + ")";
        return n + " / (" + d + ")";
    }

private:
    Poly num_;
    Poly den_;

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divrem(num_, g, q, r);
            num_ = q;
            Poly::divrem(den_, g, q, r);
            den_ = q;
        }
        Rational scale = integer_content(den_);
        if (den_.leading().sign() < 0) scale = -scale;
        Rational inv = scale.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
};

} // namespace eulerchi
