#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/rational.hpp"
#include "eulerchi/ring.hpp"

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace eulerchi {

// Dense univariate polynomial over a commutative ring R, coefficients
// stored by ascending degree. The zero polynomial has an empty
// coefficient list; otherwise the leading coefficient is nonzero.
template <class R>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long long c) { coeffs_.push_back(ring_from_int<R>(c)); trim(); }
    UniPoly(R c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit UniPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return monomial(ring_from_int<R>(1), 1); }

    static UniPoly monomial(R c, int degree)
    {
        UniPoly out;
        if (!ring_is_zero(c)) {
            out.coeffs_.assign(static_cast<size_t>(degree) + 1, ring_from_int<R>(0));
            out.coeffs_.back() = std::move(c);
        }
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& leading() const { return coeffs_.back(); }

    R coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ring_from_int<R>(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    const std::vector<R>& coeffs() const { return coeffs_; }

    UniPoly operator-() const
    {
        UniPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        UniPoly out;
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), ring_from_int<R>(0));
        for (size_t i = 0; i < out.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) out.coeffs_[i] = out.coeffs_[i] + a.coeffs_[i];
            if (i < b.coeffs_.size()) out.coeffs_[i] = out.coeffs_[i] + b.coeffs_[i];
        }
        out.trim();
        return out;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        UniPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ring_from_int<R>(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        out.trim();
        return out;
    }

    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

    UniPoly scaled(const R& s) const
    {
        UniPoly out;
        if (ring_is_zero(s)) return out;
        out.coeffs_ = coeffs_;
        for (auto& c : out.coeffs_) c = c * s;
        out.trim();
        return out;
    }

    UniPoly shifted(int k) const // multiply by x^k
    {
        UniPoly out;
        if (is_zero()) return out;
        out.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), ring_from_int<R>(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i + static_cast<size_t>(k)] = coeffs_[i];
        return out;
    }

    UniPoly pow(unsigned e) const
    {
        UniPoly out(1);
        UniPoly acc = *this;
        while (e) {
            if (e & 1u) out *= acc;
            e >>= 1;
            if (e) acc *= acc;
        }
        return out;
    }

    // Euclidean division; requires the leading coefficient of b invertible.
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r)
    {
        if (b.is_zero()) fail(errc::zero_denominator, "polynomial division by zero");
        q = UniPoly();
        r = a;
        R lead_inv = ring_from_int<R>(1) / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            R c = r.leading() * lead_inv;
            int d = r.degree() - b.degree();
            q += monomial(c, d);
            r -= b.scaled(c).shifted(d);
        }
    }

    UniPoly derivative() const
    {
        UniPoly out;
        for (int i = 1; i <= degree(); ++i)
            out.coeffs_.push_back(coeffs_[static_cast<size_t>(i)] * ring_from_int<R>(i));
        out.trim();
        return out;
    }

    template <class T>
    T eval(const T& x) const
    {
        T acc = ring_from_int<T>(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + convert_coeff<T>(coeffs_[i]);
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b)
    {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<R> coeffs_;

    void trim()
    {
        while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    template <class T>
    static T convert_coeff(const R& c)
    {
        if constexpr (std::is_same_v<T, R>)
            return c;
        else if constexpr (std::is_same_v<T, double>)
            return c.to_double();
        else
            return T(c);
    }
};

template <class R>
std::string UniPoly<R>::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        R c = coeff(i);
        if (ring_is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c.to_string();
        } else {
            if (!(c == ring_from_int<R>(1))) out += c.to_string() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// --- helpers specific to rational coefficients ---

// Positive rational c such that poly/c has coprime integer coefficients.
inline Rational integer_content(const UniPoly<Rational>& p)
{
    if (p.is_zero()) return Rational(1);
    BigInt num_gcd(0), den_lcm(1);
    for (const Rational& c : p.coeffs()) {
        if (c.is_zero()) continue;
        num_gcd = BigInt::gcd(num_gcd, c.num());
        den_lcm = BigInt::lcm(den_lcm, c.den());
    }
    return Rational(num_gcd, den_lcm);
}

// Scale to coprime integer coefficients with positive leading coefficient.
inline UniPoly<Rational> primitive_part(const UniPoly<Rational>& p)
{
    if (p.is_zero()) return p;
    Rational c = integer_content(p);
    if (p.leading().sign() < 0) c = -c;
    return p.scaled(c.inverse());
}

// Monic gcd over Q, with each Euclidean remainder rescaled to its
// primitive part to keep coefficient growth in check.
inline UniPoly<Rational> poly_gcd(UniPoly<Rational> a, UniPoly<Rational> b)
{
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        UniPoly<Rational> q, r;
        UniPoly<Rational>::divrem(a, b, q, r);
        a = std::move(b);
        b = primitive_part(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse()); // monic
}

} // namespace eulerchi
