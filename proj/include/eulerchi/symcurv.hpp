#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/rational.hpp"
#include "eulerchi/ring.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace eulerchi {

// k!! for k >= -1, with (-1)!! = 0!! = 1.
inline BigInt double_factorial(long k)
{
    if (k < -1) fail(errc::domain_error, "double factorial of " + std::to_string(k));
    BigInt out(1);
    for (long v = k; v >= 2; v -= 2) out *= BigInt(v);
    return out;
}

inline BigInt factorial(long k)
{
    if (k < 0) fail(errc::domain_error, "factorial of a negative integer");
    BigInt out(1);
    for (long v = 2; v <= k; ++v) out *= BigInt(v);
    return out;
}

inline BigInt binomial(long n, long k)
{
    if (k < 0 || k > n) return BigInt(0);
    BigInt out(1);
    for (long i = 0; i < k; ++i) out = out * BigInt(n - i) / BigInt(i + 1);
    return out;
}

// Ambient curvature plus the principal-curvature multiset of a
// hypersurface, entries stored as (value, multiplicity).
template <class R>
struct CurvatureSpec {
    R c = ring_from_int<R>(0);
    std::vector<std::pair<R, int>> entries;

    int dimension() const
    {
        int n = 0;
        for (const auto& [v, m] : entries) n += m;
        return n;
    }

    std::vector<R> expanded() const
    {
        std::vector<R> out;
        out.reserve(static_cast<size_t>(dimension()));
        for (const auto& [v, m] : entries)
            for (int i = 0; i < m; ++i) out.push_back(v);
        return out;
    }
};

// All elementary symmetric polynomials S_0..S_n of the multiset, by
// incremental expansion of prod_j (1 + lambda_j x).
template <class R>
std::vector<R> all_symmetric(const CurvatureSpec<R>& spec)
{
    std::vector<R> s;
    s.push_back(ring_from_int<R>(1));
    for (const auto& [value, mult] : spec.entries) {
        for (int rep = 0; rep < mult; ++rep) {
            s.push_back(ring_from_int<R>(0));
            for (size_t i = s.size() - 1; i >= 1; --i) s[i] = s[i] + value * s[i - 1];
        }
    }
    return s;
}

template <class R>
std::vector<R> all_symmetric(const std::vector<R>& values)
{
    CurvatureSpec<R> spec;
    for (const R& v : values) spec.entries.push_back({v, 1});
    return all_symmetric(spec);
}

// S_i, with S_i = 0 for i > n so that out-of-range terms of the
// variational identities vanish instead of erroring.
template <class R>
R elementary_symmetric(const CurvatureSpec<R>& spec, int i)
{
    if (i < 0) fail(errc::domain_error, "elementary symmetric polynomial of negative degree");
    if (i > spec.dimension()) return ring_from_int<R>(0);
    return all_symmetric(spec)[static_cast<size_t>(i)];
}

// H_i = S_i / binom(n, i)
template <class R>
R mean_curvature(const CurvatureSpec<R>& spec, int i)
{
    int n = spec.dimension();
    if (i < 0 || i > n) fail(errc::domain_error, "mean curvature index out of range");
    return elementary_symmetric(spec, i) / ring_from_rational<R>(Rational(binomial(n, i)));
}

// The curvature invariant of an even-dimensional hypersurface in a
// space form:
//
//   P = sum_{p=0}^{l} (2l-2p-1)!! (2p-1)!! c^{l-p} S_{2p},   n = 2l,
//
// equal to (2l-1)!! sum_p binom(l,p) c^{l-p} H_{2p}. Both assemblies are
// evaluated and compared; a mismatch would mean a coefficient
// transcription bug, so it is a hard failure.
template <class R>
R weil_invariant(const CurvatureSpec<R>& spec)
{
    int n = spec.dimension();
    if (n % 2 != 0) fail(errc::odd_dimension, "curvature invariant needs even dimension");
    int l = n / 2;
    std::vector<R> s = all_symmetric(spec);

    std::vector<R> c_powers(static_cast<size_t>(l) + 1, ring_from_int<R>(1));
    for (int k = 1; k <= l; ++k) c_powers[static_cast<size_t>(k)] = c_powers[static_cast<size_t>(k - 1)] * spec.c;

    R from_s = ring_from_int<R>(0);
    for (int p = 0; p <= l; ++p) {
        Rational coef(double_factorial(2 * (l - p) - 1) * double_factorial(2 * p - 1));
        from_s = from_s + ring_from_rational<R>(coef) * c_powers[static_cast<size_t>(l - p)] *
                              s[static_cast<size_t>(2 * p)];
    }

    R from_h = ring_from_int<R>(0);
    for (int p = 0; p <= l; ++p) {
        R h2p = s[static_cast<size_t>(2 * p)] / ring_from_rational<R>(Rational(binomial(n, 2 * p)));
        from_h = from_h + ring_from_rational<R>(Rational(binomial(l, p))) *
                              c_powers[static_cast<size_t>(l - p)] * h2p;
    }
    from_h = from_h * ring_from_rational<R>(Rational(double_factorial(2 * l - 1)));

    if constexpr (std::is_same_v<R, double>) {
        double scale = std::max({1.0, std::abs(from_s), std::abs(from_h)});
        if (std::abs(from_s - from_h) > 1e-9 * scale)
            fail(errc::domain_error, "curvature invariant: assemblies disagree beyond roundoff");
    } else {
        if (!(from_s == from_h))
            fail(errc::domain_error,
                 "curvature invariant: symmetric-function and mean-curvature assemblies disagree");
    }
    return from_s;
}

// Residual of the symmetric-function identity used by the Pfaffian
// induction: for 2l values and 1 <= q <= l-1,
//
//   sum_{j=2}^{2l} [ S_{2q}(without 1,j)/(2l-2q-1)
//                    + lambda_1 lambda_j S_{2q-2}(without 1,j)/(2q-1) ]
//     - S_{2q}(all)
//
// which must vanish identically.
template <class R>
R star_identity_residual(const std::vector<R>& values, int q)
{
    int n = static_cast<int>(values.size());
    if (n % 2 != 0 || n < 4) fail(errc::domain_error, "need an even count >= 4 of values");
    int l = n / 2;
    if (q < 1 || q > l - 1) fail(errc::domain_error, "q out of range for the identity");

    R lhs = ring_from_int<R>(0);
    for (int j = 1; j < n; ++j) {
        std::vector<R> rest;
        rest.reserve(static_cast<size_t>(n) - 2);
        for (int k = 1; k < n; ++k)
            if (k != j) rest.push_back(values[static_cast<size_t>(k)]);
        std::vector<R> s = all_symmetric(rest);
        R term = s[static_cast<size_t>(2 * q)] / ring_from_int<R>(2 * l - 2 * q - 1);
        term = term + values[0] * values[static_cast<size_t>(j)] * s[static_cast<size_t>(2 * q - 2)] /
                          ring_from_int<R>(2 * q - 1);
        lhs = lhs + term;
    }
    std::vector<R> s_all = all_symmetric(values);
    return lhs - s_all[static_cast<size_t>(2 * q)];
}

// Coefficient vectors b_0..b_n together with the right-hand sides c_j of
// the recurrence  j*b_{j-1} - c*(n-j)*b_{j+1} = c_j.
struct CoefficientSolution {
    int n = 0;
    Rational curvature;
    std::vector<PiRational> b;
    std::vector<PiRational> c_rhs;

    // j*b_{j-1} - c*(n-j)*b_{j+1} - c_j for every j, with b_{-1} = b_{n+1} = 0
    std::vector<PiRational> recurrence_residual() const
    {
        std::vector<PiRational> out;
        PiRational zero;
        for (int j = 0; j <= n; ++j) {
            PiRational prev = j >= 1 ? b[static_cast<size_t>(j - 1)] : zero;
            PiRational next = j + 1 <= n ? b[static_cast<size_t>(j + 1)] : zero;
            PiRational lhs = PiRational(Rational(j), 0) * prev -
                             PiRational(curvature * Rational(n - j), 0) * next;
            out.push_back(lhs - c_rhs[static_cast<size_t>(j)]);
        }
        return out;
    }
};

// Closed-form solution of the homogeneous recurrence for even n and
// nonzero curvature:
//
//   b_{2p} = (2p-1)!! b_0 / (c^p (n-1)(n-3)...(n-2p+1)),   odd b vanish.
//
// With b_0 = c^l (2l-1)!! these are exactly the coefficients of the
// curvature invariant.
inline CoefficientSolution closed_coefficients_even(int n, const Rational& c, const Rational& b0)
{
    if (n % 2 != 0 || n <= 0) fail(errc::odd_dimension, "closed coefficients need even positive n");
    if (c.is_zero())
        fail(errc::curvature_zero, "flat case admits only the top coefficient; no closed ladder");
    CoefficientSolution sol;
    sol.n = n;
    sol.curvature = c;
    sol.b.assign(static_cast<size_t>(n) + 1, PiRational());
    sol.c_rhs.assign(static_cast<size_t>(n) + 1, PiRational());
    sol.b[0] = PiRational(b0, 0);
    for (int p = 1; 2 * p <= n; ++p) {
        Rational denom(1);
        for (int k = 1; k <= p; ++k) denom *= Rational(n - 2 * k + 1);
        Rational value = Rational(double_factorial(2 * p - 1)) * b0 / (c.pow(p) * denom);
        sol.b[static_cast<size_t>(2 * p)] = PiRational(value, 0);
    }
    return sol;
}

// Odd-dimensional solution with c_j = 0 for j > 0: even b vanish and
//
//   b_{2j+1} = -(n-2j-2)!! (2j)!! c^{(n-2j-1)/2} / ((n-1)!! w_n),
//   c_0      =  n!! c^{(n+1)/2} / ((n-1)!! w_n),
//
// where w_n is the unit n-sphere volume. The identity
// c_0 * w_{n+1} = 2 c^{(n+1)/2} is asserted on construction.
CoefficientSolution odd_coefficients(int n, const Rational& c);

} // namespace eulerchi
