#include "eulerchi/oddsteiner.hpp"

namespace eulerchi {

SteinerSides steiner_sides(const BoundedDomain& q)
{
    if (q.n % 2 != 1 || q.n < 1) fail(errc::domain_error, "boundary dimension must be odd");
    if (q.c.is_zero())
        fail(errc::curvature_zero, "the flat limit is the separate Euclidean boundary formula");
    int k = (q.n - 1) / 2;
    if (static_cast<int>(q.boundary_odd_integrals.size()) != k + 1)
        fail(errc::domain_error, "expected one boundary integral per odd degree");

    SteinerSides sides;
    sides.lhs = PiRational(q.c.pow(k + 1), 0) * q.volume;
    Rational n_fac(double_factorial(q.n));
    for (int j = 0; j <= k; ++j) {
        Rational coef = Rational(double_factorial(2 * j) * double_factorial(2 * (k - j) - 1)) *
                        q.c.pow(k - j) / n_fac;
        sides.lhs += PiRational(coef, 0) * q.boundary_odd_integrals[static_cast<size_t>(j)];
    }
    sides.rhs = PiRational(Rational(q.chi, 2), 0) * sphere_volume(2 * k + 2);
    return sides;
}

PiRational steiner_residual(const BoundedDomain& q)
{
    SteinerSides sides = steiner_sides(q);
    return sides.lhs - sides.rhs;
}

BoundedDomain spherical_cylinder(const CylinderSpec& spec)
{
    if (spec.r.sign() <= 0) fail(errc::domain_error, "sphere radius must be positive");
    const Rational &z1 = spec.cos_phi1, &z2 = spec.cos_phi2;
    if (z1 == z2) fail(errc::degenerate_band, "the band has zero height");
    if (!(z1 < z2) || !(z1 > Rational(-1)) || !(z2 < Rational(1)))
        fail(errc::domain_error, "need -1 < cos(phi1) < cos(phi2) < 1");

    BoundedDomain q;
    q.c = spec.r.pow(-2);
    q.n = 1;
    q.chi = 0;
    q.volume = PiRational(Rational(2) * spec.r.pow(2) * (z2 - z1), 1);
    // boundary circles carry geodesic curvature +/- cot(phi)/r toward the
    // outward normal; each integral collapses to 2 pi cos(phi)
    q.boundary_odd_integrals = {PiRational(Rational(2) * (z1 - z2), 1)};
    return q;
}

BoundedDomain spherical_cap(const CapSpec& spec)
{
    if (spec.r.sign() <= 0) fail(errc::domain_error, "sphere radius must be positive");
    const Rational& z1 = spec.cos_phi1;
    if (!(z1 > Rational(-1)) || !(z1 < Rational(1)))
        fail(errc::domain_error, "need -1 < cos(phi1) < 1");

    BoundedDomain q;
    q.c = spec.r.pow(-2);
    q.n = 1;
    q.chi = 1;
    q.volume = PiRational(Rational(2) * spec.r.pow(2) * (Rational(1) - z1), 1);
    q.boundary_odd_integrals = {PiRational(Rational(2) * z1, 1)};
    return q;
}

BoundedDomain full_sphere_domain(int k, const Rational& r)
{
    if (k < 0) fail(errc::domain_error, "need k >= 0");
    if (r.sign() <= 0) fail(errc::domain_error, "sphere radius must be positive");
    BoundedDomain q;
    q.c = r.pow(-2);
    q.n = 2 * k + 1;
    q.chi = 2;
    q.volume = sphere_volume(2 * k + 2) * PiRational(r.pow(2 * k + 2), 0);
    q.boundary_odd_integrals.assign(static_cast<size_t>(k) + 1, PiRational());
    return q;
}

Rational euclidean_boundary_chi(int k, const PiRational& integral)
{
    if (k < 0) fail(errc::domain_error, "need k >= 0");
    PiRational chi = PiRational(Rational(factorial(k), BigInt(2)), -(k + 1)) * integral;
    if (!chi.is_pi_free()) fail(errc::domain_error, "boundary integral has the wrong pi grade");
    return chi.coeff();
}

Rational gauss_kronecker_chi(int l, const PiRational& integral)
{
    if (l < 1) fail(errc::domain_error, "need l >= 1");
    Rational coef = Rational(double_factorial(2 * l - 1), BigInt::pow(BigInt(2), static_cast<unsigned long>(l)));
    PiRational chi = PiRational(coef, -l) * integral;
    if (!chi.is_pi_free()) fail(errc::domain_error, "curvature integral has the wrong pi grade");
    return chi.coeff();
}

PiRational hopf_volume(int m, long chi)
{
    if (m < 2 || m % 2 != 0) fail(errc::domain_error, "hyperbolic volume formula needs even m >= 2");
    long sign = (m / 2) % 2 == 0 ? 1 : -1;
    if (sign * chi <= 0)
        fail(errc::sign_error, "no finite-volume hyperbolic manifold has this Euler characteristic");
    return PiRational(Rational(sign * chi, 2), 0) * sphere_volume(m);
}

} // namespace eulerchi
