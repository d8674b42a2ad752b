#include "eulerchi/symcurv.hpp"

#include "eulerchi/spherevol.hpp"

namespace eulerchi {

CoefficientSolution odd_coefficients(int n, const Rational& c)
{
    if (n % 2 == 0 || n <= 0) fail(errc::even_dimension, "odd-dimension coefficients need odd n");
    if (c.is_zero()) fail(errc::curvature_zero, "coefficients are singular at zero curvature");
    int k = (n - 1) / 2;

    CoefficientSolution sol;
    sol.n = n;
    sol.curvature = c;
    sol.b.assign(static_cast<size_t>(n) + 1, PiRational());
    sol.c_rhs.assign(static_cast<size_t>(n) + 1, PiRational());

    PiRational omega_n = sphere_volume(n);
    PiRational denom = PiRational(Rational(double_factorial(n - 1)), 0) * omega_n;

    for (int j = 0; 2 * j + 1 <= n; ++j) {
        Rational mag = Rational(double_factorial(n - 2 * j - 2) * double_factorial(2 * j)) *
                       c.pow(k - j);
        sol.b[static_cast<size_t>(2 * j + 1)] = PiRational(-mag, 0) / denom;
    }
    sol.c_rhs[0] = PiRational(Rational(double_factorial(n)) * c.pow(k + 1), 0) / denom;

    // c_0 * w_{n+1} = 2 c^{(n+1)/2}
    PiRational lhs = sol.c_rhs[0] * sphere_volume(n + 1);
    PiRational rhs = PiRational(Rational(2) * c.pow(k + 1), 0);
    if (!(lhs == rhs)) fail(errc::domain_error, "odd coefficient normalization identity failed");

    return sol;
}

} // namespace eulerchi
