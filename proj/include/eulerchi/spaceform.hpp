#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/ratfunc.hpp"
#include "eulerchi/spherevol.hpp"
#include "eulerchi/symcurv.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eulerchi {

// Ambient space of constant sectional curvature c and dimension n+1.
struct SpaceForm {
    Rational c;
    int ambient_dim = 3;
};

// Geodesic sphere of Euclidean radius r in N(c). In the round sphere this
// is the latitude sphere with r = sin(rho); in flat and hyperbolic space
// the ordinary metric ball boundary. In every case the principal
// curvatures square to 1/r^2 - c.
struct GeodesicSphere {
    Rational radius;
};

// S^p x S^q product hypersurface of the unit (p+q+1)-sphere, with factor
// radii r and sqrt(1-r^2). Parameterized by r^2 so that the factor-radius
// squares stay rational. p = 0 or q = 0 degenerates to the single
// geodesic sphere.
struct CliffordProduct {
    int p = 1;
    int q = 1;
    Rational r_squared;
};

// Abstract closed hypersurface with constant principal curvatures: the
// caller supplies the curvature data and the total volume.
struct AbstractCPC {
    CurvatureSpec<Rational> curvatures;
    PiRational volume;
};

// Numeric triaxial ellipsoid in R^3 (boundary dimension 2), handled by
// quadrature rather than exact arithmetic.
struct EllipsoidNumeric {
    double ax = 1.0;
    double ay = 1.0;
    double az = 1.0;
    int resolution = 256;
};

struct HypersurfaceModel {
    SpaceForm ambient;
    std::variant<GeodesicSphere, CliffordProduct, AbstractCPC, EllipsoidNumeric> shape;

    int hypersurface_dim() const { return ambient.ambient_dim - 1; }
};

// Constant principal-curvature data of an exact model. When the
// curvature values are irrational square roots, the entries live in
// Q(t) for a formal parameter t whose square is the stated rational;
// every even quantity then evaluates through t^2.
struct ModelCurvatures {
    CurvatureSpec<RatFunc> spec;
    bool symbolic = false;
    Rational t_squared; // value of t^2 when symbolic
    PiRational volume;
};

ModelCurvatures model_curvatures(const HypersurfaceModel& model);

// Total curvature invariant of the closed hypersurface: the constant
// value of the invariant times the volume. Exact.
PiRational total_curvature_invariant(const HypersurfaceModel& model);

// chi = P vol / (2^l pi^l). The result must come out as a pi-free
// integer; anything else signals inconsistent model data.
PiRational euler_characteristic_closed(const HypersurfaceModel& model);

long euler_characteristic_integer(const HypersurfaceModel& model);

// --- first-variation identity for parallel geodesic spheres in the round
// sphere, lambda(t) = cot(rho + t), unit normal speed ---

// Residual polynomial in u = cot(rho) of
//   d/dt [ S_i vol ] - integrand((i+1) S_{i+1} - c (n-i+1) S_{i-1}),
// both sides divided by the common factor w_n sin^n(rho). Must be the
// zero polynomial.
UniPoly<Rational> reilly_residual_symbolic(int n, int i);

struct ReillyEval {
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    bool symbolic_zero = false;
};

// Evaluates both sides at a concrete latitude rho (radians) and also runs
// the symbolic check.
ReillyEval reilly_residual_exact(int n, int i, double rho);

// --- invariance of the total invariant along parallel families ---

// The only built-in deformation: motion at unit speed along the unit
// normal. The family parameter t must stay inside the regularity
// interval of the base model (no focal points crossed).
struct DeformationFamily {
    HypersurfaceModel base;
};

// Exact check: the Euler characteristic across a grid of family
// parameters (radii r for geodesic spheres, r^2 values for products).
// Returns the distinct values found; invariance means size one.
std::vector<PiRational> invariant_over_grid(const HypersurfaceModel& base,
                                            const std::vector<Rational>& parameters);

HypersurfaceModel with_parameter(const HypersurfaceModel& base, const Rational& parameter);

// Numeric check: central difference of the total invariant along the
// parallel family at step h, relative to its value.
double invariance_residual_numeric(const HypersurfaceModel& model, double h);

inline double invariance_residual_numeric(const DeformationFamily& family, double h)
{
    return invariance_residual_numeric(family.base, h);
}

} // namespace eulerchi
