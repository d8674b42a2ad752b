#pragma once

#include "eulerchi/spaceform.hpp"

namespace eulerchi {

// Quadrature-backed surface integrals for the triaxial ellipsoid in R^3:
// Gauss-Legendre nodes in the colatitude, uniform half-step-offset nodes
// in the periodic direction, and a fixed pairwise reduction so results do
// not depend on the number of worker threads.

struct EllipsoidIntegrals {
    double s0 = 0; // area
    double s1 = 0; // integral of the curvature trace
    double s2 = 0; // integral of the Gauss curvature
    double err_estimate = 0;
};

// Integrals over the parallel surface at normal distance t (t = 0 is the
// ellipsoid itself).
EllipsoidIntegrals ellipsoid_curvature_integrals(const EllipsoidNumeric& e, double t = 0.0,
                                                 double tolerance = 1e-7);

// integral of S_i over the parallel surface at distance t, i in {0,1,2}
double ellipsoid_parallel_integral(const EllipsoidNumeric& e, int i, double t);

struct ReillyNumericReport {
    double lhs_fd = 0;       // central difference of the S_i integral
    double rhs_quadrature = 0; // integral of (i+1) S_{i+1}
    double residual = 0;
    double k_estimate = 0;   // quadratic error constant from step halving
    double bound = 0;        // K h^2 plus a roundoff floor
    bool within_bound = false;
};

// First-variation check for the unit-speed parallel deformation.
ReillyNumericReport reilly_residual_numeric(const EllipsoidNumeric& e, int i, double h);

// |(1/2pi) * integral of S_2 - 2|
double gauss_bonnet_residual(const EllipsoidNumeric& e);

// central difference of the total invariant (= S_2 integral in the flat
// ambient) along the parallel family, relative
double ellipsoid_invariance_residual(const EllipsoidNumeric& e, double h);

// Verifies the quadrature engine against round spheres before any
// curvature test runs; throws MeshTooCoarse when outside tolerance.
void quadrature_gate_check(int resolution = 256, double tolerance = 1e-10);

} // namespace eulerchi
