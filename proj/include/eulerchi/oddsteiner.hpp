#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/spherevol.hpp"
#include "eulerchi/symcurv.hpp"

#include <vector>

namespace eulerchi {

// Compact domain Q of odd boundary dimension n = 2k+1 in a space form of
// curvature c, described by the data the boundary identity consumes: its
// volume, Euler characteristic, and the boundary integrals of the odd
// symmetric curvature functions S_1, S_3, ..., S_n.
struct BoundedDomain {
    Rational c;
    int n = 1; // boundary dimension, odd
    PiRational volume;
    long chi = 0;
    std::vector<PiRational> boundary_odd_integrals; // entry j holds the S_{2j+1} integral
};

struct SteinerSides {
    PiRational lhs;
    PiRational rhs;
};

// Both sides of the boundary identity
//   c^{k+1} vol(Q) + (1/n!!) sum_j (2j)!! (2k-2j-1)!! c^{k-j} I_j
//     = (chi(Q)/2) w_{2k+2}.
SteinerSides steiner_sides(const BoundedDomain& q);

// lhs - rhs; zero for every admissible domain.
PiRational steiner_residual(const BoundedDomain& q);

// Band r cos(phi1) <= z <= r cos(phi2) on the round 2-sphere of radius r.
// Parameterized by the rational cosines of the colatitudes so the closed
// forms stay exact.
struct CylinderSpec {
    Rational r;
    Rational cos_phi1; // lower edge (larger colatitude)
    Rational cos_phi2; // upper edge
};

BoundedDomain spherical_cylinder(const CylinderSpec& spec);

// Polar cap of colatitude phi1 on the round 2-sphere of radius r.
struct CapSpec {
    Rational r;
    Rational cos_phi1;
};

BoundedDomain spherical_cap(const CapSpec& spec);

// The boundaryless case: Q the full round (2k+2)-sphere of radius r.
BoundedDomain full_sphere_domain(int k, const Rational& r);

// chi(Q) = k!/(2 pi^{k+1}) * integral of S_{2k+1} over the boundary,
// for domains of Euclidean (2k+2)-space.
Rational euclidean_boundary_chi(int k, const PiRational& integral);

// chi(M) = (2l-1)!!/(2^l pi^l) * integral of S_{2l}, for closed
// hypersurfaces of Euclidean (2l+1)-space.
Rational gauss_kronecker_chi(int l, const PiRational& integral);

// Volume of a finite-volume hyperbolic manifold of even dimension m:
// vol = (-1)^{m/2} (w_m / 2) chi.
PiRational hopf_volume(int m, long chi);

} // namespace eulerchi
