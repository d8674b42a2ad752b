#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/quadext.hpp"
#include "eulerchi/ratfunc.hpp"
#include "eulerchi/symcurv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eulerchi {

// Element of Q(sqrt(3))(lambda): the coefficient field for the curvature
// ladders with three or six distinct curvatures.
using ExtFunc = QuadExt<RatFunc>;

// Isoparametric family: g distinct constant principal curvatures with
// alternating multiplicities m1, m2, cut out of the unit sphere for
// g >= 3 (the curvature is then fixed at 1).
struct IsoparFamily {
    int g = 1;
    int m1 = 1;
    int m2 = 1;
    Rational c = Rational(1); // meaningful for g <= 2 only
    std::optional<Rational> lambda; // numeric parameter; empty = symbolic

    int dimension() const;
};

struct MunznerVerdict {
    bool ok = false;
    std::string reason;
};

// Admissibility of (g, m1, m2): g in {1,2,3,4,6}, multiplicities
// alternate with step two, all equal for odd g, the known value lists for
// g = 3 and g = 6.
MunznerVerdict munzner_validate(int g, int m1, int m2);

// The distinct principal curvatures as exact functions of lambda = lambda_1,
// matching cot(eps + (i-1) pi/g) with lambda = cot(eps). Defined for
// g in {2, 3, 4, 6} at curvature 1.
std::vector<ExtFunc> exact_ladder(int g);

// Numeric ladder for cross-checking the exact one.
std::vector<double> ladder_numeric(int g, double eps);

double eval_extfunc(const ExtFunc& f, double lambda);

// Cartan's fundamental-formula residuals, one per distinct curvature:
//   sum_{j != i} m_j (c + lambda_j lambda_i)/(lambda_i - lambda_j),
// as exact elements of Q(sqrt(3))(lambda). All must vanish.
std::vector<ExtFunc> cartan_residual(const IsoparFamily& family);

// chi/vol as an exact rational function of lambda times pi^{-l}. The
// sqrt(3) contributions must cancel; their failure to cancel is an error,
// not a result.
PiGraded<RatFunc> chi_density(const IsoparFamily& family);

// True when the parameter hits a pole of some ladder curvature or of the
// density: those lambda values do not correspond to hypersurfaces of the
// family and are reported as excluded.
bool is_excluded_parameter(const IsoparFamily& family, const Rational& lambda);

// chi density evaluated at a concrete parameter; rejects excluded values.
PiRational chi_density_at(const IsoparFamily& family, const Rational& lambda);

// The curvature invariant of the family as a rational function of lambda
// (chi density times 2^l pi^l).
RatFunc family_invariant(const IsoparFamily& family);

struct IdentityCheck {
    std::string name;
    bool ok = false;
    std::string detail;
    // informational checks record a relation without asserting it
    bool informational = false;
};

struct ClosedFormReport {
    std::string family;
    PiGraded<RatFunc> computed;
    PiGraded<RatFunc> printed;
    bool match = false;
    RatFunc difference; // computed - printed, coefficient at the common pi grade
    std::vector<IdentityCheck> checks;
};

// Compares the computed density against the published closed form for the
// family and runs the auxiliary identities the published derivations
// rely on. A mismatch is reported with the exact difference, never
// silently resolved in either direction.
ClosedFormReport compare_closed_forms(const IsoparFamily& family);

// vol = chi * 2^l pi^l / P(lambda), exact.
PiGraded<RatFunc> volume_given_chi(const IsoparFamily& family, long chi);

} // namespace eulerchi
