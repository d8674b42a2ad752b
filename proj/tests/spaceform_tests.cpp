#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerchi/ellipsoid.hpp"
#include "eulerchi/json_codec.hpp"
#include "eulerchi/spaceform.hpp"
#include "support/test_support.hpp"

#include <cmath>

using namespace eulerchi;
using testsupport::Rng;

namespace {

HypersurfaceModel sphere_model(int n, Rational c, Rational r)
{
    return {{c, n + 1}, GeodesicSphere{r}};
}

HypersurfaceModel clifford_model(int p, int q, Rational r2)
{
    return {{Rational(1), p + q + 1}, CliffordProduct{p, q, r2}};
}

} // namespace

TEST_CASE("unit sphere volumes")
{
    CHECK(sphere_volume(1) == PiRational(Rational(2), 1));
    CHECK(sphere_volume(2) == PiRational(Rational(4), 1));
    CHECK(sphere_volume(3) == PiRational(Rational(2), 2));
    CHECK(sphere_volume(4) == PiRational(Rational(8, 3), 2));
    CHECK_THROWS_AS(sphere_volume(0), error);

    // w_{2k+2} / w_{2k+1} = 2 (2k)!! / (2k+1)!!
    for (int k = 0; k <= 6; ++k) {
        PiRational ratio = sphere_volume(2 * k + 2) / sphere_volume(2 * k + 1);
        Rational expect = Rational(2) * Rational(double_factorial(2 * k)) /
                          Rational(double_factorial(2 * k + 1));
        CHECK(ratio == PiRational(expect, 0));
    }
}

TEST_CASE("model curvature data")
{
    SUBCASE("product sphere with two line factors satisfies 1 + lambda mu = 0")
    {
        ModelCurvatures mc = model_curvatures(clifford_model(1, 1, Rational(9, 25)));
        REQUIRE(mc.spec.entries.size() == 2);
        RatFunc prod = mc.spec.entries[0].first * mc.spec.entries[1].first;
        CHECK(RatFunc(1) + prod == RatFunc(0));
    }
    SUBCASE("equatorial sphere in the 3-sphere is flat with volume 4 pi")
    {
        ModelCurvatures mc = model_curvatures(sphere_model(2, Rational(1), Rational(1)));
        CHECK_FALSE(mc.symbolic);
        CHECK(mc.spec.entries[0].first == RatFunc(0));
        CHECK(mc.volume == PiRational(Rational(4), 1));
    }
    SUBCASE("balanced 2x2 product: curvatures square to one, volume 4 pi^2")
    {
        ModelCurvatures mc = model_curvatures(clifford_model(2, 2, Rational(1, 2)));
        CHECK(mc.symbolic);
        CHECK(mc.t_squared == Rational(1));
        CHECK(mc.volume == PiRational(Rational(4), 2));
    }
    SUBCASE("numeric ellipsoid is rejected")
    {
        HypersurfaceModel e{{Rational(0), 3}, EllipsoidNumeric{}};
        CHECK_THROWS_AS((void)model_curvatures(e), error);
    }
    SUBCASE("oversized radius in the round sphere is rejected")
    {
        CHECK_THROWS_AS((void)model_curvatures(sphere_model(2, Rational(1), Rational(3, 2))), error);
    }
}

TEST_CASE("geodesic spheres have Euler characteristic two in every space form")
{
    std::vector<Rational> radii{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(4, 5), Rational(1)};
    for (int n : {2, 4, 6, 8}) {
        for (const Rational& r : radii) {
            CHECK(euler_characteristic_integer(sphere_model(n, Rational(1), r)) == 2);
            CHECK(euler_characteristic_integer(sphere_model(n, Rational(0), r)) == 2);
            CHECK(euler_characteristic_integer(sphere_model(n, Rational(-2), r)) == 2);
            CHECK(euler_characteristic_integer(sphere_model(n, Rational(3, 5), r)) == 2);
        }
    }
}

TEST_CASE("product spheres follow the parity table, independent of the parameter")
{
    std::vector<Rational> grid;
    for (int k = 1; k <= 20; ++k) grid.push_back(Rational(k, 21));

    auto chi_on_grid = [&](int p, int q) {
        long chi0 = euler_characteristic_integer(clifford_model(p, q, grid[0]));
        for (const Rational& r2 : grid)
            CHECK(euler_characteristic_integer(clifford_model(p, q, r2)) == chi0);
        return chi0;
    };

    CHECK(chi_on_grid(1, 1) == 0);
    CHECK(chi_on_grid(1, 3) == 0);
    CHECK(chi_on_grid(3, 3) == 0);
    CHECK(chi_on_grid(2, 2) == 4);
    CHECK(chi_on_grid(2, 4) == 4);
    CHECK(chi_on_grid(4, 4) == 4);
    CHECK(chi_on_grid(0, 4) == 2);
    CHECK(chi_on_grid(0, 6) == 2);

    CHECK_THROWS_AS((void)euler_characteristic_closed(clifford_model(1, 2, Rational(1, 2))), error);
}

TEST_CASE("abstract constant-curvature data reproduces its Euler characteristic")
{
    // the doubled four-curvature family at lambda = 2: invariant 625/3
    AbstractCPC cpc;
    cpc.curvatures.c = Rational(1);
    for (const Rational& v : {Rational(2), Rational(1, 3), Rational(-1, 2), Rational(-3)})
        cpc.curvatures.entries.push_back({v, 2});
    cpc.volume = PiRational(Rational(8 * 16 * 3, 625), 4); // chosen so chi = 8
    HypersurfaceModel model{{Rational(1), 9}, cpc};
    CHECK(euler_characteristic_integer(model) == 8);

    SUBCASE("inconsistent volume is flagged, not rounded")
    {
        AbstractCPC bad = cpc;
        bad.volume = PiRational(Rational(1), 4);
        HypersurfaceModel bad_model{{Rational(1), 9}, bad};
        CHECK_THROWS_AS((void)euler_characteristic_closed(bad_model), error);
    }
}

TEST_CASE("first-variation residual vanishes symbolically for n up to 8")
{
    for (int n = 1; n <= 8; ++n)
        for (int i = 0; i <= n; ++i) CHECK(reilly_residual_symbolic(n, i).is_zero());
    CHECK_THROWS_AS((void)reilly_residual_symbolic(4, 5), error);
}

TEST_CASE("first-variation closed forms at concrete latitudes")
{
    SUBCASE("n = 2, i = 0 at rho = pi/4: both sides are 4 pi")
    {
        ReillyEval ev = reilly_residual_exact(2, 0, M_PI / 4);
        CHECK(ev.symbolic_zero);
        CHECK(ev.lhs == doctest::Approx(4 * M_PI).epsilon(1e-12));
        CHECK(ev.rhs == doctest::Approx(4 * M_PI).epsilon(1e-12));
    }
    SUBCASE("n = 4, i = 2 at rho = pi/3")
    {
        ReillyEval ev = reilly_residual_exact(4, 2, M_PI / 3);
        CHECK(std::abs(ev.residual) <= 1e-12 * std::max(1.0, std::abs(ev.lhs)));
    }
    SUBCASE("i = n reduces to the lower term only")
    {
        ReillyEval ev = reilly_residual_exact(4, 4, 1.0);
        CHECK(ev.symbolic_zero);
        CHECK(std::abs(ev.residual) <= 1e-12 * std::max(1.0, std::abs(ev.lhs)));
    }
}

TEST_CASE("total invariant is constant along families")
{
    SUBCASE("geodesic spheres in the 3-sphere carry 4 pi")
    {
        HypersurfaceModel base = sphere_model(2, Rational(1), Rational(1, 2));
        std::vector<Rational> grid;
        for (int k = 1; k <= 9; ++k) grid.push_back(Rational(k, 10));
        std::vector<PiRational> values = invariant_over_grid(base, grid);
        REQUIRE(values.size() == 1);
        CHECK(values[0] == PiRational(Rational(4), 1));
        CHECK(euler_characteristic_integer(base) == 2);
    }
    SUBCASE("balanced product family carries 16 pi^2")
    {
        HypersurfaceModel base = clifford_model(2, 2, Rational(1, 2));
        std::vector<Rational> grid;
        for (int k = 1; k <= 9; ++k) grid.push_back(Rational(k, 10));
        std::vector<PiRational> values = invariant_over_grid(base, grid);
        REQUIRE(values.size() == 1);
        CHECK(values[0] == PiRational(Rational(16), 2));
    }
    SUBCASE("numeric drift along the parallel family stays at roundoff")
    {
        CHECK(invariance_residual_numeric(sphere_model(2, Rational(1), Rational(1, 2)), 1e-3) <= 1e-8);
        CHECK(invariance_residual_numeric(sphere_model(4, Rational(1), Rational(2, 3)), 1e-3) <= 1e-8);
        CHECK(invariance_residual_numeric(clifford_model(2, 2, Rational(1, 3)), 1e-3) <= 1e-8);
        CHECK(invariance_residual_numeric(clifford_model(2, 4, Rational(2, 5)), 1e-3) <= 1e-8);
    }
}

TEST_CASE("quadrature gate: spheres reproduce closed-form areas")
{
    CHECK_NOTHROW(quadrature_gate_check(128, 1e-10));
}

TEST_CASE("ellipsoid curvature integrals")
{
    SUBCASE("unit sphere")
    {
        EllipsoidNumeric s{1, 1, 1, 128};
        EllipsoidIntegrals ints = ellipsoid_curvature_integrals(s);
        CHECK(ints.s0 == doctest::Approx(4 * M_PI).epsilon(1e-9));
        CHECK(ints.s1 == doctest::Approx(8 * M_PI).epsilon(1e-9));
        CHECK(ints.s2 == doctest::Approx(4 * M_PI).epsilon(1e-9));
    }
    SUBCASE("sphere of radius two still integrates curvature to 4 pi")
    {
        EllipsoidNumeric s{2, 2, 2, 128};
        EllipsoidIntegrals ints = ellipsoid_curvature_integrals(s);
        CHECK(ints.s0 == doctest::Approx(16 * M_PI).epsilon(1e-9));
        CHECK(ints.s2 == doctest::Approx(4 * M_PI).epsilon(1e-9));
    }
    SUBCASE("prolate spheroid keeps total curvature 4 pi")
    {
        EllipsoidNumeric e{1, 1, 2, 192};
        EllipsoidIntegrals ints = ellipsoid_curvature_integrals(e);
        CHECK(ints.s2 == doctest::Approx(4 * M_PI).epsilon(1e-7));
    }
    SUBCASE("coarse meshes are rejected")
    {
        EllipsoidNumeric e{1, 1, 2, 4};
        CHECK_THROWS_AS((void)ellipsoid_curvature_integrals(e), error);
    }
}

TEST_CASE("ellipsoid first-variation checks")
{
    SUBCASE("degenerate ellipsoid = unit sphere, i = 1")
    {
        EllipsoidNumeric s{1, 1, 1, 128};
        ReillyNumericReport rep = reilly_residual_numeric(s, 1, 1e-3);
        // exact sphere values: d/dt of 8 pi (1+t) is 8 pi = 2 * 4 pi
        CHECK(rep.lhs_fd == doctest::Approx(8 * M_PI).epsilon(1e-8));
        CHECK(rep.rhs_quadrature == doctest::Approx(8 * M_PI).epsilon(1e-8));
        CHECK(rep.residual <= 1e-6);
        CHECK(rep.within_bound);
    }
    SUBCASE("prolate spheroid, i = 0: area variation against the trace integral")
    {
        EllipsoidNumeric e{1, 1, 2, 128};
        ReillyNumericReport rep = reilly_residual_numeric(e, 0, 1e-3);
        CHECK(rep.residual <= 1e-5);
        CHECK(rep.within_bound);
    }
    SUBCASE("triaxial ellipsoid, i = 2: both sides vanish")
    {
        EllipsoidNumeric e{1, 2, 3, 128};
        ReillyNumericReport rep = reilly_residual_numeric(e, 2, 1e-3);
        CHECK(std::abs(rep.rhs_quadrature) <= 1e-9);
        CHECK(rep.residual <= 1e-5);
        CHECK(rep.within_bound);
    }
}

TEST_CASE("models and scalars round-trip through the wire encoding")
{
    SUBCASE("rational, rational function, pi-graded")
    {
        Rational q(-22, 7);
        CHECK(rational_from_json(to_json(q)) == q);

        RatFunc f(UniPoly<Rational>({Rational(0), Rational(8)}),
                  UniPoly<Rational>({Rational(1), Rational(0), Rational(-3)}));
        CHECK(ratfunc_from_json(to_json(f)) == f);

        PiRational v(Rational(5, 3), -2);
        CHECK(pigraded_from_json(to_json(v)) == v);
        CHECK(to_json(v)["pi_half_exp"].get<int>() == -4);
    }
    SUBCASE("model descriptors")
    {
        nlohmann::json gs{{"variant", "geodesic_sphere"}, {"n", 4}, {"c", "1"}, {"r", "1/2"}};
        CHECK(euler_characteristic_integer(model_from_json(gs)) == 2);

        nlohmann::json cp{{"variant", "clifford"}, {"p", 2}, {"q", 2}, {"r", "7/10"}};
        CHECK(euler_characteristic_integer(model_from_json(cp)) == 4);

        nlohmann::json cpc{
            {"variant", "abstract_cpc"},
            {"c", "1"},
            {"curvatures", nlohmann::json::array({{{"value", "0"}, {"multiplicity", 2}}})},
            {"vol", {{"coeff", {{"num", "4"}, {"den", "1"}}}, {"pi_half_exp", 2}}}};
        CHECK(euler_characteristic_integer(model_from_json(cpc)) == 2);

        nlohmann::json bad{{"variant", "torus"}};
        CHECK_THROWS_AS((void)model_from_json(bad), error);
    }
}

TEST_CASE("ellipsoid total curvature is the Euler characteristic, three shapes")
{
    CHECK(gauss_bonnet_residual({1, 1, 2, 192}) <= 1e-6);
    CHECK(gauss_bonnet_residual({1, 2, 3, 192}) <= 1e-6);
    CHECK(gauss_bonnet_residual({2, 3, 5, 256}) <= 1e-6);
    CHECK(ellipsoid_invariance_residual({1, 1, 2, 128}, 1e-3) <= 1e-6);
}
