#include "eulerchi/spaceform.hpp"

#include <cmath>

namespace eulerchi {

namespace {

// (base)^{k/2} as an exact rational, if representable
std::optional<Rational> rational_half_power(const Rational& base, int k)
{
    if (k % 2 == 0) return base.pow(k / 2);
    Rational root;
    if (!base.sqrt_exact(root)) return std::nullopt;
    return root * base.pow((k - 1) / 2);
}

int shape_dimension(const HypersurfaceModel& model)
{
    if (const auto* cp = std::get_if<CliffordProduct>(&model.shape)) return cp->p + cp->q;
    if (const auto* cpc = std::get_if<AbstractCPC>(&model.shape)) return cpc->curvatures.dimension();
    return model.ambient.ambient_dim - 1;
}

// Fills curvature entries and, when need_volume is set, the exact volume.
ModelCurvatures curvature_data(const HypersurfaceModel& model, bool need_volume)
{
    ModelCurvatures out;

    if (std::holds_alternative<EllipsoidNumeric>(model.shape))
        fail(errc::unsupported_variant, "the numeric ellipsoid has pointwise curvatures");

    if (const auto* gs = std::get_if<GeodesicSphere>(&model.shape)) {
        if (gs->radius.sign() <= 0) fail(errc::domain_error, "geodesic sphere needs positive radius");
        int n = model.ambient.ambient_dim - 1;
        Rational lambda_sq = gs->radius.pow(-2) - model.ambient.c;
        if (lambda_sq.sign() < 0)
            fail(errc::excluded_parameter,
                 "no geodesic sphere of radius " + gs->radius.to_string() + " in this space form");
        out.spec.c = RatFunc(model.ambient.c);
        Rational root;
        if (lambda_sq.sqrt_exact(root)) {
            out.spec.entries.push_back({RatFunc(root), n});
        } else {
            out.symbolic = true;
            out.t_squared = lambda_sq;
            out.spec.entries.push_back({RatFunc::variable(), n});
        }
        if (need_volume) out.volume = sphere_volume(n) * PiRational(gs->radius.pow(n), 0);
        return out;
    }

    if (const auto* cp = std::get_if<CliffordProduct>(&model.shape)) {
        if (!(model.ambient.c == Rational(1)))
            fail(errc::unsupported_variant, "product spheres live in the unit round sphere");
        if (cp->p < 0 || cp->q < 0 || cp->p + cp->q < 1) fail(errc::domain_error, "bad factor dimensions");
        const Rational& r2 = cp->r_squared;
        if (!(r2 > Rational(0) && r2 < Rational(1)))
            fail(errc::domain_error, "factor radius parameter must satisfy 0 < r^2 < 1");
        Rational s2 = Rational(1) - r2;
        out.spec.c = RatFunc(1);

        if (cp->p == 0 || cp->q == 0) {
            // one factor collapses: this is the single geodesic sphere of
            // squared radius 1 - r^2 (p = 0) or r^2 (q = 0)
            int n = cp->p + cp->q;
            Rational rad2 = cp->q == 0 ? r2 : s2;
            Rational lambda_sq = (Rational(1) - rad2) / rad2;
            Rational root;
            if (lambda_sq.sqrt_exact(root)) {
                out.spec.entries.push_back({RatFunc(root), n});
            } else {
                out.symbolic = true;
                out.t_squared = lambda_sq;
                out.spec.entries.push_back({RatFunc::variable(), n});
            }
            if (need_volume) {
                std::optional<Rational> vn = rational_half_power(rad2, n);
                if (!vn) fail(errc::irrational_volume, "sphere volume is irrational for this parameter");
                out.volume = sphere_volume(n) * PiRational(*vn, 0);
            }
            return out;
        }

        // lambda = -sqrt(1-r^2)/r with multiplicity p, mu = r/sqrt(1-r^2)
        // with multiplicity q; lambda mu = -1, so with t standing for mu
        // the first factor carries -1/t and t^2 = r^2/(1-r^2).
        RatFunc t = RatFunc::variable();
        out.symbolic = true;
        out.t_squared = r2 / s2;
        out.spec.entries.push_back({-t.inverse(), cp->p});
        out.spec.entries.push_back({t, cp->q});
        if (need_volume) {
            std::optional<Rational> vp = rational_half_power(r2, cp->p);
            std::optional<Rational> vq = rational_half_power(s2, cp->q);
            if (!vp || !vq)
                fail(errc::irrational_volume,
                     "product-sphere volume needs even factor dimensions or square parameters");
            out.volume = sphere_volume(cp->p) * sphere_volume(cp->q) * PiRational(*vp * *vq, 0);
        }
        return out;
    }

    const auto& cpc = std::get<AbstractCPC>(model.shape);
    if (!(cpc.volume.coeff() > Rational(0)))
        fail(errc::domain_error, "hypersurface volume must be positive");
    out.spec.c = RatFunc(cpc.curvatures.c);
    for (const auto& [v, m] : cpc.curvatures.entries) out.spec.entries.push_back({RatFunc(v), m});
    out.volume = cpc.volume;
    return out;
}

// Constant value of the curvature invariant of the model.
Rational invariant_value(const ModelCurvatures& mc)
{
    RatFunc p = weil_invariant(mc.spec);
    if (p.is_zero()) return Rational(0);
    if (!mc.symbolic) return p.constant_value();
    if (!p.is_even())
        fail(errc::domain_error, "invariant of a square-root curvature model must be even in t");
    return p.eval_even(mc.t_squared);
}

} // namespace

ModelCurvatures model_curvatures(const HypersurfaceModel& model) { return curvature_data(model, true); }

PiRational total_curvature_invariant(const HypersurfaceModel& model)
{
    ModelCurvatures mc = curvature_data(model, false);
    Rational p = invariant_value(mc);
    if (p.is_zero()) return PiRational();
    PiRational volume = curvature_data(model, true).volume;
    return PiRational(p, 0) * volume;
}

PiRational euler_characteristic_closed(const HypersurfaceModel& model)
{
    int n = shape_dimension(model);
    if (n % 2 != 0) fail(errc::odd_dimension, "Euler characteristic of an odd-dimensional model");
    int l = n / 2;

    PiRational total = total_curvature_invariant(model);
    PiRational chi = total / PiRational(Rational(BigInt::pow(BigInt(2), static_cast<unsigned long>(l))), l);
    if (!chi.is_zero() && (!chi.is_pi_free() || !chi.coeff().is_integer()))
        fail(errc::non_integer_result, "Euler characteristic came out as " + chi.to_string());
    return chi;
}

long euler_characteristic_integer(const HypersurfaceModel& model)
{
    PiRational chi = euler_characteristic_closed(model);
    return chi.is_zero() ? 0 : chi.coeff().num().to_longlong();
}

UniPoly<Rational> reilly_residual_symbolic(int n, int i)
{
    if (n < 1) fail(errc::domain_error, "need n >= 1");
    if (i < 0 || i > n) fail(errc::domain_error, "index out of range 0..n");
    using Poly = UniPoly<Rational>;
    Poly u = Poly::variable();
    Poly one_plus_u2 = Poly(1) + u * u;

    // d/dt [ binom(n,i) u^i sin^n ] / (w_n sin^n),  u' = -(1 + u^2),
    // (sin^n)' = n u sin^n
    Rational binom_ni(binomial(n, i));
    Poly lhs;
    if (i >= 1)
        lhs = lhs - Poly(Rational(i) * binom_ni) * u.pow(static_cast<unsigned>(i - 1)) * one_plus_u2;
    lhs = lhs + Poly(Rational(n) * binom_ni) * u.pow(static_cast<unsigned>(i + 1));

    // (i+1) S_{i+1} - c (n-i+1) S_{i-1} with S_j = binom(n,j) u^j, c = 1
    Poly rhs;
    if (i + 1 <= n)
        rhs = rhs + Poly(Rational(i + 1) * Rational(binomial(n, i + 1))) * u.pow(static_cast<unsigned>(i + 1));
    if (i - 1 >= 0)
        rhs = rhs - Poly(Rational(n - i + 1) * Rational(binomial(n, i - 1))) * u.pow(static_cast<unsigned>(i - 1));

    return lhs - rhs;
}

ReillyEval reilly_residual_exact(int n, int i, double rho)
{
    UniPoly<Rational> residual = reilly_residual_symbolic(n, i);
    ReillyEval out;
    out.symbolic_zero = residual.is_zero();

    double u = std::cos(rho) / std::sin(rho);
    double scale = sphere_volume(n).to_double() * std::pow(std::sin(rho), n);
    double binom_ni = Rational(binomial(n, i)).to_double();
    double lhs_poly = binom_ni * (n * std::pow(u, i + 1) - (i >= 1 ? i * std::pow(u, i - 1) * (1 + u * u) : 0.0));
    double rhs_poly = 0.0;
    if (i + 1 <= n) rhs_poly += (i + 1) * Rational(binomial(n, i + 1)).to_double() * std::pow(u, i + 1);
    if (i - 1 >= 0) rhs_poly -= (n - i + 1) * Rational(binomial(n, i - 1)).to_double() * std::pow(u, i - 1);
    out.lhs = scale * lhs_poly;
    out.rhs = scale * rhs_poly;
    out.residual = out.lhs - out.rhs;
    return out;
}

HypersurfaceModel with_parameter(const HypersurfaceModel& base, const Rational& parameter)
{
    HypersurfaceModel out = base;
    if (auto* gs = std::get_if<GeodesicSphere>(&out.shape)) {
        gs->radius = parameter;
        return out;
    }
    if (auto* cp = std::get_if<CliffordProduct>(&out.shape)) {
        cp->r_squared = parameter;
        return out;
    }
    fail(errc::unsupported_variant, "model has no free family parameter");
}

std::vector<PiRational> invariant_over_grid(const HypersurfaceModel& base,
                                            const std::vector<Rational>& parameters)
{
    std::vector<PiRational> distinct;
    for (const Rational& p : parameters) {
        PiRational value = total_curvature_invariant(with_parameter(base, p));
        bool seen = false;
        for (const PiRational& v : distinct) seen = seen || v == value;
        if (!seen) distinct.push_back(value);
    }
    return distinct;
}

namespace {

// floating total invariant of the parallel hypersurface at distance t
double total_invariant_at(const HypersurfaceModel& model, double t)
{
    int n = shape_dimension(model);
    int l = n / 2;
    if (const auto* gs = std::get_if<GeodesicSphere>(&model.shape)) {
        double c = model.ambient.c.to_double();
        double r0 = gs->radius.to_double();
        double dfac = Rational(double_factorial(n - 1)).to_double();
        double wn = sphere_volume(n).to_double();
        if (c > 0) {
            double sc = std::sqrt(c);
            double rho = std::asin(sc * r0) / sc + t;
            double lam = sc * std::cos(sc * rho) / std::sin(sc * rho);
            double vol = wn * std::pow(std::sin(sc * rho) / sc, n);
            return dfac * std::pow(c + lam * lam, l) * vol;
        }
        if (c == 0) {
            double r = r0 + t;
            return dfac * std::pow(1.0 / (r * r), l) * wn * std::pow(r, n);
        }
        double sc = std::sqrt(-c);
        double rho = std::asinh(sc * r0) / sc + t;
        double lam = sc * std::cosh(sc * rho) / std::sinh(sc * rho);
        double vol = wn * std::pow(std::sinh(sc * rho) / sc, n);
        return dfac * std::pow(c + lam * lam, l) * vol;
    }
    if (const auto* cp = std::get_if<CliffordProduct>(&model.shape)) {
        // S^{p,q} at angle s with r = cos(s); parallel motion shifts s
        double s0 = std::acos(std::sqrt(cp->r_squared.to_double()));
        double s = s0 + t;
        double r = std::cos(s), w = std::sin(s);
        CurvatureSpec<double> spec;
        spec.c = 1.0;
        double vol = 1.0;
        if (cp->p > 0) {
            spec.entries.push_back({-w / r, cp->p});
            vol *= sphere_volume(cp->p).to_double() * std::pow(r, cp->p);
        }
        if (cp->q > 0) {
            spec.entries.push_back({r / w, cp->q});
            vol *= sphere_volume(cp->q).to_double() * std::pow(w, cp->q);
        }
        return weil_invariant(spec) * vol;
    }
    fail(errc::unsupported_variant, "no parallel family for this model");
}

} // namespace

double invariance_residual_numeric(const HypersurfaceModel& model, double h)
{
    double f0 = total_invariant_at(model, 0.0);
    double diff = (total_invariant_at(model, h) - total_invariant_at(model, -h)) / (2 * h);
    return std::abs(diff) / std::max(1.0, std::abs(f0));
}

} // namespace eulerchi
