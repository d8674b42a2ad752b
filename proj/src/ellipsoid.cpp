#include "eulerchi/ellipsoid.hpp"

#include "eulerchi/error.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace eulerchi {

namespace {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Pointwise surface data of the ellipsoid chart
// F(phi, theta) = (a sin(phi) cos(theta), b sin(phi) sin(theta), c cos(phi)).
struct SurfacePoint {
    double lambda1 = 0; // principal curvatures toward the outward normal
    double lambda2 = 0;
    double area_element = 0; // |F_phi x F_theta|
};

SurfacePoint surface_point(const EllipsoidNumeric& e, double phi, double theta)
{
    double sp = std::sin(phi), cp = std::cos(phi);
    double st = std::sin(theta), ct = std::cos(theta);
    Vec3 f_phi{e.ax * cp * ct, e.ay * cp * st, -e.az * sp};
    Vec3 f_theta{-e.ax * sp * st, e.ay * sp * ct, 0};
    Vec3 f_pp{-e.ax * sp * ct, -e.ay * sp * st, -e.az * cp};
    Vec3 f_pt{-e.ax * cp * st, e.ay * cp * ct, 0};
    Vec3 f_tt{-e.ax * sp * ct, -e.ay * sp * st, 0};

    Vec3 nvec = cross(f_phi, f_theta);
    double w = norm(nvec);
    Vec3 nhat{nvec.x / w, nvec.y / w, nvec.z / w};

    double E = dot(f_phi, f_phi), F = dot(f_phi, f_theta), G = dot(f_theta, f_theta);
    double L = dot(nhat, f_pp), M = dot(nhat, f_pt), N = dot(nhat, f_tt);

    double det1 = E * G - F * F;
    // shape operator toward the outward normal is minus the usual
    // first-form inverse times the second form
    double s1 = -(G * L - 2 * F * M + E * N) / det1;
    double s2 = (L * N - M * M) / det1;

    double disc = s1 * s1 - 4 * s2;
    disc = disc < 0 ? 0 : disc; // clamp roundoff at umbilics
    double root = std::sqrt(disc);

    SurfacePoint out;
    out.lambda1 = (s1 + root) / 2;
    out.lambda2 = (s1 - root) / 2;
    out.area_element = w;
    return out;
}

// S_i of the parallel surface at distance t times its area element,
// relative to the base chart: the parallel surface has curvatures
// lambda/(1 + t lambda) and area element scaled by (1+t l1)(1+t l2).
double parallel_density(const SurfacePoint& p, int i, double t)
{
    double j1 = 1 + t * p.lambda1, j2 = 1 + t * p.lambda2;
    double l1 = p.lambda1 / j1, l2 = p.lambda2 / j2;
    double jac = j1 * j2;
    double s = 0;
    switch (i) {
    case 0: s = 1; break;
    case 1: s = l1 + l2; break;
    case 2: s = l1 * l2; break;
    default: s = 0; break; // S_i vanishes beyond the dimension
    }
    return s * jac * p.area_element;
}

// Gauss-Legendre nodes/weights on (-1, 1) by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = x;
        weights[static_cast<size_t>(i)] = 2.0 / ((1 - x * x) * pp * pp);
    }
}

int thread_budget()
{
    if (const char* env = std::getenv("SPACEFORM_EULER_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Sums rows in a fixed pairwise tree so the result is independent of how
// the rows were scheduled.
double pairwise_sum(std::vector<double> values)
{
    if (values.empty()) return 0;
    while (values.size() > 1) {
        std::vector<double> next;
        next.reserve(values.size() / 2 + 1);
        for (size_t i = 0; i + 1 < values.size(); i += 2) next.push_back(values[i] + values[i + 1]);
        if (values.size() % 2) next.push_back(values.back());
        values = std::move(next);
    }
    return values[0];
}

// integrand(phi, theta) integrated over the chart
template <class F>
double integrate_chart(int resolution, F&& integrand)
{
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(resolution, gl_nodes, gl_weights);
    int m = resolution;
    double dtheta = 2 * M_PI / m;

    std::vector<double> row_sums(static_cast<size_t>(resolution), 0.0);
    auto run_rows = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            double phi = M_PI * (gl_nodes[static_cast<size_t>(i)] + 1) / 2;
            double acc = 0;
            for (int j = 0; j < m; ++j) {
                double theta = dtheta * (j + 0.5);
                acc += integrand(phi, theta);
            }
            row_sums[static_cast<size_t>(i)] = acc * dtheta * gl_weights[static_cast<size_t>(i)] * (M_PI / 2);
        }
    };

    int workers = std::min(thread_budget(), resolution);
    if (workers <= 1) {
        run_rows(0, resolution);
    } else {
        std::vector<std::thread> pool;
        int chunk = (resolution + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int begin = w * chunk, end = std::min(resolution, begin + chunk);
            if (begin < end) pool.emplace_back(run_rows, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return pairwise_sum(std::move(row_sums));
}

void validate(const EllipsoidNumeric& e)
{
    if (e.ax <= 0 || e.ay <= 0 || e.az <= 0) fail(errc::domain_error, "semi-axes must be positive");
    if (e.resolution < 8) fail(errc::mesh_too_coarse, "resolution below the minimum of 8");
}

} // namespace

double ellipsoid_parallel_integral(const EllipsoidNumeric& e, int i, double t)
{
    validate(e);
    return integrate_chart(e.resolution, [&](double phi, double theta) {
        return parallel_density(surface_point(e, phi, theta), i, t);
    });
}

EllipsoidIntegrals ellipsoid_curvature_integrals(const EllipsoidNumeric& e, double t, double tolerance)
{
    validate(e);
    EllipsoidIntegrals out;
    out.s0 = ellipsoid_parallel_integral(e, 0, t);
    out.s1 = ellipsoid_parallel_integral(e, 1, t);
    out.s2 = ellipsoid_parallel_integral(e, 2, t);

    EllipsoidNumeric coarse = e;
    coarse.resolution = std::max(8, e.resolution / 2);
    double s0_coarse = ellipsoid_parallel_integral(coarse, 0, t);
    double s2_coarse = ellipsoid_parallel_integral(coarse, 2, t);
    out.err_estimate = std::max(std::abs(out.s0 - s0_coarse), std::abs(out.s2 - s2_coarse));
    if (out.err_estimate > tolerance * std::max(1.0, std::abs(out.s0)))
        fail(errc::mesh_too_coarse, "quadrature self-estimate exceeds tolerance");
    return out;
}

ReillyNumericReport reilly_residual_numeric(const EllipsoidNumeric& e, int i, double h)
{
    validate(e);
    if (i < 0 || i > 2) fail(errc::domain_error, "index out of range for a surface");
    if (h <= 0) fail(errc::domain_error, "step must be positive");

    auto fd = [&](double step) {
        return (ellipsoid_parallel_integral(e, i, step) - ellipsoid_parallel_integral(e, i, -step)) /
               (2 * step);
    };

    ReillyNumericReport out;
    out.lhs_fd = fd(h);
    double d_half = fd(h / 2);
    // flat ambient: the identity reads d/dt int S_i = (i+1) int S_{i+1}
    out.rhs_quadrature = (i + 1) * ellipsoid_parallel_integral(e, i + 1, 0.0);
    out.residual = std::abs(out.lhs_fd - out.rhs_quadrature);
    out.k_estimate = std::abs(out.lhs_fd - d_half) / (0.75 * h * h);
    double scale = std::max({1.0, std::abs(out.lhs_fd), std::abs(out.rhs_quadrature)});
    out.bound = out.k_estimate * h * h + 1e-9 * scale;
    out.within_bound = out.residual <= out.bound;
    return out;
}

double gauss_bonnet_residual(const EllipsoidNumeric& e)
{
    double total = ellipsoid_parallel_integral(e, 2, 0.0);
    return std::abs(total / (2 * M_PI) - 2.0);
}

double ellipsoid_invariance_residual(const EllipsoidNumeric& e, double h)
{
    double f0 = ellipsoid_parallel_integral(e, 2, 0.0);
    double diff = (ellipsoid_parallel_integral(e, 2, h) - ellipsoid_parallel_integral(e, 2, -h)) / (2 * h);
    return std::abs(diff) / std::max(1.0, std::abs(f0));
}

void quadrature_gate_check(int resolution, double tolerance)
{
    const std::array<double, 3> radii{1.0, 2.0, 0.5};
    for (double r : radii) {
        EllipsoidNumeric sphere{r, r, r, resolution};
        double area = ellipsoid_parallel_integral(sphere, 0, 0.0);
        double total_curv = ellipsoid_parallel_integral(sphere, 2, 0.0);
        double expect_area = 4 * M_PI * r * r;
        if (std::abs(area - expect_area) > tolerance * expect_area)
            fail(errc::mesh_too_coarse, "sphere area check failed at the working resolution");
        if (std::abs(total_curv - 4 * M_PI) > tolerance * 4 * M_PI)
            fail(errc::mesh_too_coarse, "sphere curvature integral check failed");
    }
}

} // namespace eulerchi
