#include "gal3/curve.hpp"

#include <cmath>
#include <sstream>

#include "gal3/errors.hpp"

namespace gal3 {

namespace {

std::string describe_x(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

void check_domain(const Curve& c, double x) {
    if (x < c.x_min || x > c.x_max || !std::isfinite(x)) {
        std::ostringstream os;
        os.precision(17);
        os << "x=" << x << " outside curve domain [" << c.x_min << ", " << c.x_max << "]";
        throw DomainError(os.str());
    }
}

double kappa_checked(const Curve& c, double x) {
    const double k = curvature(c, x);
    if (k <= kKappaMin)
        throw DegenerateCurvatureError("curvature " + describe_x(k) + " at x=" + describe_x(x) +
                                       " is at or below the degeneracy cutoff");
    return k;
}

} // namespace

Curve make_curve(const ScalarFunction& y, const ScalarFunction& z, double x_min, double x_max) {
    if (!(x_min < x_max)) throw ValidationError("curve domain must satisfy x_min < x_max");
    Curve c;
    c.x_min = x_min;
    c.x_max = x_max;
    c.y_der[0] = sf_trimmed(y);
    c.z_der[0] = sf_trimmed(z);
    for (int k = 1; k < 4; ++k) {
        c.y_der[k] = sf_derivative(c.y_der[k - 1]);
        c.z_der[k] = sf_derivative(c.z_der[k - 1]);
    }
    return c;
}

bool is_line(const Curve& c) {
    return sf_is_zero(c.y_der[2]) && sf_is_zero(c.z_der[2]);
}

bool is_planar(const Curve& c, int samples) {
    if (sf_is_zero(c.y_der[2]) || sf_is_zero(c.z_der[2])) return true;
    for (double x : sample_grid(c, samples)) {
        if (curvature(c, x) <= kKappaMin) continue;
        if (std::abs(torsion(c, x)) > 1e-10) return false;
    }
    return true;
}

std::vector<GVec3> eval_derivatives(const Curve& c, double x, int order) {
    if (order < 0 || order > 3) throw ValidationError("derivative order must be in 0..3");
    check_domain(c, x);
    std::vector<GVec3> out;
    out.reserve(std::size_t(order) + 1);
    out.push_back({x, sf_eval(c.y_der[0], x), sf_eval(c.z_der[0], x)});
    if (order >= 1) out.push_back({1.0, sf_eval(c.y_der[1], x), sf_eval(c.z_der[1], x)});
    if (order >= 2) out.push_back({0.0, sf_eval(c.y_der[2], x), sf_eval(c.z_der[2], x)});
    if (order >= 3) out.push_back({0.0, sf_eval(c.y_der[3], x), sf_eval(c.z_der[3], x)});
    return out;
}

double curvature(const Curve& c, double x) {
    check_domain(c, x);
    return std::hypot(sf_eval(c.y_der[2], x), sf_eval(c.z_der[2], x));
}

double curvature_derivative(const Curve& c, double x) {
    const double k = kappa_checked(c, x);
    return (sf_eval(c.y_der[2], x) * sf_eval(c.y_der[3], x) +
            sf_eval(c.z_der[2], x) * sf_eval(c.z_der[3], x)) / k;
}

double torsion(const Curve& c, double x) {
    const double k = kappa_checked(c, x);
    const double ypp = sf_eval(c.y_der[2], x), zpp = sf_eval(c.z_der[2], x);
    const double yppp = sf_eval(c.y_der[3], x), zppp = sf_eval(c.z_der[3], x);
    return (ypp * zppp - yppp * zpp) / (k * k);
}

FrenetSample frenet_frame(const Curve& c, double x) {
    const double k = kappa_checked(c, x);
    const double yp = sf_eval(c.y_der[1], x), zp = sf_eval(c.z_der[1], x);
    const double ypp = sf_eval(c.y_der[2], x), zpp = sf_eval(c.z_der[2], x);
    const double yppp = sf_eval(c.y_der[3], x), zppp = sf_eval(c.z_der[3], x);
    FrenetSample s;
    s.x = x;
    s.T = {1.0, yp, zp};
    s.N = {0.0, ypp / k, zpp / k};
    s.B = {0.0, -zpp / k, ypp / k};
    s.kappa = k;
    s.tau = (ypp * zppp - yppp * zpp) / (k * k);
    return s;
}

DarbouxVectorPair darboux_vector(const FrenetSample& s) {
    if (s.kappa <= kKappaMin)
        throw DegenerateRatioError("modified vector undefined: curvature " +
                                   describe_x(s.kappa) + " at x=" + describe_x(s.x) +
                                   " is at or below the degeneracy cutoff");
    DarbouxVectorPair p;
    p.D = s.T * s.tau + s.B * s.kappa;
    p.D_mod = s.T * (s.tau / s.kappa) + s.B;
    return p;
}

CheckReport frenet_serret_residual(const Curve& c, double x, double h) {
    if (!(h > 0.0)) throw ValidationError("finite-difference step must be positive");
    const FrenetSample lo = frenet_frame(c, x - h);
    const FrenetSample mid = frenet_frame(c, x);
    const FrenetSample hi = frenet_frame(c, x + h);
    const GVec3 dT = (hi.T - lo.T) / (2.0 * h);
    const GVec3 dN = (hi.N - lo.N) / (2.0 * h);
    const GVec3 dB = (hi.B - lo.B) / (2.0 * h);
    const GVec3 D = darboux_vector(mid).D;

    // Central differences are second order, so the pinned tolerance at the
    // reference step scales with h^2.
    const double ratio = h / kFiniteDiffStep;
    const double tol = kTolFiniteDiff * ratio * ratio;

    CheckReport r;
    report_add(r, "fs_tangent_residual", e_norm(dT - mid.N * mid.kappa), tol);
    report_add(r, "fs_normal_residual", e_norm(dN - mid.B * mid.tau), tol);
    report_add(r, "fs_binormal_residual", e_norm(dB + mid.N * mid.tau), tol);
    report_add(r, "dv_tangent_residual", e_norm(dT - g_cross(D, mid.T)), tol);
    report_add(r, "dv_normal_residual", e_norm(dN - g_cross(D, mid.N)), tol);
    report_add(r, "dv_binormal_residual", e_norm(dB - g_cross(D, mid.B)), tol);
    return r;
}

Curve transform_curve(const Curve& c, const GalileanMotion& m) {
    const double co = std::cos(m.phi), si = std::sin(m.phi);
    const ScalarFunction ys = sf_shifted(c.y_der[0], m.a1);
    const ScalarFunction zs = sf_shifted(c.z_der[0], m.a1);
    const ScalarFunction ybar = sf_sum(sf_poly({m.a2 - m.a3 * m.a1, m.a3}),
                                       sf_sum(sf_scaled(ys, co), sf_scaled(zs, si)));
    const ScalarFunction zbar = sf_sum(sf_poly({m.a4 - m.a5 * m.a1, m.a5}),
                                       sf_sum(sf_scaled(ys, -si), sf_scaled(zs, co)));
    return make_curve(ybar, zbar, c.x_min + m.a1, c.x_max + m.a1);
}

std::vector<double> sample_grid(const Curve& c, int n) {
    if (n < 1) throw ValidationError("sample count must be at least 1");
    std::vector<double> xs;
    xs.reserve(std::size_t(n));
    if (n == 1) {
        xs.push_back(c.x_min);
        return xs;
    }
    const double span = c.x_max - c.x_min;
    for (int i = 0; i < n - 1; ++i) xs.push_back(c.x_min + span * double(i) / double(n - 1));
    xs.push_back(c.x_max);
    return xs;
}

} // namespace gal3
