#pragma once

#include <array>
#include <vector>

#include "gal3/check_report.hpp"
#include "gal3/galilean.hpp"
#include "gal3/scalar_function.hpp"

namespace gal3 {

/// An admissible curve x -> (x, y(x), z(x)) on [x_min, x_max]. The tangent
/// has Galilean norm exactly 1, so the parameter is arc length. y_der[k]
/// and z_der[k] hold the k-th coefficient derivatives, k = 0..3.
struct Curve {
    std::array<ScalarFunction, 4> y_der;
    std::array<ScalarFunction, 4> z_der;
    double x_min{0.0};
    double x_max{1.0};
};

/// Frame and invariants at one parameter value. N and B are isotropic unit
/// vectors; kappa > 0 is guaranteed by the constructing call.
struct FrenetSample {
    double x{0.0};
    GVec3 T, N, B;
    double kappa{0.0};
    double tau{0.0};
};

/// D = tau*T + kappa*B drives all three frame equations at once
/// (F' = D x_G F); D_mod = (tau/kappa)*T + B is the normalized variant,
/// exposed as data only.
struct DarbouxVectorPair {
    GVec3 D;
    GVec3 D_mod;
};

Curve make_curve(const ScalarFunction& y, const ScalarFunction& z, double x_min, double x_max);

/// Both coordinate second derivatives identically zero.
bool is_line(const Curve& c);

/// Torsion identically zero: detected structurally when one coordinate's
/// second derivative vanishes identically, otherwise by sampling |tau| at
/// `samples` points (skipping degenerate ones).
bool is_planar(const Curve& c, int samples = 201);

/// alpha, alpha', alpha'', alpha''' up to `order` (0..3). First components
/// are exactly x, 1, 0, 0 by construction.
std::vector<GVec3> eval_derivatives(const Curve& c, double x, int order);

/// kappa(x) = g_norm(alpha'') = sqrt(y''^2 + z''^2). Zero is allowed here;
/// frame and torsion calls reject it.
double curvature(const Curve& c, double x);

/// kappa'(x) = (y''y''' + z''z''')/kappa. Degenerate below kKappaMin.
double curvature_derivative(const Curve& c, double x);

/// tau(x) = (y''z''' - y'''z'')/kappa^2. Degenerate below kKappaMin.
double torsion(const Curve& c, double x);

/// T = alpha', N = alpha''/kappa, B = (1/kappa)(0, -z'', y'') = T x_G N.
/// Degenerate-curvature error below kKappaMin.
FrenetSample frenet_frame(const Curve& c, double x);

/// D from the sample as-is; D_mod requires kappa above kKappaMin.
DarbouxVectorPair darboux_vector(const FrenetSample& s);

/// Central-difference residuals at step h for the three frame equations
/// (T' = kappa N, N' = tau B, B' = -tau N) and for their Darboux-vector
/// form (F' = D x_G F). All norms Euclidean on raw components.
CheckReport frenet_serret_residual(const Curve& c, double x, double h);

/// The curve traced by the moved points, reparameterized by its own first
/// coordinate. Exact: coefficient functions are closed under the motion.
Curve transform_curve(const Curve& c, const GalileanMotion& m);

/// n evenly spaced values covering [c.x_min, c.x_max] inclusive.
std::vector<double> sample_grid(const Curve& c, int n);

} // namespace gal3
