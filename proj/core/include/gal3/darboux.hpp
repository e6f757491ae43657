#pragma once

#include <vector>

#include "gal3/check_report.hpp"
#include "gal3/curve.hpp"

namespace gal3 {

/// The Darboux frame {T, Q, n} is parameterized by the rotation angle
/// phi(x) of {Q, n} against {N, B} in the isotropic plane; this generates
/// exactly the frames with T' = kappa_g Q + kappa_n n. No surface patch is
/// modeled, only the frame data along the curve.
struct SurfaceAttachment {
    ScalarFunction phi;
    ScalarFunction phi_d;
};

SurfaceAttachment make_attachment(const ScalarFunction& phi);

struct DarbouxSample {
    double x{0.0};
    GVec3 T, Q, n;
    double kappa_g{0.0};
    double kappa_n{0.0};
    double tau_g{0.0};
    double kappa{0.0};
    double tau{0.0};
    double phi{0.0};
    double phi_prime{0.0};
};

/// Q = cos(phi) N + sin(phi) B, n = -sin(phi) N + cos(phi) B;
/// kappa_g = g_dot(T', Q), kappa_n = g_dot(T', n), tau_g = phi' + tau.
/// Degenerate-curvature error propagates from the underlying frame.
DarbouxSample darboux_frame(const Curve& c, const SurfaceAttachment& att, double x);

/// Residuals of the invariant relations at one x: the curvature
/// decomposition kappa^2 = kappa_g^2 + kappa_n^2, and the torsion relation
/// involving bracket = (kappa_g' kappa_n - kappa_g kappa_n')/(kappa_g^2 +
/// kappa_n^2) under BOTH sign conventions for tau_g (tau = tau_g - bracket
/// and tau = -tau_g + bracket). The positive convention closes; the
/// negative one is reported with its honest residual, which equals 2|tau|.
CheckReport verify_kt_relations(const Curve& c, const SurfaceAttachment& att, double x);

/// True iff |tau_g| <= tol at every sample (boundary inclusive).
bool line_of_curvature_check(const std::vector<DarbouxSample>& samples, double tol);

/// True iff the analytic derivative of kappa_g/kappa_n, which equals
/// phi' * kappa^2 / kappa_n^2, is <= tol in absolute value at every sample.
/// Degenerate-ratio error when |kappa_n| is at or below kKappaMin.
bool ratio_constancy_check(const std::vector<DarbouxSample>& samples, double tol);

} // namespace gal3
