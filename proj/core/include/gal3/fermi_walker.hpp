#pragma once

#include <vector>

#include "gal3/check_report.hpp"
#include "gal3/curve.hpp"
#include "gal3/darboux.hpp"

namespace gal3 {

enum class FrameBasis { Frenet, Darboux };

/// A vector field along a curve written in a moving basis:
/// X = l1*T + l2*N + l3*B (Frenet) or X = l1*T + l2*Q + l3*n (Darboux).
/// l1 identically zero encodes an isotropic field; the dichotomy is global,
/// so evaluation rejects fields whose l1 lands inside the isotropy cutoff
/// at some x without being identically zero.
struct FrameVectorField {
    FrameBasis basis{FrameBasis::Frenet};
    ScalarFunction l1, l2, l3;
    ScalarFunction l1_d, l2_d, l3_d;
};

FrameVectorField make_field(FrameBasis basis, const ScalarFunction& l1,
                            const ScalarFunction& l2, const ScalarFunction& l3);

bool field_isotropic(const FrameVectorField& X);

/// The moving basis and its derivatives at one x. On a line (kappa
/// identically zero) the frame is undefined, so a constant completion is
/// used instead: the curve's constant tangent with the standard isotropic
/// pair (0,1,0), (0,0,1), all invariants zero, attachment ignored. That
/// keeps every operator below total on lines, where the Fermi-Walker
/// derivative reduces to the plain derivative.
struct FrameAt {
    double x{0.0};
    GVec3 e1, e2, e3;
    GVec3 de1, de2, de3;
    double k1{0.0};    // T' = k1*e2 + k2*e3 (kappa, 0) or (kappa_g, kappa_n)
    double k2{0.0};
    double twist{0.0}; // rotation rate of {e2, e3}: tau or tau_g, 0 on a line
    bool line{false};
};

/// att may be null for the Frenet basis; required for Darboux on non-lines.
FrameAt frame_at(const Curve& c, FrameBasis basis, const SurfaceAttachment* att, double x);

/// Coefficients and their derivatives at x, with the isotropy-dichotomy
/// guard applied.
struct LambdaAt {
    double l1{0.0}, l2{0.0}, l3{0.0};
    double d1{0.0}, d2{0.0}, d3{0.0};
};

LambdaAt lambdas_at(const FrameVectorField& X, double x);

GVec3 field_value(const FrameAt& fr, const LambdaAt& lam);

/// Ambient x-derivative of the field along the curve: sum of l_i' e_i and
/// l_i e_i'.
GVec3 ambient_derivative(const FrameAt& fr, const LambdaAt& lam);

/// The defining expression, evaluated literally: ambient derivative minus
/// g_dot(T,X)*A plus g_dot(A,X)*T with A the acceleration alpha''.
GVec3 fw_derivative_definition(const Curve& c, const FrameVectorField& X, double x,
                               const SurfaceAttachment* att = nullptr);

/// Branch closed form in the Frenet basis: ambient derivative plus
/// kappa*g_dot(N,X)*T for isotropic X, minus kappa*g_dot(T,X)*N otherwise.
/// Must agree with the definition to identity tolerance.
GVec3 fw_derivative_frenet(const Curve& c, const FrameVectorField& X, double x);

/// Branch closed form in the Darboux basis: ambient derivative plus
/// (kappa_g*g_dot(Q,X) + kappa_n*g_dot(n,X))*T for isotropic X, minus
/// g_dot(T,X)*(kappa_g*Q + kappa_n*n) otherwise.
GVec3 fw_derivative_darboux(const Curve& c, const SurfaceAttachment& att,
                            const FrameVectorField& X, double x);

/// Whether the Fermi-Walker derivative of X equals the plain derivative on
/// the samples, and whether that matches the closed-form coincidence
/// condition for X's class (every field on a line; isotropic Frenet fields
/// with no second-member component; isotropic Darboux fields whose
/// curvature pairing vanishes). pass means observation and prediction agree.
CheckReport coincidence_classify(const Curve& c, const SurfaceAttachment* att,
                                 const FrameVectorField& X, const std::vector<double>& xs,
                                 double tol = kTolVerdict);

/// Max over samples and frame members of the Euclidean norm of the
/// Fermi-Walker derivative; the frame is non-rotating iff that stays within
/// tol. Lines use the constant completion and report residual zero.
CheckReport non_rotating_check(const Curve& c, const SurfaceAttachment* att, FrameBasis basis,
                               const std::vector<double>& xs, double tol = kTolVerdict);

} // namespace gal3
