#pragma once

#include <vector>

#include "gal3/check_report.hpp"
#include "gal3/fermi_walker.hpp"
#include "gal3/quadrature.hpp"

namespace gal3 {

/// Transport coefficients at one parameter value. Along a Fermi-Walker
/// transported trajectory lambda1 is constant and (lambda2, lambda3)
/// rotates in the isotropic plane.
struct TransportState {
    double x{0.0};
    double lambda1{0.0};
    double lambda2{0.0};
    double lambda3{0.0};
    FrameBasis basis{FrameBasis::Frenet};
};

/// (dl1, dl2, dl3) = (0, twist*l3, -twist*l2) with twist = tau (Frenet) or
/// tau_g (Darboux), zero on a line. iso_residual carries the algebraic
/// existence constraint for isotropic states (lambda1 == 0): |kappa*l2| in
/// the Frenet basis, |kappa_g*l2 + kappa_n*l3| in the Darboux basis. It is
/// reported, never enforced.
struct TransportRhs {
    double dl1{0.0}, dl2{0.0}, dl3{0.0};
    double iso_residual{0.0};
};

/// tau, tau_g, or 0 on a line.
double transport_twist(const Curve& c, FrameBasis basis, const SurfaceAttachment* att, double x);

TransportRhs transport_ode_rhs(const Curve& c, const SurfaceAttachment* att,
                               const TransportState& s);

/// Classical fixed-step RK4 trajectory from initial.x to x_end, inclusive of
/// both ends; the final partial step is shortened to land exactly on x_end.
/// lambda1 is copied, its derivative being identically zero. Degenerate
/// curvature mid-trajectory raises an error naming the offending x.
std::vector<TransportState> transport_integrate(const Curve& c, FrameBasis basis,
                                                const SurfaceAttachment* att,
                                                const TransportState& initial, double x_end,
                                                double step);

/// The closed-form solution: theta = integral of the twist from x0 to x by
/// adaptive quadrature, then lambda2 = c1 cos(theta) + c2 sin(theta),
/// lambda3 = c2 cos(theta) - c1 sin(theta).
struct ClosedFormTransport {
    double lambda2{0.0};
    double lambda3{0.0};
    double theta{0.0};
};

ClosedFormTransport transport_closed_form(const Curve& c, FrameBasis basis,
                                          const SurfaceAttachment* att, double c1, double c2,
                                          double x0, double x, double quad_tol = kQuadratureTol);

/// An integrated trajectory with the closed form evaluated alongside every
/// state (theta accumulated incrementally with a tight per-step quadrature
/// tolerance so the comparison is dominated by integrator error) and the
/// summary quantities the reports need.
struct TransportRun {
    std::vector<TransportState> states;
    std::vector<double> theta;
    std::vector<double> cf_lambda2;
    std::vector<double> cf_lambda3;
    std::vector<double> deviation;
    double max_deviation{0.0};
    double lambda1_drift{0.0};
    double invariant_drift{0.0};
    double feasibility_residual{0.0};
    bool isotropic{false};
};

TransportRun run_transport_analysis(const Curve& c, FrameBasis basis,
                                    const SurfaceAttachment* att, const TransportState& initial,
                                    double x_end, double step, double per_step_quad_tol = 1e-13);

/// Existence check for Fermi-Walker transport of an isotropic field: the
/// sampled constraint residual plus the closed-form classification (a line
/// carries every isotropic field; a planar non-line carries fields with no
/// second-member component; nothing else qualifies in the Frenet basis; the
/// Darboux basis falls back to the sampled residual on non-lines).
CheckReport isotropic_feasibility(const Curve& c, const SurfaceAttachment* att,
                                  const FrameVectorField& X, const std::vector<double>& xs,
                                  double tol = kTolVerdict);

} // namespace gal3
