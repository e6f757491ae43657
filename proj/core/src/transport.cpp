#include "gal3/transport.hpp"

#include <cmath>

#include "gal3/errors.hpp"

namespace gal3 {

namespace {

constexpr long kMaxTransportSteps = 50000000;

struct PairDeriv {
    double d2, d3;
};

PairDeriv rhs_pair(double twist, double l2, double l3) {
    return {twist * l3, -twist * l2};
}

} // namespace

double transport_twist(const Curve& c, FrameBasis basis, const SurfaceAttachment* att, double x) {
    return frame_at(c, basis, att, x).twist;
}

TransportRhs transport_ode_rhs(const Curve& c, const SurfaceAttachment* att,
                               const TransportState& s) {
    const FrameAt fr = frame_at(c, s.basis, att, s.x);
    TransportRhs r;
    r.dl1 = 0.0;
    r.dl2 = fr.twist * s.lambda3;
    r.dl3 = -fr.twist * s.lambda2;
    if (s.lambda1 == 0.0) r.iso_residual = std::abs(fr.k1 * s.lambda2 + fr.k2 * s.lambda3);
    return r;
}

std::vector<TransportState> transport_integrate(const Curve& c, FrameBasis basis,
                                                const SurfaceAttachment* att,
                                                const TransportState& initial, double x_end,
                                                double step) {
    if (!(step > 0.0)) throw ValidationError("transport step must be positive");

    std::vector<TransportState> out;
    TransportState cur = initial;
    cur.basis = basis;
    out.push_back(cur);
    if (x_end == cur.x) return out;

    const double total = x_end - cur.x;
    const double dir = total > 0.0 ? 1.0 : -1.0;
    const long n_steps = std::max(1L, (long)std::ceil(std::abs(total) / step - 1e-9));
    if (n_steps > kMaxTransportSteps)
        throw ValidationError("transport step is too small for the requested interval");

    const double x0 = cur.x;
    for (long i = 0; i < n_steps; ++i) {
        const double xa = cur.x;
        const double xb = (i == n_steps - 1) ? x_end : x0 + dir * step * double(i + 1);
        const double h = xb - xa;
        const double xm = xa + 0.5 * h;

        const double wa = transport_twist(c, basis, att, xa);
        const double wm = transport_twist(c, basis, att, xm);
        const double wb = transport_twist(c, basis, att, xb);

        const PairDeriv k1 = rhs_pair(wa, cur.lambda2, cur.lambda3);
        const PairDeriv k2 = rhs_pair(wm, cur.lambda2 + 0.5 * h * k1.d2, cur.lambda3 + 0.5 * h * k1.d3);
        const PairDeriv k3 = rhs_pair(wm, cur.lambda2 + 0.5 * h * k2.d2, cur.lambda3 + 0.5 * h * k2.d3);
        const PairDeriv k4 = rhs_pair(wb, cur.lambda2 + h * k3.d2, cur.lambda3 + h * k3.d3);

        cur.x = xb;
        cur.lambda2 += h / 6.0 * (k1.d2 + 2.0 * k2.d2 + 2.0 * k3.d2 + k4.d2);
        cur.lambda3 += h / 6.0 * (k1.d3 + 2.0 * k2.d3 + 2.0 * k3.d3 + k4.d3);
        out.push_back(cur);
    }
    return out;
}

ClosedFormTransport transport_closed_form(const Curve& c, FrameBasis basis,
                                          const SurfaceAttachment* att, double c1, double c2,
                                          double x0, double x, double quad_tol) {
    ClosedFormTransport cf;
    cf.theta = adaptive_simpson(
        [&](double t) { return transport_twist(c, basis, att, t); }, x0, x, quad_tol);
    const double co = std::cos(cf.theta), si = std::sin(cf.theta);
    cf.lambda2 = c1 * co + c2 * si;
    cf.lambda3 = c2 * co - c1 * si;
    return cf;
}

TransportRun run_transport_analysis(const Curve& c, FrameBasis basis,
                                    const SurfaceAttachment* att, const TransportState& initial,
                                    double x_end, double step, double per_step_quad_tol) {
    TransportRun run;
    run.states = transport_integrate(c, basis, att, initial, x_end, step);
    run.isotropic = initial.lambda1 == 0.0;

    const double c1 = initial.lambda2, c2 = initial.lambda3;
    const double inv0 = c1 * c1 + c2 * c2;
    const auto twist = [&](double t) { return transport_twist(c, basis, att, t); };

    double theta = 0.0;
    run.theta.reserve(run.states.size());
    run.cf_lambda2.reserve(run.states.size());
    run.cf_lambda3.reserve(run.states.size());
    run.deviation.reserve(run.states.size());
    for (std::size_t i = 0; i < run.states.size(); ++i) {
        const TransportState& s = run.states[i];
        if (i > 0) theta += adaptive_simpson(twist, run.states[i - 1].x, s.x, per_step_quad_tol);
        const double co = std::cos(theta), si = std::sin(theta);
        const double cf2 = c1 * co + c2 * si;
        const double cf3 = c2 * co - c1 * si;
        const double dev = std::hypot(s.lambda2 - cf2, s.lambda3 - cf3);
        run.theta.push_back(theta);
        run.cf_lambda2.push_back(cf2);
        run.cf_lambda3.push_back(cf3);
        run.deviation.push_back(dev);

        run.max_deviation = std::fmax(run.max_deviation, dev);
        run.lambda1_drift = std::fmax(run.lambda1_drift, std::abs(s.lambda1 - initial.lambda1));
        run.invariant_drift = std::fmax(
            run.invariant_drift,
            std::abs(s.lambda2 * s.lambda2 + s.lambda3 * s.lambda3 - inv0));
        if (run.isotropic) {
            const FrameAt fr = frame_at(c, basis, att, s.x);
            run.feasibility_residual = std::fmax(
                run.feasibility_residual, std::abs(fr.k1 * s.lambda2 + fr.k2 * s.lambda3));
        }
    }
    return run;
}

CheckReport isotropic_feasibility(const Curve& c, const SurfaceAttachment* att,
                                  const FrameVectorField& X, const std::vector<double>& xs,
                                  double tol) {
    if (!field_isotropic(X))
        throw ValidationError("feasibility check applies to isotropic fields (lambda1 identically 0)");

    double residual = 0.0;
    for (double x : xs) {
        const FrameAt fr = frame_at(c, X.basis, att, x);
        const LambdaAt lam = lambdas_at(X, x);
        residual = std::fmax(residual, std::abs(fr.k1 * lam.l2 + fr.k2 * lam.l3));
    }

    bool feasible = false;
    std::string reason;
    if (is_line(c)) {
        feasible = true;
        reason = "line: every isotropic field is transported";
    } else if (X.basis == FrameBasis::Frenet && is_planar(c) && sf_is_zero(X.l2)) {
        feasible = true;
        reason = "planar curve, field has no principal-normal component";
    } else if (X.basis == FrameBasis::Darboux && residual <= tol) {
        feasible = true;
        reason = "sampled curvature pairing stays within tolerance";
    } else {
        reason = X.basis == FrameBasis::Frenet
                     ? "curved curve with a principal-normal component somewhere"
                     : "sampled curvature pairing exceeds tolerance";
    }

    CheckReport r;
    report_add_verdict(r, "isotropic_feasibility", residual, tol, feasible, reason);
    return r;
}

} // namespace gal3
