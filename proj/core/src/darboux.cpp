#include "gal3/darboux.hpp"

#include <cmath>
#include <sstream>

#include "gal3/errors.hpp"

namespace gal3 {

SurfaceAttachment make_attachment(const ScalarFunction& phi) {
    SurfaceAttachment att;
    att.phi = sf_trimmed(phi);
    att.phi_d = sf_derivative(att.phi);
    return att;
}

DarbouxSample darboux_frame(const Curve& c, const SurfaceAttachment& att, double x) {
    const FrenetSample fs = frenet_frame(c, x);
    const double phi = sf_eval(att.phi, x);
    const double phi_p = sf_eval(att.phi_d, x);
    const double co = std::cos(phi), si = std::sin(phi);

    DarbouxSample s;
    s.x = x;
    s.T = fs.T;
    s.Q = fs.N * co + fs.B * si;
    s.n = fs.N * (-si) + fs.B * co;
    const GVec3 Tp = fs.N * fs.kappa;
    s.kappa_g = g_dot(Tp, s.Q);
    s.kappa_n = g_dot(Tp, s.n);
    s.tau_g = phi_p + fs.tau;
    s.kappa = fs.kappa;
    s.tau = fs.tau;
    s.phi = phi;
    s.phi_prime = phi_p;
    return s;
}

CheckReport verify_kt_relations(const Curve& c, const SurfaceAttachment& att, double x) {
    const DarbouxSample s = darboux_frame(c, att, x);
    const double kp = curvature_derivative(c, x);
    const double co = std::cos(s.phi), si = std::sin(s.phi);
    const double kg_p = kp * co - s.kappa * s.phi_prime * si;
    const double kn_p = -kp * si - s.kappa * s.phi_prime * co;
    const double bracket = (kg_p * s.kappa_n - s.kappa_g * kn_p) /
                           (s.kappa_g * s.kappa_g + s.kappa_n * s.kappa_n);

    CheckReport r;
    report_add(r, "kt_kappa_decomposition",
               std::abs(s.kappa * s.kappa - s.kappa_g * s.kappa_g - s.kappa_n * s.kappa_n),
               kTolIdentity);
    report_add(r, "kt_relation_pos_taug", std::abs(s.tau - (s.tau_g - bracket)), kTolVerdict,
               "tau = tau_g - bracket");
    report_add(r, "kt_relation_neg_taug", std::abs(s.tau - (-s.tau_g + bracket)), kTolVerdict,
               "tau = -tau_g + bracket; residual equals 2|tau|");
    return r;
}

bool line_of_curvature_check(const std::vector<DarbouxSample>& samples, double tol) {
    if (samples.empty()) throw ValidationError("line-of-curvature check needs at least one sample");
    for (const auto& s : samples)
        if (std::abs(s.tau_g) > tol) return false;
    return true;
}

bool ratio_constancy_check(const std::vector<DarbouxSample>& samples, double tol) {
    if (samples.empty()) throw ValidationError("ratio-constancy check needs at least one sample");
    for (const auto& s : samples) {
        if (std::abs(s.kappa_n) <= kKappaMin) {
            std::ostringstream os;
            os.precision(17);
            os << "normal curvature " << s.kappa_n << " at x=" << s.x
               << " is at or below the degeneracy cutoff";
            throw DegenerateRatioError(os.str());
        }
        const double ratio_deriv = s.phi_prime * s.kappa * s.kappa / (s.kappa_n * s.kappa_n);
        if (std::abs(ratio_deriv) > tol) return false;
    }
    return true;
}

} // namespace gal3
