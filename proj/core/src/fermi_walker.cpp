#include "gal3/fermi_walker.hpp"

#include <cmath>
#include <sstream>

#include "gal3/errors.hpp"

namespace gal3 {

FrameVectorField make_field(FrameBasis basis, const ScalarFunction& l1,
                            const ScalarFunction& l2, const ScalarFunction& l3) {
    FrameVectorField X;
    X.basis = basis;
    X.l1 = sf_trimmed(l1);
    X.l2 = sf_trimmed(l2);
    X.l3 = sf_trimmed(l3);
    X.l1_d = sf_derivative(X.l1);
    X.l2_d = sf_derivative(X.l2);
    X.l3_d = sf_derivative(X.l3);
    return X;
}

bool field_isotropic(const FrameVectorField& X) {
    return sf_is_zero(X.l1);
}

FrameAt frame_at(const Curve& c, FrameBasis basis, const SurfaceAttachment* att, double x) {
    FrameAt fr;
    fr.x = x;
    if (is_line(c)) {
        const auto d = eval_derivatives(c, x, 1);
        fr.e1 = d[1];
        fr.e2 = {0.0, 1.0, 0.0};
        fr.e3 = {0.0, 0.0, 1.0};
        fr.line = true;
        return fr;
    }
    if (basis == FrameBasis::Frenet) {
        const FrenetSample s = frenet_frame(c, x);
        fr.e1 = s.T;
        fr.e2 = s.N;
        fr.e3 = s.B;
        fr.de1 = s.N * s.kappa;
        fr.de2 = s.B * s.tau;
        fr.de3 = s.N * (-s.tau);
        fr.k1 = s.kappa;
        fr.k2 = 0.0;
        fr.twist = s.tau;
        return fr;
    }
    if (att == nullptr)
        throw ValidationError("Darboux basis requires an attachment on a non-line curve");
    const DarbouxSample s = darboux_frame(c, *att, x);
    fr.e1 = s.T;
    fr.e2 = s.Q;
    fr.e3 = s.n;
    fr.de1 = s.Q * s.kappa_g + s.n * s.kappa_n;
    fr.de2 = s.n * s.tau_g;
    fr.de3 = s.Q * (-s.tau_g);
    fr.k1 = s.kappa_g;
    fr.k2 = s.kappa_n;
    fr.twist = s.tau_g;
    return fr;
}

LambdaAt lambdas_at(const FrameVectorField& X, double x) {
    LambdaAt lam;
    lam.l1 = sf_eval(X.l1, x);
    lam.l2 = sf_eval(X.l2, x);
    lam.l3 = sf_eval(X.l3, x);
    lam.d1 = sf_eval(X.l1_d, x);
    lam.d2 = sf_eval(X.l2_d, x);
    lam.d3 = sf_eval(X.l3_d, x);
    if (!field_isotropic(X) && std::abs(lam.l1) <= kEpsIso) {
        std::ostringstream os;
        os.precision(17);
        os << "field is not identically isotropic but lambda1=" << lam.l1 << " at x=" << x
           << " falls inside the isotropy cutoff; the isotropic/non-isotropic split is global";
        throw ValidationError(os.str());
    }
    return lam;
}

GVec3 field_value(const FrameAt& fr, const LambdaAt& lam) {
    return fr.e1 * lam.l1 + fr.e2 * lam.l2 + fr.e3 * lam.l3;
}

GVec3 ambient_derivative(const FrameAt& fr, const LambdaAt& lam) {
    return fr.e1 * lam.d1 + fr.de1 * lam.l1 +
           fr.e2 * lam.d2 + fr.de2 * lam.l2 +
           fr.e3 * lam.d3 + fr.de3 * lam.l3;
}

GVec3 fw_derivative_definition(const Curve& c, const FrameVectorField& X, double x,
                               const SurfaceAttachment* att) {
    const FrameAt fr = frame_at(c, X.basis, att, x);
    const LambdaAt lam = lambdas_at(X, x);
    const GVec3 Xv = field_value(fr, lam);
    const GVec3 Xp = ambient_derivative(fr, lam);
    const GVec3 A = fr.e2 * fr.k1 + fr.e3 * fr.k2;
    return Xp - A * g_dot(fr.e1, Xv) + fr.e1 * g_dot(A, Xv);
}

GVec3 fw_derivative_frenet(const Curve& c, const FrameVectorField& X, double x) {
    if (X.basis != FrameBasis::Frenet)
        throw ValidationError("field is not written in the Frenet basis");
    const FrameAt fr = frame_at(c, FrameBasis::Frenet, nullptr, x);
    const LambdaAt lam = lambdas_at(X, x);
    const GVec3 Xv = field_value(fr, lam);
    const GVec3 Xp = ambient_derivative(fr, lam);
    if (field_isotropic(X)) return Xp + fr.e1 * (fr.k1 * g_dot(fr.e2, Xv));
    return Xp - fr.e2 * (fr.k1 * g_dot(fr.e1, Xv));
}

GVec3 fw_derivative_darboux(const Curve& c, const SurfaceAttachment& att,
                            const FrameVectorField& X, double x) {
    if (X.basis != FrameBasis::Darboux)
        throw ValidationError("field is not written in the Darboux basis");
    const FrameAt fr = frame_at(c, FrameBasis::Darboux, &att, x);
    const LambdaAt lam = lambdas_at(X, x);
    const GVec3 Xv = field_value(fr, lam);
    const GVec3 Xp = ambient_derivative(fr, lam);
    if (field_isotropic(X))
        return Xp + fr.e1 * (fr.k1 * g_dot(fr.e2, Xv) + fr.k2 * g_dot(fr.e3, Xv));
    return Xp - (fr.e2 * fr.k1 + fr.e3 * fr.k2) * g_dot(fr.e1, Xv);
}

CheckReport coincidence_classify(const Curve& c, const SurfaceAttachment* att,
                                 const FrameVectorField& X, const std::vector<double>& xs,
                                 double tol) {
    double residual = 0.0;
    double pairing = 0.0;
    for (double x : xs) {
        const FrameAt fr = frame_at(c, X.basis, att, x);
        const LambdaAt lam = lambdas_at(X, x);
        const GVec3 fw = fw_derivative_definition(c, X, x, att);
        residual = std::fmax(residual, e_norm(fw - ambient_derivative(fr, lam)));
        pairing = std::fmax(pairing, std::abs(fr.k1 * lam.l2 + fr.k2 * lam.l3));
    }

    bool predicted = false;
    std::string reason;
    if (is_line(c)) {
        predicted = true;
        reason = "line: acceleration vanishes, so the operators agree on every field";
    } else if (field_isotropic(X) && X.basis == FrameBasis::Frenet && sf_is_zero(X.l2)) {
        predicted = true;
        reason = "isotropic field parallel to the binormal";
    } else if (field_isotropic(X) && X.basis == FrameBasis::Darboux && pairing <= tol) {
        predicted = true;
        reason = "isotropic field with vanishing curvature pairing";
    } else {
        reason = "no coincidence condition holds; operators differ";
    }

    const bool observed = residual <= tol;
    CheckReport r;
    report_add_verdict(r, "fw_coincides_with_plain_derivative", residual, tol,
                       observed == predicted, reason);
    return r;
}

CheckReport non_rotating_check(const Curve& c, const SurfaceAttachment* att, FrameBasis basis,
                               const std::vector<double>& xs, double tol) {
    const ScalarFunction one = sf_constant(1.0);
    const ScalarFunction zero = sf_constant(0.0);
    const FrameVectorField members[3] = {
        make_field(basis, one, zero, zero),
        make_field(basis, zero, one, zero),
        make_field(basis, zero, zero, one),
    };
    double residual = 0.0;
    for (double x : xs)
        for (const auto& m : members)
            residual = std::fmax(residual, e_norm(fw_derivative_definition(c, m, x, att)));
    CheckReport r;
    const char* name = basis == FrameBasis::Frenet ? "frenet_non_rotating" : "darboux_non_rotating";
    report_add(r, name, residual, tol, residual <= tol ? "non-rotating" : "rotating");
    return r;
}

} // namespace gal3
