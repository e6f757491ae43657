#include "gal3/commands.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gal3/errors.hpp"
#include "gal3/transport.hpp"

namespace gal3 {

namespace {

using njson = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

void add_guarded(CheckReport& rep, const std::string& name, double tol,
                 const std::function<double()>& compute, const std::string& note = "") {
    try {
        report_add(rep, name, compute(), tol, note);
    } catch (const std::exception& e) {
        report_add_verdict(rep, name, -1.0, tol, false, std::string("error: ") + e.what());
    }
}

void merge_guarded(CheckReport& rep, const std::string& name, double tol,
                   const std::function<CheckReport()>& compute) {
    try {
        report_merge(rep, compute());
    } catch (const std::exception& e) {
        report_add_verdict(rep, name, -1.0, tol, false, std::string("error: ") + e.what());
    }
}

std::vector<std::pair<std::string, FrameVectorField>> battery_fields(FrameBasis basis) {
    const ScalarFunction zero;
    const ScalarFunction one = sf_constant(1.0);
    const ScalarFunction linear = sf_poly({0.0, 1.0});
    const ScalarFunction square = sf_poly({0.0, 0.0, 1.0});
    std::vector<std::pair<std::string, FrameVectorField>> out;
    out.emplace_back("e1", make_field(basis, one, zero, zero));
    out.emplace_back("e2", make_field(basis, zero, one, zero));
    out.emplace_back("e3", make_field(basis, zero, zero, one));
    out.emplace_back("e1+e3", make_field(basis, one, zero, one));
    out.emplace_back("iso poly", make_field(basis, zero, linear, one));
    out.emplace_back("general poly", make_field(basis, one, linear, square));
    return out;
}

double fd_window_clamp(const Curve& c, double x, double h) {
    if (c.x_max - c.x_min <= 2.0 * h)
        throw ValidationError("curve domain too short for the finite-difference window");
    return std::fmin(std::fmax(x, c.x_min + h), c.x_max - h);
}

njson vec_json(const GVec3& v) {
    return njson::array({v.v1, v.v2, v.v3});
}

std::string resolve_format(const JobSpec& spec, const char* fallback) {
    return spec.format.empty() ? fallback : spec.format;
}

std::string render_output(const JobSpec& spec, const char* fallback, const std::string& csv,
                          const njson& json_doc) {
    if (resolve_format(spec, fallback) == "csv") return csv;
    return json_doc.dump(2) + "\n";
}

} // namespace

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CheckReport check_battery(const JobSpec& spec) {
    const Curve c = spec_curve(spec);
    const std::vector<double> xs = sample_grid(c, spec.samples);
    const bool line = is_line(c);
    const bool has_att = spec.has_attachment;
    SurfaceAttachment att;
    if (has_att) att = spec_attachment(spec);
    const SurfaceAttachment* att_ptr = has_att ? &att : nullptr;

    CheckReport rep;

    add_guarded(rep, "tangent_unit", kTolIdentity, [&] {
        double r = 0.0;
        for (double x : xs) r = std::fmax(r, std::abs(g_norm(eval_derivatives(c, x, 1)[1]) - 1.0));
        return r;
    });

    if (!line) {
        add_guarded(rep, "frenet_orthonormality", kTolIdentity, [&] {
            double r = 0.0;
            for (double x : xs) {
                const FrenetSample s = frenet_frame(c, x);
                r = std::fmax(r, std::abs(g_norm(s.N) - 1.0));
                r = std::fmax(r, std::abs(g_norm(s.B) - 1.0));
                r = std::fmax(r, std::abs(g_dot(s.N, s.B)));
                r = std::fmax(r, e_norm(s.B - g_cross(s.T, s.N)));
            }
            return r;
        });

        add_guarded(rep, "frenet_serret_fd", kTolFiniteDiff, [&] {
            double r = 0.0;
            for (double x : xs) {
                const double xc = fd_window_clamp(c, x, kFiniteDiffStep);
                r = std::fmax(r, report_max_value(frenet_serret_residual(c, xc, kFiniteDiffStep)));
            }
            return r;
        });

        add_guarded(rep, "darboux_vector_identity", kTolIdentity, [&] {
            double r = 0.0;
            for (double x : xs) {
                const FrenetSample s = frenet_frame(c, x);
                const GVec3 D = darboux_vector(s).D;
                r = std::fmax(r, e_norm(g_cross(D, s.T) - s.N * s.kappa));
                r = std::fmax(r, e_norm(g_cross(D, s.N) - s.B * s.tau));
                r = std::fmax(r, e_norm(g_cross(D, s.B) + s.N * s.tau));
            }
            return r;
        });
    }

    add_guarded(rep, "fw_frenet_equivalence", kTolIdentity, [&] {
        auto fields = battery_fields(FrameBasis::Frenet);
        if (spec.has_field && spec.field_basis == FrameBasis::Frenet)
            fields.emplace_back("user field", spec_field(spec));
        double r = 0.0;
        for (double x : xs)
            for (const auto& [fname, X] : fields)
                r = std::fmax(
                    r, e_norm(fw_derivative_frenet(c, X, x) - fw_derivative_definition(c, X, x)));
        return r;
    });

    add_guarded(rep, "fw_tangent_transported", kTolIdentity, [&] {
        const FrameVectorField T_field =
            make_field(FrameBasis::Frenet, sf_constant(1.0), ScalarFunction{}, ScalarFunction{});
        double r = 0.0;
        for (double x : xs) r = std::fmax(r, e_norm(fw_derivative_definition(c, T_field, x)));
        return r;
    });

    add_guarded(rep, "coincidence_binormal", kTolIdentity, [&] {
        const FrameVectorField B_field =
            make_field(FrameBasis::Frenet, ScalarFunction{}, ScalarFunction{}, sf_constant(1.0));
        double r = 0.0;
        for (double x : xs) {
            const FrameAt fr = frame_at(c, FrameBasis::Frenet, nullptr, x);
            const LambdaAt lam = lambdas_at(B_field, x);
            r = std::fmax(r, e_norm(fw_derivative_definition(c, B_field, x) -
                                    ambient_derivative(fr, lam)));
        }
        return r;
    }, "ambient and Fermi-Walker derivative coincide on the binormal");

    merge_guarded(rep, "frenet_non_rotating", spec.tol, [&] {
        return non_rotating_check(c, att_ptr, FrameBasis::Frenet, xs, spec.tol);
    });

    if (has_att) {
        if (!line) {
            add_guarded(rep, "darboux_orthonormality", kTolIdentity, [&] {
                double r = 0.0;
                for (double x : xs) {
                    const DarbouxSample s = darboux_frame(c, att, x);
                    r = std::fmax(r, std::abs(g_norm(s.Q) - 1.0));
                    r = std::fmax(r, std::abs(g_norm(s.n) - 1.0));
                    r = std::fmax(r, std::abs(g_dot(s.Q, s.n)));
                    r = std::fmax(r, e_norm(s.Q - g_cross(s.n, s.T)));
                }
                return r;
            });

            add_guarded(rep, "darboux_frame_fd", kTolFiniteDiff, [&] {
                const double h = kFiniteDiffStep;
                double r = 0.0;
                for (double x : xs) {
                    const double xc = fd_window_clamp(c, x, h);
                    const DarbouxSample lo = darboux_frame(c, att, xc - h);
                    const DarbouxSample mid = darboux_frame(c, att, xc);
                    const DarbouxSample hi = darboux_frame(c, att, xc + h);
                    const GVec3 dT = (hi.T - lo.T) / (2.0 * h);
                    const GVec3 dQ = (hi.Q - lo.Q) / (2.0 * h);
                    const GVec3 dn = (hi.n - lo.n) / (2.0 * h);
                    r = std::fmax(r, e_norm(dT - (mid.Q * mid.kappa_g + mid.n * mid.kappa_n)));
                    r = std::fmax(r, e_norm(dQ - mid.n * mid.tau_g));
                    r = std::fmax(r, e_norm(dn + mid.Q * mid.tau_g));
                }
                return r;
            });

            add_guarded(rep, "fw_darboux_equivalence", kTolIdentity, [&] {
                auto fields = battery_fields(FrameBasis::Darboux);
                if (spec.has_field && spec.field_basis == FrameBasis::Darboux)
                    fields.emplace_back("user field", spec_field(spec));
                double r = 0.0;
                for (double x : xs)
                    for (const auto& [fname, X] : fields)
                        r = std::fmax(r, e_norm(fw_derivative_darboux(c, att, X, x) -
                                                fw_derivative_definition(c, X, x, &att)));
                return r;
            });

            double kd = 0.0, pos = 0.0, neg = 0.0;
            bool kt_ok = true;
            std::string kt_err;
            try {
                for (double x : xs) {
                    const CheckReport kt = verify_kt_relations(c, att, x);
                    kd = std::fmax(kd, kt.entries[0].value);
                    pos = std::fmax(pos, kt.entries[1].value);
                    neg = std::fmax(neg, kt.entries[2].value);
                }
            } catch (const std::exception& e) {
                kt_ok = false;
                kt_err = std::string("error: ") + e.what();
            }
            if (kt_ok) {
                report_add(rep, "kt_kappa_decomposition", kd, kTolIdentity);
                report_add(rep, "kt_relation_pos_taug", pos, kTolVerdict,
                           "tau = tau_g - bracket; this sign convention closes");
                report_add(rep, "kt_relation_neg_taug", neg, kTolVerdict,
                           "tau = -tau_g + bracket; residual equals 2|tau|");
            } else {
                report_add_verdict(rep, "kt_relations", -1.0, kTolIdentity, false, kt_err);
            }
        }

        merge_guarded(rep, "darboux_non_rotating", spec.tol, [&] {
            return non_rotating_check(c, att_ptr, FrameBasis::Darboux, xs, spec.tol);
        });
    }

    if (spec.has_field) {
        const FrameVectorField X = spec_field(spec);

        bool ran = false;
        TransportRun run;
        try {
            const LambdaAt lam0 = lambdas_at(X, spec.x0);
            TransportState initial;
            initial.x = spec.x0;
            initial.lambda1 = lam0.l1;
            initial.lambda2 = lam0.l2;
            initial.lambda3 = lam0.l3;
            initial.basis = X.basis;
            run = run_transport_analysis(c, X.basis, att_ptr, initial, spec.x_end, spec.step);
            ran = true;
        } catch (const std::exception& e) {
            report_add_verdict(rep, "transport_rk4_vs_closed_form", -1.0, kTolTransportDeviation,
                               false, std::string("error: ") + e.what());
        }
        if (ran) {
            report_add(rep, "transport_rk4_vs_closed_form", run.max_deviation,
                       kTolTransportDeviation);
            report_add(rep, "transport_lambda1_drift", run.lambda1_drift, 0.0,
                       "constant by construction");
            report_add(rep, "transport_invariant_drift", run.invariant_drift, kTolInvariantDrift);
        }

        merge_guarded(rep, "fw_coincides_with_plain_derivative", spec.tol,
                      [&] { return coincidence_classify(c, att_ptr, X, xs, spec.tol); });

        if (field_isotropic(X)) {
            merge_guarded(rep, "isotropic_feasibility", spec.tol,
                          [&] { return isotropic_feasibility(c, att_ptr, X, xs, spec.tol); });
        }
    }

    return rep;
}

CommandResult run_frame(const JobSpec& spec) {
    const Curve c = spec_curve(spec);
    const std::vector<double> xs = sample_grid(c, spec.samples);
    const bool has_att = spec.has_attachment;
    SurfaceAttachment att;
    if (has_att) att = spec_attachment(spec);

    std::ostringstream csv;
    csv << "x,status,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau";
    if (has_att) csv << ",Q1,Q2,Q3,n1,n2,n3,kappa_g,kappa_n,tau_g";
    csv << "\n";

    njson rows = njson::array();
    for (double x : xs) {
        const auto d = eval_derivatives(c, x, 1);
        const GVec3 T = d[1];
        const double kappa = curvature(c, x);

        bool ok = true;
        FrenetSample fs;
        DarbouxSample ds;
        try {
            fs = frenet_frame(c, x);
            if (has_att) ds = darboux_frame(c, att, x);
        } catch (const DegenerateCurvatureError&) {
            ok = false;
        }

        csv << format_double(x) << "," << (ok ? "ok" : "degenerate");
        csv << "," << format_double(T.v1) << "," << format_double(T.v2) << ","
            << format_double(T.v3);
        if (ok) {
            csv << "," << format_double(fs.N.v1) << "," << format_double(fs.N.v2) << ","
                << format_double(fs.N.v3);
            csv << "," << format_double(fs.B.v1) << "," << format_double(fs.B.v2) << ","
                << format_double(fs.B.v3);
            csv << "," << format_double(kappa) << "," << format_double(fs.tau);
        } else {
            csv << ",,,,,," << "," << format_double(kappa) << ",";
        }
        if (has_att) {
            if (ok) {
                csv << "," << format_double(ds.Q.v1) << "," << format_double(ds.Q.v2) << ","
                    << format_double(ds.Q.v3);
                csv << "," << format_double(ds.n.v1) << "," << format_double(ds.n.v2) << ","
                    << format_double(ds.n.v3);
                csv << "," << format_double(ds.kappa_g) << "," << format_double(ds.kappa_n) << ","
                    << format_double(ds.tau_g);
            } else {
                csv << ",,,,,,,,,";
            }
        }
        csv << "\n";

        njson row;
        row["x"] = x;
        row["status"] = ok ? "ok" : "degenerate";
        row["T"] = vec_json(T);
        row["kappa"] = kappa;
        if (ok) {
            row["N"] = vec_json(fs.N);
            row["B"] = vec_json(fs.B);
            row["tau"] = fs.tau;
        } else {
            row["N"] = nullptr;
            row["B"] = nullptr;
            row["tau"] = nullptr;
        }
        if (has_att) {
            if (ok) {
                row["Q"] = vec_json(ds.Q);
                row["n"] = vec_json(ds.n);
                row["kappa_g"] = ds.kappa_g;
                row["kappa_n"] = ds.kappa_n;
                row["tau_g"] = ds.tau_g;
            } else {
                row["Q"] = nullptr;
                row["n"] = nullptr;
                row["kappa_g"] = nullptr;
                row["kappa_n"] = nullptr;
                row["tau_g"] = nullptr;
            }
        }
        rows.push_back(row);
    }

    njson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "frame";
    doc["rows"] = rows;

    CommandResult res;
    res.output = render_output(spec, "csv", csv.str(), doc);
    return res;
}

CommandResult run_transport(const JobSpec& spec) {
    if (!spec.has_field) throw ValidationError("transport requires a field section");
    const Curve c = spec_curve(spec);
    const bool has_att = spec.has_attachment;
    SurfaceAttachment att;
    if (has_att) att = spec_attachment(spec);
    const SurfaceAttachment* att_ptr = has_att ? &att : nullptr;
    const FrameVectorField X = spec_field(spec);

    const LambdaAt lam0 = lambdas_at(X, spec.x0);
    TransportState initial;
    initial.x = spec.x0;
    initial.lambda1 = lam0.l1;
    initial.lambda2 = lam0.l2;
    initial.lambda3 = lam0.l3;
    initial.basis = X.basis;

    const TransportRun run =
        run_transport_analysis(c, X.basis, att_ptr, initial, spec.x_end, spec.step);

    bool feasible = false;
    if (run.isotropic) {
        const std::vector<double> xs = sample_grid(c, spec.samples);
        const CheckReport fr = isotropic_feasibility(c, att_ptr, X, xs, spec.tol);
        feasible = fr.entries[0].pass;
    }

    std::ostringstream csv;
    csv << "x,lambda1,lambda2,lambda3,cf_lambda2,cf_lambda3,deviation\n";
    njson rows = njson::array();
    for (std::size_t i = 0; i < run.states.size(); ++i) {
        const TransportState& s = run.states[i];
        csv << format_double(s.x) << "," << format_double(s.lambda1) << ","
            << format_double(s.lambda2) << "," << format_double(s.lambda3) << ","
            << format_double(run.cf_lambda2[i]) << "," << format_double(run.cf_lambda3[i]) << ","
            << format_double(run.deviation[i]) << "\n";
        njson row;
        row["x"] = s.x;
        row["lambda1"] = s.lambda1;
        row["lambda2"] = s.lambda2;
        row["lambda3"] = s.lambda3;
        row["cf_lambda2"] = run.cf_lambda2[i];
        row["cf_lambda3"] = run.cf_lambda3[i];
        row["deviation"] = run.deviation[i];
        rows.push_back(row);
    }
    csv << "# max_deviation," << format_double(run.max_deviation) << "\n";
    csv << "# lambda1_drift," << format_double(run.lambda1_drift) << "\n";
    csv << "# invariant_drift," << format_double(run.invariant_drift) << "\n";
    if (run.isotropic) {
        csv << "# feasibility_residual," << format_double(run.feasibility_residual) << "\n";
        csv << "# feasible," << (feasible ? "true" : "false") << "\n";
    }

    njson summary;
    summary["max_deviation"] = run.max_deviation;
    summary["lambda1_drift"] = run.lambda1_drift;
    summary["invariant_drift"] = run.invariant_drift;
    if (run.isotropic) {
        summary["feasibility_residual"] = run.feasibility_residual;
        summary["feasible"] = feasible;
    }

    njson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "transport";
    doc["rows"] = rows;
    doc["summary"] = summary;

    CommandResult res;
    res.output = render_output(spec, "csv", csv.str(), doc);
    return res;
}

CommandResult run_check(const JobSpec& spec) {
    const CheckReport rep = check_battery(spec);
    const bool verdict = report_verdict(rep);

    std::ostringstream csv;
    csv << "name,value,tolerance,pass,note\n";
    for (const auto& e : rep.entries)
        csv << csv_escape(e.name) << "," << format_double(e.value) << ","
            << format_double(e.tolerance) << "," << (e.pass ? "true" : "false") << ","
            << csv_escape(e.note) << "\n";
    csv << "# verdict," << (verdict ? "pass" : "fail") << "\n";

    njson entries = njson::array();
    for (const auto& e : rep.entries) {
        njson je;
        je["name"] = e.name;
        je["value"] = e.value;
        je["tolerance"] = e.tolerance;
        je["pass"] = e.pass;
        je["note"] = e.note;
        entries.push_back(je);
    }
    njson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "check";
    doc["verdict"] = verdict;
    doc["entries"] = entries;

    CommandResult res;
    res.output = render_output(spec, "json", csv.str(), doc);
    res.exit_code = verdict ? 0 : 1;
    return res;
}

} // namespace gal3
