#include "gal3/job_spec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gal3/errors.hpp"

namespace gal3 {

namespace {

using njson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError(path + ": " + msg);
}

void check_keys(const njson& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
}

double get_finite(const njson& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "value is not finite");
    return v;
}

std::vector<double> get_coeffs(const njson& j, const std::string& path) {
    std::vector<double> out;
    if (j.is_number()) {
        out.push_back(get_finite(j, path));
        return out;
    }
    if (!j.is_array()) fail(path, "expected a number or an array of numbers");
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_finite(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<TrigTerm> get_trig(const njson& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of [cos_amp, sin_amp, omega] triples");
    std::vector<TrigTerm> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const njson& t = j[i];
        if (!t.is_array() || t.size() != 3) fail(p, "expected a [cos_amp, sin_amp, omega] triple");
        TrigTerm term;
        term.cos_amp = get_finite(t[0], p + "[0]");
        term.sin_amp = get_finite(t[1], p + "[1]");
        term.omega = get_finite(t[2], p + "[2]");
        if (term.omega == 0.0) fail(p + "[2]", "omega must be nonzero");
        out.push_back(term);
    }
    return out;
}

ScalarFunction get_scalar(const njson& obj, const std::string& path, const char* key,
                          const char* trig_key, bool allow_trig) {
    ScalarFunction f;
    const std::string base = path + "." + key;
    if (obj.contains(key)) f.poly = get_coeffs(obj.at(key), base);
    if (obj.contains(trig_key)) {
        if (!allow_trig) fail(path + "." + trig_key, "trig terms need curve kind trig-polynomial");
        f.trig = get_trig(obj.at(trig_key), path + "." + trig_key);
    }
    return sf_trimmed(f);
}

njson scalar_to_json(const ScalarFunction& f) {
    njson arr = njson::array();
    for (double c : f.poly) arr.push_back(c);
    return arr;
}

njson trig_to_json(const ScalarFunction& f) {
    njson arr = njson::array();
    for (const auto& t : f.trig) arr.push_back(njson::array({t.cos_amp, t.sin_amp, t.omega}));
    return arr;
}

bool sf_equal(const ScalarFunction& a, const ScalarFunction& b) {
    if (a.poly != b.poly || a.trig.size() != b.trig.size()) return false;
    for (std::size_t i = 0; i < a.trig.size(); ++i) {
        if (a.trig[i].cos_amp != b.trig[i].cos_amp || a.trig[i].sin_amp != b.trig[i].sin_amp ||
            a.trig[i].omega != b.trig[i].omega)
            return false;
    }
    return true;
}

} // namespace

JobSpec parse_spec(const std::string& text) {
    njson doc;
    try {
        doc = njson::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("document root must be an object");
    check_keys(doc, "",
               {"curve", "attachment", "field", "samples", "step", "tol", "x0", "x_end", "format",
                "out"});

    JobSpec spec;

    if (!doc.contains("curve")) throw ValidationError("curve: required section is missing");
    const njson& jc = doc.at("curve");
    if (!jc.is_object()) fail("curve", "expected an object");
    check_keys(jc, "curve", {"kind", "y", "z", "y_trig", "z_trig", "domain"});
    if (!jc.contains("kind")) fail("curve.kind", "required key is missing");
    if (!jc.at("kind").is_string()) fail("curve.kind", "expected a string");
    spec.curve_kind = jc.at("kind").get<std::string>();
    if (spec.curve_kind != "polynomial" && spec.curve_kind != "trig-polynomial")
        fail("curve.kind", "must be \"polynomial\" or \"trig-polynomial\"");
    const bool allow_trig = spec.curve_kind == "trig-polynomial";
    spec.y = get_scalar(jc, "curve", "y", "y_trig", allow_trig);
    spec.z = get_scalar(jc, "curve", "z", "z_trig", allow_trig);
    if (!jc.contains("domain")) fail("curve.domain", "required key is missing");
    const njson& jd = jc.at("domain");
    if (!jd.is_array() || jd.size() != 2) fail("curve.domain", "expected [x_min, x_max]");
    spec.x_min = get_finite(jd[0], "curve.domain[0]");
    spec.x_max = get_finite(jd[1], "curve.domain[1]");
    if (!(spec.x_min < spec.x_max)) fail("curve.domain", "must satisfy x_min < x_max");

    if (doc.contains("attachment")) {
        const njson& ja = doc.at("attachment");
        if (!ja.is_object()) fail("attachment", "expected an object");
        check_keys(ja, "attachment", {"phi", "phi_trig"});
        spec.has_attachment = true;
        spec.phi = get_scalar(ja, "attachment", "phi", "phi_trig", true);
    }

    if (doc.contains("field")) {
        const njson& jf = doc.at("field");
        if (!jf.is_object()) fail("field", "expected an object");
        check_keys(jf, "field",
                   {"basis", "lambda1", "lambda2", "lambda3", "lambda1_trig", "lambda2_trig",
                    "lambda3_trig"});
        spec.has_field = true;
        if (!jf.contains("basis")) fail("field.basis", "required key is missing");
        if (!jf.at("basis").is_string()) fail("field.basis", "expected a string");
        const std::string basis = jf.at("basis").get<std::string>();
        if (basis == "frenet")
            spec.field_basis = FrameBasis::Frenet;
        else if (basis == "darboux")
            spec.field_basis = FrameBasis::Darboux;
        else
            fail("field.basis", "must be \"frenet\" or \"darboux\"");
        if (spec.field_basis == FrameBasis::Darboux && !spec.has_attachment)
            fail("field.basis", "darboux basis requires an attachment section");
        spec.l1 = get_scalar(jf, "field", "lambda1", "lambda1_trig", true);
        spec.l2 = get_scalar(jf, "field", "lambda2", "lambda2_trig", true);
        spec.l3 = get_scalar(jf, "field", "lambda3", "lambda3_trig", true);
    }

    if (doc.contains("samples")) {
        const njson& js = doc.at("samples");
        if (!js.is_number_integer()) fail("samples", "expected an integer");
        const long long n = js.get<long long>();
        if (n < 2 || n > 10000000) fail("samples", "must be between 2 and 10000000");
        spec.samples = int(n);
    }
    if (doc.contains("step")) {
        spec.step = get_finite(doc.at("step"), "step");
        if (!(spec.step > 0.0)) fail("step", "must be positive");
    }
    if (doc.contains("tol")) {
        spec.tol = get_finite(doc.at("tol"), "tol");
        if (!(spec.tol > 0.0)) fail("tol", "must be positive");
    }
    spec.x0 = spec.x_min;
    spec.x_end = spec.x_max;
    if (doc.contains("x0")) spec.x0 = get_finite(doc.at("x0"), "x0");
    if (doc.contains("x_end")) spec.x_end = get_finite(doc.at("x_end"), "x_end");
    if (spec.x0 < spec.x_min || spec.x0 > spec.x_max) fail("x0", "outside the curve domain");
    if (spec.x_end < spec.x_min || spec.x_end > spec.x_max)
        fail("x_end", "outside the curve domain");

    if (doc.contains("format")) {
        if (!doc.at("format").is_string()) fail("format", "expected a string");
        spec.format = doc.at("format").get<std::string>();
        if (spec.format != "csv" && spec.format != "json")
            fail("format", "must be \"csv\" or \"json\"");
    }
    if (doc.contains("out")) {
        if (!doc.at("out").is_string()) fail("out", "expected a string");
        spec.out = doc.at("out").get<std::string>();
    }
    return spec;
}

JobSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string emit_canonical(const JobSpec& spec) {
    njson doc;
    njson jc;
    jc["kind"] = spec.curve_kind;
    jc["y"] = scalar_to_json(spec.y);
    jc["z"] = scalar_to_json(spec.z);
    if (!spec.y.trig.empty()) jc["y_trig"] = trig_to_json(spec.y);
    if (!spec.z.trig.empty()) jc["z_trig"] = trig_to_json(spec.z);
    jc["domain"] = njson::array({spec.x_min, spec.x_max});
    doc["curve"] = jc;

    if (spec.has_attachment) {
        njson ja;
        ja["phi"] = scalar_to_json(spec.phi);
        if (!spec.phi.trig.empty()) ja["phi_trig"] = trig_to_json(spec.phi);
        doc["attachment"] = ja;
    }
    if (spec.has_field) {
        njson jf;
        jf["basis"] = spec.field_basis == FrameBasis::Frenet ? "frenet" : "darboux";
        jf["lambda1"] = scalar_to_json(spec.l1);
        jf["lambda2"] = scalar_to_json(spec.l2);
        jf["lambda3"] = scalar_to_json(spec.l3);
        if (!spec.l1.trig.empty()) jf["lambda1_trig"] = trig_to_json(spec.l1);
        if (!spec.l2.trig.empty()) jf["lambda2_trig"] = trig_to_json(spec.l2);
        if (!spec.l3.trig.empty()) jf["lambda3_trig"] = trig_to_json(spec.l3);
        doc["field"] = jf;
    }
    doc["samples"] = spec.samples;
    doc["step"] = spec.step;
    doc["tol"] = spec.tol;
    doc["x0"] = spec.x0;
    doc["x_end"] = spec.x_end;
    if (!spec.format.empty()) doc["format"] = spec.format;
    if (!spec.out.empty()) doc["out"] = spec.out;
    return doc.dump(2) + "\n";
}

bool spec_equal(const JobSpec& a, const JobSpec& b) {
    return a.curve_kind == b.curve_kind && sf_equal(a.y, b.y) && sf_equal(a.z, b.z) &&
           a.x_min == b.x_min && a.x_max == b.x_max && a.has_attachment == b.has_attachment &&
           (!a.has_attachment || sf_equal(a.phi, b.phi)) && a.has_field == b.has_field &&
           (!a.has_field ||
            (a.field_basis == b.field_basis && sf_equal(a.l1, b.l1) && sf_equal(a.l2, b.l2) &&
             sf_equal(a.l3, b.l3))) &&
           a.samples == b.samples && a.step == b.step && a.tol == b.tol && a.x0 == b.x0 &&
           a.x_end == b.x_end && a.format == b.format && a.out == b.out;
}

Curve spec_curve(const JobSpec& spec) {
    return make_curve(spec.y, spec.z, spec.x_min, spec.x_max);
}

SurfaceAttachment spec_attachment(const JobSpec& spec) {
    if (!spec.has_attachment) throw ValidationError("spec has no attachment section");
    return make_attachment(spec.phi);
}

FrameVectorField spec_field(const JobSpec& spec) {
    if (!spec.has_field) throw ValidationError("spec has no field section");
    return make_field(spec.field_basis, spec.l1, spec.l2, spec.l3);
}

} // namespace gal3
