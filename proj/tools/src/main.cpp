#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gal3/commands.hpp"
#include "gal3/errors.hpp"
#include "gal3/job_spec.hpp"

namespace {

struct CliOverrides {
    std::string spec_path;
    std::string out_path;
    std::string format;
    int samples{-1};
    double step{-1.0};
    double tol{-1.0};
};

void add_common_options(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--spec", o.spec_path, "job document (JSON)")->required();
    cmd->add_option("--out", o.out_path, "output path (default: spec's out, else stdout)");
    cmd->add_option("--samples", o.samples, "sample count override")
        ->check(CLI::Range(2, 10000000));
    cmd->add_option("--step", o.step, "integrator step override")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol, "verdict tolerance override")->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frames, invariants, and Fermi-Walker transport for curves in Galilean 3-space"};
    app.require_subcommand(1);
    CliOverrides o;

    CLI::App* frame = app.add_subcommand("frame", "tabulate frame vectors and invariants");
    CLI::App* transport = app.add_subcommand("transport", "integrate Fermi-Walker transport");
    CLI::App* check = app.add_subcommand("check", "run the residual battery");
    add_common_options(frame, o);
    add_common_options(transport, o);
    add_common_options(check, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        gal3::JobSpec spec = gal3::parse_spec_file(o.spec_path);
        if (o.samples >= 2) spec.samples = o.samples;
        if (o.step > 0.0) spec.step = o.step;
        if (o.tol > 0.0) spec.tol = o.tol;
        if (!o.format.empty()) spec.format = o.format;
        if (!o.out_path.empty()) spec.out = o.out_path;

        gal3::CommandResult res;
        if (frame->parsed())
            res = gal3::run_frame(spec);
        else if (transport->parsed())
            res = gal3::run_transport(spec);
        else
            res = gal3::run_check(spec);

        if (spec.out.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream out(spec.out);
            if (!out) throw gal3::ValidationError("cannot open output path: " + spec.out);
            out << res.output;
        }
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
