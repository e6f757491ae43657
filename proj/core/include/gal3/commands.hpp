#pragma once

#include <string>

#include "gal3/check_report.hpp"
#include "gal3/job_spec.hpp"

namespace gal3 {

inline constexpr int kReportSchemaVersion = 1;

/// Rendered command output plus the process exit code it implies: 0 for
/// success, 1 when a check entry fails. Input errors surface as thrown
/// ValidationError/DomainError and map to exit code 2 at the CLI boundary.
struct CommandResult {
    std::string output;
    int exit_code{0};
};

/// Shortest round-trip decimal representation; negative zero normalized to
/// "0" so output is a pure function of the value.
std::string format_double(double v);

/// One row per sample with the Frenet columns, plus the Darboux columns
/// when the spec has an attachment. Degenerate-curvature samples keep their
/// row, flagged in the status column with the frame cells left empty.
CommandResult run_frame(const JobSpec& spec);

/// RK4 trajectory rows with the closed-form columns and their deviation,
/// followed by a summary block (max deviation, drifts, and for isotropic
/// fields the feasibility residual and verdict).
CommandResult run_transport(const JobSpec& spec);

/// The full residual battery for the spec'd curve/attachment/field; exit
/// code 1 when any entry fails. Evaluation errors become failed entries
/// rather than aborting the report.
CommandResult run_check(const JobSpec& spec);

/// The battery behind run_check, exposed for direct use.
CheckReport check_battery(const JobSpec& spec);

} // namespace gal3
