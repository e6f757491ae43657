#pragma once

#include <string>
#include <vector>

namespace gal3 {

/// Default tolerances for the residual checks. Identity checks are exact
/// algebra evaluated in floating point; finite-difference checks carry the
/// truncation error of a second-order central difference at h = 1e-4;
/// verdict checks (non-rotating, coincidence, feasibility) are analytic
/// evaluations with no differencing.
inline constexpr double kTolIdentity = 1e-12;
inline constexpr double kTolFiniteDiff = 1e-6;
inline constexpr double kFiniteDiffStep = 1e-4;
inline constexpr double kTolVerdict = 1e-9;
inline constexpr double kTolTransportDeviation = 1e-8;
inline constexpr double kTolInvariantDrift = 1e-10;

/// One named residual with the tolerance it was judged against. `note`
/// carries context (which branch matched, which convention closed) and is
/// empty for plain residuals.
struct CheckEntry {
    std::string name;
    double value{0.0};
    double tolerance{0.0};
    bool pass{false};
    std::string note;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
};

/// Appends an entry whose pass is the inclusive comparison value <= tolerance.
void report_add(CheckReport& r, const std::string& name, double value, double tolerance,
                const std::string& note = "");

/// Appends an entry with an explicitly decided pass (classification checks
/// where the verdict is not a plain threshold).
void report_add_verdict(CheckReport& r, const std::string& name, double value, double tolerance,
                        bool pass, const std::string& note = "");

void report_merge(CheckReport& into, const CheckReport& from);

/// Conjunction of the per-entry passes; true for an empty report.
bool report_verdict(const CheckReport& r);

/// Largest entry value, 0 for an empty report.
double report_max_value(const CheckReport& r);

} // namespace gal3
