#include "gal3/check_report.hpp"

#include <algorithm>

namespace gal3 {

void report_add(CheckReport& r, const std::string& name, double value, double tolerance,
                const std::string& note) {
    r.entries.push_back({name, value, tolerance, value <= tolerance, note});
}

void report_add_verdict(CheckReport& r, const std::string& name, double value, double tolerance,
                        bool pass, const std::string& note) {
    r.entries.push_back({name, value, tolerance, pass, note});
}

void report_merge(CheckReport& into, const CheckReport& from) {
    into.entries.insert(into.entries.end(), from.entries.begin(), from.entries.end());
}

bool report_verdict(const CheckReport& r) {
    return std::all_of(r.entries.begin(), r.entries.end(),
                       [](const CheckEntry& e) { return e.pass; });
}

double report_max_value(const CheckReport& r) {
    double m = 0.0;
    for (const auto& e : r.entries) m = std::max(m, e.value);
    return m;
}

} // namespace gal3
