#pragma once

#include <functional>

namespace gal3 {

inline constexpr double kQuadratureTol = 1e-10;
inline constexpr long kQuadratureMaxIntervals = 1L << 20;

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance, with Richardson extrapolation on accepted intervals. Reversed
/// bounds negate the result. Throws QuadratureError when the subdivision
/// cap is exhausted before the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = kQuadratureTol);

} // namespace gal3
