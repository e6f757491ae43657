#pragma once

#include <stdexcept>
#include <string>

namespace gal3 {

/// Evaluation requested outside a curve's domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Curvature at or below the degeneracy cutoff where a frame was required.
struct DegenerateCurvatureError : std::runtime_error {
    explicit DegenerateCurvatureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A ratio of invariants was requested where its denominator vanishes.
struct DegenerateRatioError : std::runtime_error {
    explicit DegenerateRatioError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent job input (bad JSON, unknown keys, non-finite
/// numbers, fields straddling the isotropy cutoff, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gal3
