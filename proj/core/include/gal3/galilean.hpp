#pragma once

#include <cmath>

namespace gal3 {

/// Absolute cutoff on the first component below which a vector is treated
/// as isotropic. The dichotomy is exact in the model; floating point needs
/// a stable branch selector.
inline constexpr double kEpsIso = 1e-12;

/// Curvatures at or below this magnitude count as degenerate: the principal
/// normal (and everything built on it) is undefined there.
inline constexpr double kKappaMin = 1e-10;

/// A vector (or point) of the Galilean 3-space. The first component is the
/// distinguished direction: vectors with v1 = 0 are isotropic and are
/// measured with the Euclidean product on (v2, v3); all others are
/// non-isotropic and are measured through v1 alone.
struct GVec3 {
    double v1{0.0}, v2{0.0}, v3{0.0};

    GVec3() = default;
    GVec3(double a, double b, double c) : v1(a), v2(b), v3(c) {}

    GVec3 operator+(const GVec3& o) const { return {v1 + o.v1, v2 + o.v2, v3 + o.v3}; }
    GVec3 operator-(const GVec3& o) const { return {v1 - o.v1, v2 - o.v2, v3 - o.v3}; }
    GVec3 operator-() const { return {-v1, -v2, -v3}; }
    GVec3 operator*(double s) const { return {v1 * s, v2 * s, v3 * s}; }
    GVec3 operator/(double s) const { return {v1 / s, v2 / s, v3 / s}; }
    GVec3& operator+=(const GVec3& o) { v1 += o.v1; v2 += o.v2; v3 += o.v3; return *this; }
    GVec3& operator-=(const GVec3& o) { v1 -= o.v1; v2 -= o.v2; v3 -= o.v3; return *this; }

    /// Returns a copy whose first component is snapped to exactly 0 when it
    /// is below the isotropy cutoff. Frame constructors use this so branch
    /// selection stays stable under roundoff.
    GVec3 snapped(double eps = kEpsIso) const {
        return {std::abs(v1) <= eps ? 0.0 : v1, v2, v3};
    }
};

inline GVec3 operator*(double s, const GVec3& v) { return v * s; }

inline bool is_isotropic(const GVec3& v, double eps = kEpsIso) {
    return std::abs(v.v1) <= eps;
}

/// Degenerate scalar product: v1*w1 when either argument is non-isotropic,
/// v2*w2 + v3*w3 when both are isotropic.
inline double g_dot(const GVec3& v, const GVec3& w) {
    if (is_isotropic(v) && is_isotropic(w)) return v.v2 * w.v2 + v.v3 * w.v3;
    return v.v1 * w.v1;
}

/// sqrt(g_dot(v, v)): |v1| for non-isotropic v, the Euclidean length of
/// (v2, v3) otherwise.
inline double g_norm(const GVec3& v) {
    if (is_isotropic(v)) return std::hypot(v.v2, v.v3);
    return std::abs(v.v1);
}

/// Formal determinant with first row (0, e2, e3). The result's first
/// component is structurally zero, so it is always isotropic (or zero).
inline GVec3 g_cross(const GVec3& v, const GVec3& w) {
    return {0.0, v.v3 * w.v1 - v.v1 * w.v3, v.v1 * w.v2 - v.v2 * w.v1};
}

/// Euclidean norm on raw components; check reports measure residuals with
/// this, independent of the degenerate metric.
inline double e_norm(const GVec3& v) {
    return std::sqrt(v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3);
}

inline double e_norm_inf(const GVec3& v) {
    return std::fmax(std::abs(v.v1), std::fmax(std::abs(v.v2), std::abs(v.v3)));
}

/// An isometry of the Galilean 3-space: translation (a1, a2, a4), shear
/// (a3, a5) along the distinguished axis, and rotation phi of the
/// isotropic plane.
struct GalileanMotion {
    double a1{0.0}, a2{0.0}, a3{0.0}, a4{0.0}, a5{0.0};
    double phi{0.0};
};

/// Full affine action on a point.
GVec3 apply_motion_point(const GalileanMotion& m, const GVec3& p);

/// Linear part of the motion acting on a displacement vector: translations
/// dropped, shear and rotation kept. Preserves g_dot on both branches.
GVec3 apply_motion_vector(const GalileanMotion& m, const GVec3& v);

} // namespace gal3
