#include "gal3/galilean.hpp"

namespace gal3 {

GVec3 apply_motion_point(const GalileanMotion& m, const GVec3& p) {
    const double c = std::cos(m.phi), s = std::sin(m.phi);
    return {m.a1 + p.v1,
            m.a2 + m.a3 * p.v1 + c * p.v2 + s * p.v3,
            m.a4 + m.a5 * p.v1 - s * p.v2 + c * p.v3};
}

GVec3 apply_motion_vector(const GalileanMotion& m, const GVec3& v) {
    const double c = std::cos(m.phi), s = std::sin(m.phi);
    return {v.v1,
            m.a3 * v.v1 + c * v.v2 + s * v.v3,
            m.a5 * v.v1 - s * v.v2 + c * v.v3};
}

} // namespace gal3
