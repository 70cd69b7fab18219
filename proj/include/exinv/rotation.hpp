#pragma once

#include <cmath>
#include <stdexcept>

#include "exinv/quaternion.hpp"

namespace exinv {

/// Axis-angle rotation of v about a unit axis (right-hand rule). Serves as the
/// independent 3D oracle for quaternion conjugation.
inline Vec3 rodrigues_rotate(const Vec3& axis, double angle, const Vec3& v) {
  if (std::abs(norm(axis) - 1.0) > 1e-8)
    throw std::domain_error("rodrigues_rotate: axis must be a unit vector");
  const double c = std::cos(angle), s = std::sin(angle);
  return c * v + s * cross(axis, v) + ((1.0 - c) * dot(axis, v)) * axis;
}

/// Axis and angle of the rotation x -> q x conj(q) for unit q with nonzero
/// imaginary part, normalized so the angle lies in [0, pi].
struct AxisAngle {
  Vec3 axis;
  double angle;
};

inline AxisAngle rotation_of_conjugation(const Quaternion& q) {
  Quaternion qn = q.r >= 0.0 ? q : -q;
  const double im = norm(qn.vec());
  if (im < 1e-14) return {{0.0, 0.0, 1.0}, 0.0};
  double c = 2.0 * qn.r * qn.r - 1.0;
  c = c < -1.0 ? -1.0 : (c > 1.0 ? 1.0 : c);
  return {(1.0 / im) * qn.vec(), std::acos(c)};
}

}  // namespace exinv
