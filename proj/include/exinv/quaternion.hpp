#pragma once

#include <cmath>
#include <stdexcept>

namespace exinv {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Quaternion r + x i + y j + z k with the Hamilton product (ij = k).
struct Quaternion {
  double r = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double x_, double y_, double z_) : r(r_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double v) { return {v, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

  Vec3 vec() const { return {x, y, z}; }
};

inline constexpr Quaternion kQuatOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQuatI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQuatJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQuatK{0.0, 0.0, 0.0, 1.0};

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.r + b.r, a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.r - b.r, a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Quaternion operator-(const Quaternion& q) { return {-q.r, -q.x, -q.y, -q.z}; }

inline Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.r, s * q.x, s * q.y, s * q.z};
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.r * b.r - a.x * b.x - a.y * b.y - a.z * b.z,
          a.r * b.x + a.x * b.r + a.y * b.z - a.z * b.y,
          a.r * b.y - a.x * b.z + a.y * b.r + a.z * b.x,
          a.r * b.z + a.x * b.y - a.y * b.x + a.z * b.r};
}

inline Quaternion conj(const Quaternion& q) { return {q.r, -q.x, -q.y, -q.z}; }
inline double norm2(const Quaternion& q) { return q.r * q.r + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }
inline double dist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 <= 0.0) throw std::domain_error("quaternion inverse of zero");
  return (1.0 / n2) * conj(q);
}

inline bool is_pure(const Quaternion& q, double tol = 1e-10) { return std::abs(q.r) <= tol; }

/// exp(t p) for pure-imaginary p: cos(t|p|) + sin(t|p|) p/|p|, with the limit
/// value 1 at p = 0. Inputs whose real part exceeds `purity_tol` are rejected.
inline Quaternion exp_pure(const Quaternion& p, double t, double purity_tol = 1e-10) {
  if (std::abs(p.r) > purity_tol) throw std::domain_error("exp_pure: input is not pure imaginary");
  const double r = norm(p.vec());
  if (r < 1e-13) return kQuatOne;
  const double s = std::sin(t * r) / r;
  return {std::cos(t * r), s * p.x, s * p.y, s * p.z};
}

/// (q x) conj(q), the rotation/automorphism action of a unit q.
inline Quaternion conj_action(const Quaternion& q, const Quaternion& x) {
  return (q * x) * conj(q);
}

}  // namespace exinv
