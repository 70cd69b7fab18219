#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "exinv/quaternion.hpp"

namespace exinv {

/// Cayley number as a Cayley-Dickson pair of quaternions, multiplied by
///   (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)).
/// The pairing makes {1, i, j, k} the lo half and {e4, e5, e6, e7} the hi half.
struct Octonion {
  Quaternion lo, hi;

  constexpr Octonion() = default;
  constexpr Octonion(const Quaternion& lo_, const Quaternion& hi_) : lo(lo_), hi(hi_) {}

  static constexpr Octonion real(double v) { return {Quaternion::real(v), Quaternion{}}; }
};

inline Octonion operator+(const Octonion& a, const Octonion& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline Octonion operator-(const Octonion& a, const Octonion& b) {
  return {a.lo - b.lo, a.hi - b.hi};
}

inline Octonion operator-(const Octonion& o) { return {-o.lo, -o.hi}; }

inline Octonion operator*(double s, const Octonion& o) { return {s * o.lo, s * o.hi}; }

inline Octonion operator*(const Octonion& a, const Octonion& b) {
  return {a.lo * b.lo - conj(b.hi) * a.hi, b.hi * a.lo + a.hi * conj(b.lo)};
}

inline Octonion conj(const Octonion& o) { return {conj(o.lo), -o.hi}; }
inline double norm2(const Octonion& o) { return norm2(o.lo) + norm2(o.hi); }
inline double norm(const Octonion& o) { return std::sqrt(norm2(o)); }
inline double dist(const Octonion& a, const Octonion& b) { return norm(a - b); }

inline Octonion inverse(const Octonion& o) {
  const double n2 = norm2(o);
  if (n2 <= 0.0) throw std::domain_error("octonion inverse of zero");
  return (1.0 / n2) * conj(o);
}

inline bool is_pure(const Octonion& o, double tol = 1e-10) { return std::abs(o.lo.r) <= tol; }

/// Imaginary part as 7 coefficients on (i, j, k, e4, e5, e6, e7).
inline std::array<double, 7> im_coords(const Octonion& o) {
  return {o.lo.x, o.lo.y, o.lo.z, o.hi.r, o.hi.x, o.hi.y, o.hi.z};
}

inline Octonion from_im_coords(const std::array<double, 7>& c) {
  return {Quaternion{0.0, c[0], c[1], c[2]}, Quaternion{c[3], c[4], c[5], c[6]}};
}

inline Octonion exp_pure(const Octonion& p, double t, double purity_tol = 1e-10) {
  if (std::abs(p.lo.r) > purity_tol) throw std::domain_error("exp_pure: input is not pure imaginary");
  const auto im = im_coords(p);
  double r2 = 0.0;
  for (double c : im) r2 += c * c;
  const double r = std::sqrt(r2);
  if (r < 1e-13) return Octonion::real(1.0);
  const double s = std::sin(t * r) / r;
  Octonion out = s * p;
  out.lo.r = std::cos(t * r);
  return out;
}

/// (q x) conj(q) with this fixed parenthesization; unambiguous whenever q and x
/// lie in a common associative subalgebra.
inline Octonion conj_action(const Octonion& q, const Octonion& x) {
  return (q * x) * conj(q);
}

}  // namespace exinv
