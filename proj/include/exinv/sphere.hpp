#pragma once

#include <cmath>
#include <stdexcept>

#include "exinv/algebra.hpp"
#include "exinv/rng.hpp"

namespace exinv {

inline constexpr double kSphereTol = 1e-10;

/// Point (p, w) with p pure imaginary and |p|^2 + |w|^2 = 1: S^6 over the
/// quaternions, S^14 over the Cayley numbers.
struct SpherePoint {
  AlgebraElement p, w;

  static SpherePoint make(AlgebraElement p_, AlgebraElement w_) {
    if (algebra_of(p_) != algebra_of(w_)) throw std::invalid_argument("SpherePoint: algebra mismatch");
    if (std::abs(re_part(p_)) > kSphereTol)
      throw std::domain_error("SpherePoint: p must be pure imaginary");
    if (std::abs(norm2(p_) + norm2(w_) - 1.0) > kSphereTol)
      throw std::domain_error("SpherePoint: |p|^2 + |w|^2 must be 1");
    return SpherePoint{std::move(p_), std::move(w_)};
  }

  Algebra algebra() const { return algebra_of(p); }
};

inline double dist(const SpherePoint& a, const SpherePoint& b) {
  const double dp = dist(a.p, b.p), dw = dist(a.w, b.w);
  return std::sqrt(dp * dp + dw * dw);
}

/// Sphere point with w pure as well: the invariant equator S^5 or S^13.
struct EquatorPoint {
  AlgebraElement p, w;

  static EquatorPoint make(AlgebraElement p_, AlgebraElement w_) {
    if (std::abs(re_part(w_)) > kSphereTol)
      throw std::domain_error("EquatorPoint: w must be pure imaginary");
    SpherePoint base = SpherePoint::make(std::move(p_), std::move(w_));
    return EquatorPoint{std::move(base.p), std::move(base.w)};
  }

  SpherePoint as_sphere() const { return SpherePoint{p, w}; }
  Algebra algebra() const { return algebra_of(p); }
};

inline double dist(const EquatorPoint& a, const EquatorPoint& b) {
  const double dp = dist(a.p, b.p), dw = dist(a.w, b.w);
  return std::sqrt(dp * dp + dw * dw);
}

inline EquatorPoint equator_antipode(const EquatorPoint& y) { return EquatorPoint{-y.p, -y.w}; }

namespace detail {

inline AlgebraElement sample_pure(Rng& rng, Algebra a) {
  std::array<double, 7> c{};
  for (int i = 0; i < pure_dim(a); ++i) c[i] = rng.normal();
  return pure_from_coords(a, c);
}

}  // namespace detail

inline SpherePoint sample_sphere_point(Rng& rng, Algebra a) {
  for (;;) {
    AlgebraElement p = detail::sample_pure(rng, a);
    AlgebraElement w = a == Algebra::quaternion
                           ? AlgebraElement{Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()}}
                           : AlgebraElement{Octonion{{rng.normal(), rng.normal(), rng.normal(), rng.normal()},
                                                     {rng.normal(), rng.normal(), rng.normal(), rng.normal()}}};
    const double n = std::sqrt(norm2(p) + norm2(w));
    if (n > 1e-6) return SpherePoint{(1.0 / n) * p, (1.0 / n) * w};
  }
}

inline EquatorPoint sample_equator_point(Rng& rng, Algebra a) {
  for (;;) {
    AlgebraElement p = detail::sample_pure(rng, a);
    AlgebraElement w = detail::sample_pure(rng, a);
    const double n = std::sqrt(norm2(p) + norm2(w));
    if (n > 1e-6) return EquatorPoint{(1.0 / n) * p, (1.0 / n) * w};
  }
}

}  // namespace exinv
