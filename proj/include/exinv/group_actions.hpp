#pragma once

#include "exinv/sphere.hpp"

namespace exinv {

/// Point of S^6 x S^3: a quaternionic sphere point plus a unit quaternion.
struct ProductPoint {
  SpherePoint x;
  Quaternion q;
};

inline double dist(const ProductPoint& a, const ProductPoint& b) {
  const double dx = dist(a.x, b.x), dq = dist(a.q, b.q);
  return std::sqrt(dx * dx + dq * dq);
}

/// Element of Z2 x S^3 with the direct-product law.
struct Z2S3 {
  int bit = 0;
  Quaternion theta = kQuatOne;
};

inline Z2S3 compose(const Z2S3& g1, const Z2S3& g2) {
  return {g1.bit ^ g2.bit, g1.theta * g2.theta};
}

/// The action pulled back through the star trivialization:
///   (0, theta): ((p, w), theta q)
///   (1, theta): (rho_{-1}(p, w), theta q b(p, w)).
ProductPoint r1(const Z2S3& g, const ProductPoint& pt);

/// The action pulled back through the bullet trivialization:
///   (0, theta): ((p, w), theta q)
///   (1, theta): (antipode(p, w), theta q conj(b(p, w))).
ProductPoint r2(const Z2S3& g, const ProductPoint& pt);

/// F((p, w), q) = ((q p conj(q), q w conj(q)), conj(q)); an involution that
/// conjugates the restricted Z2 parts of r1 and r2 into each other.
ProductPoint conjugating_involution(const ProductPoint& pt);

}  // namespace exinv
