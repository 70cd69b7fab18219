#include "exinv/group_actions.hpp"

#include "exinv/exotic_maps.hpp"

namespace exinv {

ProductPoint r1(const Z2S3& g, const ProductPoint& pt) {
  if (g.bit == 0) return {pt.x, g.theta * pt.q};
  const Quaternion b = as_quat(blakers_massey(pt.x));
  return {rho(pt.x, -1), (g.theta * pt.q) * b};
}

ProductPoint r2(const Z2S3& g, const ProductPoint& pt) {
  if (g.bit == 0) return {pt.x, g.theta * pt.q};
  const Quaternion b = as_quat(blakers_massey(pt.x));
  return {antipode(pt.x), (g.theta * pt.q) * conj(b)};
}

ProductPoint conjugating_involution(const ProductPoint& pt) {
  const AlgebraElement q{pt.q};
  return {SpherePoint::make(conj_action(q, pt.x.p), conj_action(q, pt.x.w)), conj(pt.q)};
}

}  // namespace exinv
