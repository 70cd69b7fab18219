#include "exinv/exotic_maps.hpp"

#include <cmath>
#include <cstdlib>

namespace exinv {

namespace {
constexpr double kBranchEps = 1e-13;  // w = 0 branch cutoff
}

AlgebraElement blakers_massey(const SpherePoint& x) {
  const double wn = norm(x.w);
  if (wn < kBranchEps) return real_elem(x.algebra(), -1.0);
  const AlgebraElement wu = (1.0 / wn) * x.w;
  const AlgebraElement e = exp_pure(x.p, kPi);
  // All three factors lie in the subalgebra generated by p and w, so the
  // product needs no parenthesization care even over the Cayley numbers.
  return (wu * e) * ((1.0 / wn) * conj(x.w));
}

AlgebraElement unit_power(const AlgebraElement& b, int k) {
  AlgebraElement acc = one(algebra_of(b));
  const AlgebraElement base = k >= 0 ? b : conj(b);
  for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
  return acc;
}

SpherePoint sigma_pow(const SpherePoint& x, int k) {
  if (k == 0) return x;
  const AlgebraElement bk = unit_power(blakers_massey(x), k);
  return SpherePoint::make(conj_action(bk, x.p), conj_action(bk, x.w));
}

SpherePoint antipode(const SpherePoint& x) { return SpherePoint{-x.p, -x.w}; }

SpherePoint rho(const SpherePoint& x, int k) { return antipode(sigma_pow(x, k)); }

EquatorPoint rho(const EquatorPoint& y, int k) {
  const SpherePoint image = rho(y.as_sphere(), k);
  return EquatorPoint::make(image.p, image.w);
}

double displacement(const SpherePoint& x, int k) { return dist(rho(x, k), x); }

FigureStages figure_stages(const Vec3& p, const Vec3& w) {
  FigureStages st;
  st.p = p;
  st.w = w;
  const double pn = norm(p);
  if (pn < kBranchEps) {
    // Rotation angle 2*pi*|p| degenerates to zero; no axis is needed.
    st.axis = Vec3{};
    st.rotated_p = p;
    st.rotated_w = w;
    st.final_p = -p;
    st.final_w = -w;
    return st;
  }
  const double wn = norm(w);
  Vec3 axis;
  if (wn < kBranchEps) {
    axis = (1.0 / pn) * p;  // analytic extension at w = 0
  } else {
    const Vec3 wu = (1.0 / wn) * w;
    // p rotated half a turn about w; collapses to p itself when p and w are
    // parallel, which is the documented extension for that degeneracy.
    const Vec3 a = 2.0 * dot(p, wu) * wu - p;
    axis = (1.0 / norm(a)) * a;
  }
  st.axis = axis;
  const double angle = 2.0 * kPi * pn;
  st.rotated_p = rodrigues_rotate(axis, angle, p);
  st.rotated_w = rodrigues_rotate(axis, angle, w);
  st.final_p = -st.rotated_p;
  st.final_w = -st.rotated_w;
  return st;
}

EquatorPoint geometric_rho(const EquatorPoint& y) {
  if (y.algebra() != Algebra::quaternion)
    throw std::invalid_argument("geometric_rho: quaternionic equator only");
  const Vec3 p = as_quat(y.p).vec();
  const Vec3 w = as_quat(y.w).vec();
  const FigureStages st = figure_stages(p, w);
  return EquatorPoint::make(Quaternion::pure(st.final_p), Quaternion::pure(st.final_w));
}

std::pair<double, double> fixed_point_residuals(double theta) {
  const Quaternion p{0.0, 0.5, 0.0, 0.0};
  const double s = std::sqrt(3.0) / 2.0;
  const Quaternion w{0.0, s * std::cos(theta), s * std::sin(theta), 0.0};
  const SpherePoint x = SpherePoint::make(p, w);
  const Quaternion b = as_quat(blakers_massey(x));
  return {norm(b * p + p * b), norm(b * w + w * b)};
}

}  // namespace exinv
