#pragma once

#include <utility>

#include "exinv/rotation.hpp"
#include "exinv/sphere.hpp"

namespace exinv {

/// Blakers-Massey element b(p, w) = (w/|w|) e^{pi p} (conj(w)/|w|), extended
/// by -1 across w = 0. Unit norm; generates the relevant homotopy group in
/// both algebras.
AlgebraElement blakers_massey(const SpherePoint& x);

/// b^k for unit b, with negative powers through the conjugate.
AlgebraElement unit_power(const AlgebraElement& b, int k);

/// sigma^k(p, w) = (b^k p conj(b)^k, b^k w conj(b)^k) with b = b(p, w);
/// sigma_pow(x, 0) is the identity and sigma_pow(x, 1) the exotic
/// diffeomorphism itself.
SpherePoint sigma_pow(const SpherePoint& x, int k);

SpherePoint antipode(const SpherePoint& x);

/// rho_k = antipode composed with sigma^k; a free involution for every k.
SpherePoint rho(const SpherePoint& x, int k);

EquatorPoint rho(const EquatorPoint& y, int k);

/// Chordal distance |rho_k(x) - x| in the ambient product space; strict
/// positivity over the sphere witnesses that rho_k acts freely.
double displacement(const SpherePoint& x, int k);

/// Intermediate data of the three-step pictorial construction on S^5:
/// rotate p half a turn about w to get an oriented axis, rotate (p, w) about
/// that axis by 2*pi*|p|, then pass to antipodes.
struct FigureStages {
  Vec3 p, w;
  Vec3 axis;
  Vec3 rotated_p, rotated_w;
  Vec3 final_p, final_w;
};

FigureStages figure_stages(const Vec3& p, const Vec3& w);

/// The pictorial construction above, evaluated through the Rodrigues rotation
/// oracle; agrees with rho(y, 1) on the quaternionic equator.
EquatorPoint geometric_rho(const EquatorPoint& y);

/// Anticommutator norms (|bp + pb|, |bw + wb|) at the normal-form family
/// p = i/2, w = (sqrt(3)/2)(cos(theta) i + sin(theta) j). The first residual
/// vanishes exactly at theta = pi/4 and 3*pi/4; the second stays away from
/// zero there, which is why rho has no fixed points.
std::pair<double, double> fixed_point_residuals(double theta);

}  // namespace exinv
