#pragma once

#include <functional>
#include <vector>

#include "exinv/exotic_maps.hpp"
#include "exinv/sphere.hpp"

namespace exinv {

/// A path of equator diffeomorphisms, t in [0, 1]. The inverse evaluator is
/// optional and always analytic when present; paths without one reject
/// pointwise inversion rather than inverting numerically.
struct DiffPath {
  Algebra algebra = Algebra::quaternion;
  std::function<EquatorPoint(double, const EquatorPoint&)> eval;
  std::function<EquatorPoint(double, const EquatorPoint&)> inverse_eval;  // may be empty
  bool identity_at_0 = false;
  bool identity_at_1 = false;
};

/// The explicit loop through the exotic diffeomorphism: with w0 = cos(pi t),
/// s = sin(pi t) and beta = b(s p, w0 + s w), maps (p, w) to the conjugate
/// pair (beta p conj(beta), beta w conj(beta)). Identity at t = 0 and t = 1,
/// equal to the equator restriction of sigma at t = 1/2.
EquatorPoint sigma_loop(double t, const EquatorPoint& y);

DiffPath sigma_loop_path(Algebra a);

DiffPath constant_identity_path(Algebra a);

/// Reverse path t -> P(1 - t).
DiffPath reverse(const DiffPath& path);

/// Concatenation at t = 1/2 with affine reparametrization. The endpoints
/// P(1) and Q(0) must agree on a probe set to 1e-9.
DiffPath juxtapose(const DiffPath& first, const DiffPath& second);

/// t -> alpha0 . P(t) . alpha0 where alpha0 is the equator antipodal map.
DiffPath conjugate_by_antipode(const DiffPath& path);

DiffPath pointwise_inverse(const DiffPath& path);

/// Reparametrization by a C-infinity ramp that is flat on [0, eps] and
/// [1 - eps, 1]; gives the representative that is the identity on a
/// neighborhood of the endpoints.
DiffPath flat_ramp(const DiffPath& path, double eps = 0.05);

/// Builds a sphere diffeomorphism from a loop with identity endpoints by
/// acting on the latitude slices: decompose w = w0 + omega, apply
/// P(arccos(w0)/pi) to the unit equator pair, reassemble. Poles are fixed.
std::function<SpherePoint(const SpherePoint&)> suspend(const DiffPath& path);

/// A(t) = cos(pi t) I + sin(pi t) J on the ambient coordinates of the
/// equator, where J pairs consecutive coordinates; A(0) = I, A(1) = -I.
class RotationPath {
 public:
  explicit RotationPath(Algebra a);

  Algebra algebra() const { return algebra_; }
  int ambient() const { return ambient_; }

  void apply_coords(double t, std::vector<double>& v) const;
  void apply_inverse_coords(double t, std::vector<double>& v) const;
  EquatorPoint apply(double t, const EquatorPoint& y) const;
  EquatorPoint apply_inverse(double t, const EquatorPoint& y) const;

 private:
  Algebra algebra_;
  int ambient_;
};

std::vector<double> flatten(const EquatorPoint& y);
EquatorPoint unflatten(Algebra a, const std::vector<double>& coords);

/// Max deviation of the reversal identities A(1-t)^{-1} = -A(t) = A(t) alpha0
/// as linear maps, sampled over t and the coordinate basis.
double rotation_identity_error(const RotationPath& A, int t_samples);

/// Invertible equator self-map (used as the test maps h below).
struct SphereMap {
  std::function<EquatorPoint(const EquatorPoint&)> fwd, inv;
};

SphereMap identity_map();
SphereMap antipode_map();
/// Conjugation of both components by a unit element.
SphereMap conjugation_map(const AlgebraElement& q);
/// Equator restriction of sigma, with its analytic inverse.
SphereMap sigma0_map();
/// Fixed-time slice of a path that carries an inverse evaluator.
SphereMap path_slice(const DiffPath& path, double t0);
SphereMap rotation_slice(const RotationPath& A, double t0);
SphereMap compose(const SphereMap& f, const SphereMap& g);  // f after g

/// psi-hat(t) = A(t)^{-1} h A(t) h^{-1}; a path from the identity whose
/// endpoint would be the equator sigma if h conjugated the involutions.
SphereMap commutator_path(double t, const SphereMap& h, const RotationPath& A);

/// The two-parameter homotopy
///   H(s, t) = alpha0 A(u)^{-1} h A(u) alpha0 A(v)^{-1} h^{-1} A(v),
/// u = s + t - st, v = 1 - s + ts, interpolating between the conjugated
/// commutator path and its pointwise inverse.
SphereMap commutator_homotopy(double s, double t, const SphereMap& h, const RotationPath& A);

}  // namespace exinv
