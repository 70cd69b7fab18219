#pragma once

#include <utility>

#include "exinv/rng.hpp"
#include "exinv/sphere.hpp"

namespace exinv {

/// 2x2 quaternionic matrix with orthonormal columns (a, b) and (c, d);
/// an element of Sp(2).
struct Sp2 {
  Quaternion a, b, c, d;
};

inline Sp2 operator-(const Sp2& A) { return {-A.a, -A.b, -A.c, -A.d}; }

/// Max entry norm of A*A - I (columns orthonormal).
double unitarity_error(const Sp2& A);

/// q * A = diag(q, q) A diag(conj(q), 1): entries (q a conj(q), q c; q b conj(q), q d).
Sp2 star_action(const Quaternion& q, const Sp2& A);

/// A diag(1, conj(q)): right multiplication on the second column only.
Sp2 bullet_action(const Quaternion& q, const Sp2& A);

/// The free involution A -> -A.
inline Sp2 m_involution(const Sp2& A) { return -A; }

/// Projection to S^7 = first column; constant on bullet orbits.
inline std::pair<Quaternion, Quaternion> to_s7(const Sp2& A) { return {A.a, A.b}; }

/// Horizontal geodesic through the identity with initial velocity given by
/// pure p and w, |p|^2 + |w|^2 = 1. Generic formula for w != 0; for w = 0 it
/// degenerates to diag(e^{tp}, 1).
Sp2 horizontal_geodesic(const Quaternion& p, const Quaternion& w, double t);

/// Geodesic-midpoint locus: Re(a) = 0 (and additionally Re(b) = 0 for the
/// equatorial sublocus).
bool in_s6(const Sp2& A, double tol = 1e-10);
bool in_s5(const Sp2& A, double tol = 1e-10);

/// Trivialization psi((p, w), q) = star_action(q, geodesic midpoint); its
/// inverse recovers q as -(b/|b|) e^{-(pi/2) a} (c/|c|).
Sp2 psi_map(const Quaternion& p, const Quaternion& w, const Quaternion& q);
std::pair<SpherePoint, Quaternion> psi_inv(const Sp2& A);

/// Trivialization phi((p, w), q) = geodesic midpoint times diag(1, conj(q));
/// inverse q = -(conj(c)/|c|) e^{(pi/2) a} (conj(b)/|b|).
Sp2 phi_map(const Quaternion& p, const Quaternion& w, const Quaternion& q);
std::pair<SpherePoint, Quaternion> phi_inv(const Sp2& A);

/// psi^{-1} . m . psi; closed form (rho_{-1}(p, w), q b(p, w)).
std::pair<SpherePoint, Quaternion> pullback_star(const SpherePoint& x, const Quaternion& q);

/// phi^{-1} . m . phi; closed form (antipode(p, w), q conj(b(p, w))).
std::pair<SpherePoint, Quaternion> pullback_bullet(const SpherePoint& x, const Quaternion& q);

/// Bundle coordinates over the chart d != 0 (with a != 0 for the fiber
/// normalization): (u, v) = |d|^{-2} (conj(c) d, conj(d) a d |a|^{-1}).
struct MilnorCoords {
  Quaternion u, v;
};

MilnorCoords milnor_chart(const Sp2& A);

/// Chart transition (u, v) -> (u/|u|^2, u^2 v u^{-1} / |u|).
MilnorCoords milnor_clutch(const MilnorCoords& m);

/// The antipodal map in the fibers, (u, v) -> (u, -v).
inline MilnorCoords fiber_antipode(const MilnorCoords& m) { return {m.u, -m.v}; }

/// Residuals |Re(u v)| and |Re(v)| of the chart image. On the midpoint locus
/// Re(a) = 0 the second vanishes identically (Re(v) = Re(a)/|a|); the first
/// equals |Re(b)|/|a| and vanishes exactly on the equatorial sublocus, which
/// is where both invariant-sphere conditions meet.
struct ChartResiduals {
  double re_uv, re_v;
};

ChartResiduals chart_residuals(const Sp2& A);

/// Haar-ish random element via quaternionic Gram-Schmidt on Gaussian columns.
Sp2 random_sp2(Rng& rng);

}  // namespace exinv
