#include "exinv/sp2.hpp"

#include <cmath>
#include <stdexcept>

#include "exinv/exotic_maps.hpp"

namespace exinv {

namespace {

constexpr double kDomainDelta = 1e-8;  // unit-normalization cutoff |b|, |c|, |d|, |a|

Quaternion strip_real(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

[[noreturn]] void reject(const char* what) { throw std::domain_error(what); }

}  // namespace

double unitarity_error(const Sp2& A) {
  const Quaternion g11 = conj(A.a) * A.a + conj(A.b) * A.b - kQuatOne;
  const Quaternion g12 = conj(A.a) * A.c + conj(A.b) * A.d;
  const Quaternion g22 = conj(A.c) * A.c + conj(A.d) * A.d - kQuatOne;
  return std::max({norm(g11), norm(g12), norm(g22)});
}

Sp2 star_action(const Quaternion& q, const Sp2& A) {
  return {conj_action(q, A.a), conj_action(q, A.b), q * A.c, q * A.d};
}

Sp2 bullet_action(const Quaternion& q, const Sp2& A) {
  const Quaternion qc = conj(q);
  return {A.a, A.b, A.c * qc, A.d * qc};
}

Sp2 horizontal_geodesic(const Quaternion& p, const Quaternion& w, double t) {
  const double wn = norm(w);
  if (wn < 1e-13) return {exp_pure(p, t), Quaternion{}, Quaternion{}, kQuatOne};
  const double ct = std::cos(t), st = std::sin(t);
  const Quaternion e = exp_pure(p, t);
  const Quaternion wu = (1.0 / wn) * w;
  const Quaternion a = Quaternion::real(ct) + st * p;
  const Quaternion b = st * w;
  const Quaternion c = -st * (e * conj(w));
  const Quaternion d = wu * (((Quaternion::real(ct) - st * p) * e) * conj(wu));
  return {a, b, c, d};
}

bool in_s6(const Sp2& A, double tol) { return std::abs(A.a.r) <= tol; }

bool in_s5(const Sp2& A, double tol) { return std::abs(A.a.r) <= tol && std::abs(A.b.r) <= tol; }

Sp2 psi_map(const Quaternion& p, const Quaternion& w, const Quaternion& q) {
  return star_action(q, horizontal_geodesic(p, w, kPi / 2.0));
}

std::pair<SpherePoint, Quaternion> psi_inv(const Sp2& A) {
  if (std::abs(A.a.r) > kDomainDelta) reject("psi_inv: a entry is not pure (not a midpoint frame)");
  const double bn = norm(A.b), cn = norm(A.c);
  if (bn <= kDomainDelta) reject("psi_inv: b entry vanishes");
  if (cn <= kDomainDelta) reject("psi_inv: c entry vanishes");
  const Quaternion q =
      -((((1.0 / bn) * A.b) * exp_pure(strip_real(A.a), -kPi / 2.0)) * ((1.0 / cn) * A.c));
  const Quaternion qc = conj(q);
  const Quaternion p = strip_real((qc * A.a) * q);
  const Quaternion w = (qc * A.b) * q;
  return {SpherePoint::make(p, w), q};
}

Sp2 phi_map(const Quaternion& p, const Quaternion& w, const Quaternion& q) {
  return bullet_action(q, horizontal_geodesic(p, w, kPi / 2.0));
}

std::pair<SpherePoint, Quaternion> phi_inv(const Sp2& A) {
  if (std::abs(A.a.r) > kDomainDelta) reject("phi_inv: a entry is not pure (not a midpoint frame)");
  const double bn = norm(A.b), cn = norm(A.c);
  if (bn <= kDomainDelta) reject("phi_inv: b entry vanishes");
  if (cn <= kDomainDelta) reject("phi_inv: c entry vanishes");
  const Quaternion q =
      -((((1.0 / cn) * conj(A.c)) * exp_pure(strip_real(A.a), kPi / 2.0)) * ((1.0 / bn) * conj(A.b)));
  const Quaternion p = strip_real(A.a);
  return {SpherePoint::make(p, A.b), q};
}

std::pair<SpherePoint, Quaternion> pullback_star(const SpherePoint& x, const Quaternion& q) {
  return psi_inv(m_involution(psi_map(as_quat(x.p), as_quat(x.w), q)));
}

std::pair<SpherePoint, Quaternion> pullback_bullet(const SpherePoint& x, const Quaternion& q) {
  return phi_inv(m_involution(phi_map(as_quat(x.p), as_quat(x.w), q)));
}

MilnorCoords milnor_chart(const Sp2& A) {
  const double dn = norm(A.d), an = norm(A.a);
  if (dn <= kDomainDelta) reject("milnor_chart: d entry vanishes (outside chart)");
  if (an <= kDomainDelta) reject("milnor_chart: a entry vanishes (fiber normalization)");
  const double inv_d2 = 1.0 / (dn * dn);
  const Quaternion u = inv_d2 * (conj(A.c) * A.d);
  const Quaternion v = (inv_d2 / an) * ((conj(A.d) * A.a) * A.d);
  return {u, v};
}

MilnorCoords milnor_clutch(const MilnorCoords& m) {
  const double un = norm(m.u);
  if (un < 1e-13) reject("milnor_clutch: u must be nonzero");
  const Quaternion u2 = m.u * m.u;
  return {(1.0 / (un * un)) * m.u, (1.0 / un) * ((u2 * m.v) * inverse(m.u))};
}

ChartResiduals chart_residuals(const Sp2& A) {
  const MilnorCoords m = milnor_chart(A);
  return {std::abs((m.u * m.v).r), std::abs(m.v.r)};
}

Sp2 random_sp2(Rng& rng) {
  for (;;) {
    Quaternion a{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    Quaternion b{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const double n1 = std::sqrt(norm2(a) + norm2(b));
    if (n1 < 1e-6) continue;
    a = (1.0 / n1) * a;
    b = (1.0 / n1) * b;
    Quaternion c{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    Quaternion d{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const Quaternion overlap = conj(a) * c + conj(b) * d;
    c = c - a * overlap;
    d = d - b * overlap;
    const double n2 = std::sqrt(norm2(c) + norm2(d));
    if (n2 < 1e-6) continue;
    return {a, b, (1.0 / n2) * c, (1.0 / n2) * d};
  }
}

}  // namespace exinv
