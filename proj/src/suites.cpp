#include "exinv/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "exinv/exotic_maps.hpp"
#include "exinv/group_actions.hpp"
#include "exinv/gamma.hpp"
#include "exinv/isotopy_paths.hpp"
#include "exinv/rng.hpp"
#include "exinv/rotation.hpp"
#include "exinv/sp2.hpp"
#include "exinv/sphere.hpp"

namespace exinv::suites {

namespace {

double pair_error(const std::pair<SpherePoint, Quaternion>& got,
                  const SpherePoint& x, const Quaternion& q) {
  return std::max(dist(got.first, x), dist(got.second, q));
}

double entry_error(const Sp2& A, const Sp2& B) {
  return std::max({dist(A.a, B.a), dist(A.b, B.b), dist(A.c, B.c), dist(A.d, B.d)});
}

AlgebraElement sample_scaled(Rng& rng, Algebra a) {
  return rng.uniform(0.5, 2.0) * sample_unit(rng, a);
}

SpherePoint conjugate_point(const AlgebraElement& q, const SpherePoint& x) {
  return SpherePoint::make(conj_action(q, x.p), conj_action(q, x.w));
}

// Equator point with both |p| and |w| bounded away from zero, for cases that
// need nondegenerate subalgebra generators.
EquatorPoint sample_equator_nondeg(Rng& rng, Algebra a) {
  for (;;) {
    EquatorPoint y = sample_equator_point(rng, a);
    if (norm(y.p) > 1e-2 && norm(y.w) > 1e-2) return y;
  }
}

SpherePoint sample_sphere_nondeg(Rng& rng, Algebra a) {
  for (;;) {
    SpherePoint x = sample_sphere_point(rng, a);
    if (norm(x.p) > 1e-2 && norm(x.w) > 1e-2) return x;
  }
}

Quaternion sample_unit_quat(Rng& rng) { return as_quat(sample_unit(rng, Algebra::quaternion)); }

ProductPoint sample_product_point(Rng& rng) {
  return {sample_sphere_point(rng, Algebra::quaternion), sample_unit_quat(rng)};
}

// ----- involution ----------------------------------------------------------

double run_involution(Algebra alg, bool equator, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const int k = static_cast<int>(i % 5) - 2;
    if (equator) {
      const EquatorPoint y = sample_equator_point(rng, alg);
      err = std::max(err, dist(rho(rho(y, k), k), y));
    } else {
      const SpherePoint x = sample_sphere_point(rng, alg);
      err = std::max(err, dist(rho(rho(x, k), k), x));
    }
  }
  return err;
}

// ----- commutation ---------------------------------------------------------

double run_main_commutation(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_sphere_point(rng, alg);
    err = std::max(err, dist(antipode(sigma_pow(x, 1)), sigma_pow(antipode(x), -1)));
  }
  return err;
}

double run_conjugacy_shift(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_sphere_point(rng, alg);
    const int k = rng.uniform_int(-2, 2), l = rng.uniform_int(-2, 2);
    const SpherePoint lhs = sigma_pow(rho(sigma_pow(x, l), k), -l);
    err = std::max(err, dist(lhs, rho(x, k + 2 * l)));
  }
  return err;
}

double run_equator_preserved(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const EquatorPoint y = sample_equator_point(rng, alg);
    const int k = static_cast<int>(i % 5) - 2;
    const SpherePoint image = rho(y.as_sphere(), k);
    err = std::max({err, std::abs(re_part(image.w)), std::abs(re_part(image.p))});
  }
  return err;
}

// ----- b-properties (algebra layer) ----------------------------------------

double run_norm_mult(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const AlgebraElement x = sample_scaled(rng, alg), y = sample_scaled(rng, alg);
    err = std::max(err, std::abs(norm(x * y) - norm(x) * norm(y)) / (norm(x) * norm(y)));
  }
  return err;
}

double run_associativity(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const AlgebraElement x = sample_scaled(rng, Algebra::quaternion);
    const AlgebraElement y = sample_scaled(rng, Algebra::quaternion);
    const AlgebraElement z = sample_scaled(rng, Algebra::quaternion);
    err = std::max(err, dist((x * y) * z, x * (y * z)));
  }
  return err;
}

double run_alternativity(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const AlgebraElement x = sample_scaled(rng, Algebra::cayley);
    const AlgebraElement y = sample_scaled(rng, Algebra::cayley);
    err = std::max(err, dist((x * x) * y, x * (x * y)));
    err = std::max(err, dist((y * x) * x, y * (x * x)));
  }
  return err;
}

double run_subalgebra_associativity(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const AlgebraElement p = sample_unit(rng, Algebra::cayley);
    const AlgebraElement w = sample_unit(rng, Algebra::cayley);
    const AlgebraElement x = subalgebra_sample(p, w, rng);
    const AlgebraElement y = subalgebra_sample(p, w, rng);
    const AlgebraElement z = subalgebra_sample(p, w, rng);
    err = std::max(err, dist((x * y) * z, x * (y * z)));
  }
  return err;
}

double run_conj_isometry(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const AlgebraElement q = sample_unit(rng, alg);
    const AlgebraElement x = sample_scaled(rng, alg);
    const AlgebraElement y = conj_action(q, x);
    err = std::max({err, std::abs(re_part(y) - re_part(x)), std::abs(norm(y) - norm(x))});
  }
  return err;
}

double run_exp_subgroup(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const AlgebraElement p = rng.uniform(0.0, 2.0) * im_part(sample_unit(rng, alg));
    const double s = rng.uniform(-kPi, kPi), t = rng.uniform(-kPi, kPi);
    err = std::max(err, dist(exp_pure(p, s) * exp_pure(p, t), exp_pure(p, s + t)));
  }
  return err;
}

// ----- b-properties (map layer) ---------------------------------------------

double run_b_equivariance(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_sphere_nondeg(rng, alg);
    const AlgebraElement q = alg == Algebra::quaternion ? sample_unit(rng, alg)
                                                        : subalgebra_sample(x.p, x.w, rng);
    const AlgebraElement lhs = blakers_massey(conjugate_point(q, x));
    err = std::max(err, dist(lhs, conj_action(q, blakers_massey(x))));
  }
  return err;
}

double run_b_antipode_conj(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_sphere_point(rng, alg);
    err = std::max(err, dist(blakers_massey(antipode(x)), conj(blakers_massey(x))));
  }
  return err;
}

double run_b_sigma_invariance(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_sphere_point(rng, alg);
    const int k = rng.uniform_int(-2, 2);
    err = std::max(err, dist(blakers_massey(sigma_pow(x, k)), blakers_massey(x)));
  }
  return err;
}

double run_b_power_closed_form(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_sphere_point(rng, alg);
    const int k = rng.uniform_int(-3, 3);
    SpherePoint iterated = x;
    const int step = k >= 0 ? 1 : -1;
    for (int j = 0; j < std::abs(k); ++j) iterated = sigma_pow(iterated, step);
    err = std::max(err, dist(sigma_pow(x, k), iterated));
  }
  return err;
}

double run_b_branch_continuity(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const AlgebraElement minus_one = real_elem(alg, -1.0);
  double err = 0.0;
  const long rays = std::max<long>(1, n / 10);
  for (long i = 0; i < rays; ++i) {
    const AlgebraElement pdir = im_part(sample_unit(rng, alg));
    const AlgebraElement pd = (1.0 / norm(pdir)) * pdir;
    const AlgebraElement wd = sample_unit(rng, alg);
    double prev = -1.0;
    double dev = 0.0;
    for (const double s : {1e-3, 1e-5, 1e-7}) {
      const SpherePoint x = SpherePoint::make(std::sqrt(1.0 - s * s) * pd, s * wd);
      dev = dist(blakers_massey(x), minus_one);
      if (prev >= 0.0) err = std::max(err, dev - prev);  // must decrease along the ray
      prev = dev;
    }
    err = std::max(err, dev);  // and end up at the branch value
  }
  return err;
}

double run_fixed_point_residuals(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  const auto check = [&](double theta) {
    const auto [r1v, r2v] = fixed_point_residuals(theta);
    err = std::max(err, std::abs(r1v - std::abs(std::cos(2.0 * theta))));
    err = std::max(err, std::abs(r2v - std::sqrt(3.0) * std::abs(std::cos(theta))));
  };
  check(kPi / 4.0);
  check(3.0 * kPi / 4.0);
  check(kPi / 2.0);
  for (long i = 0; i < n; ++i) check(rng.uniform(0.0, kPi));
  return err;
}

// ----- geometric oracle -----------------------------------------------------

double run_rodrigues_correspondence(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    Quaternion q = sample_unit_quat(rng);
    while (norm(q.vec()) < 1e-6) q = sample_unit_quat(rng);
    const Quaternion x = Quaternion::pure({rng.normal(), rng.normal(), rng.normal()});
    const AxisAngle aa = rotation_of_conjugation(q);
    const Vec3 oracle = rodrigues_rotate(aa.axis, aa.angle, x.vec());
    err = std::max(err, dist(oracle, conj_action(q, x).vec()));
  }
  return err;
}

double run_figures_vs_algebraic(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const EquatorPoint y = sample_equator_point(rng, Algebra::quaternion);
    err = std::max(err, dist(geometric_rho(y), rho(y, 1)));
  }
  return err;
}

double run_figures_captioned_cases(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    // w = 0: the image is (-p, 0).
    const AlgebraElement pu = im_part(sample_unit(rng, Algebra::quaternion));
    const AlgebraElement pd = (1.0 / norm(pu)) * pu;
    const EquatorPoint pole = EquatorPoint::make(pd, zero_elem(Algebra::quaternion));
    err = std::max(err, dist(geometric_rho(pole), EquatorPoint{-pole.p, zero_elem(Algebra::quaternion)}));
    // p parallel to w: the image is (-p, -w).
    const double c = rng.uniform(0.2, 0.8);
    const EquatorPoint par = EquatorPoint::make(c * pd, std::sqrt(1.0 - c * c) * pd);
    err = std::max(err, dist(geometric_rho(par), equator_antipode(par)));
  }
  return err;
}

double run_figures_axis_in_span(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const EquatorPoint y = sample_equator_nondeg(rng, Algebra::quaternion);
    const Vec3 p = as_quat(y.p).vec(), w = as_quat(y.w).vec();
    const FigureStages st = figure_stages(p, w);
    // Residual of the axis against the plane spanned by p and w.
    const Vec3 pu = (1.0 / norm(p)) * p;
    Vec3 rest = w - dot(w, pu) * pu;
    const double rn = norm(rest);
    Vec3 axis = st.axis;
    axis = axis - dot(axis, pu) * pu;
    if (rn > 1e-9) axis = axis - (1.0 / (rn * rn)) * (dot(axis, rest) * rest);
    err = std::max(err, norm(axis));
  }
  return err;
}

// ----- paths ----------------------------------------------------------------

double run_loop_endpoints(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const EquatorPoint y = sample_equator_point(rng, alg);
    err = std::max({err, dist(sigma_loop(0.0, y), y), dist(sigma_loop(1.0, y), y)});
  }
  return err;
}

double run_loop_midpoint(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const EquatorPoint y = sample_equator_point(rng, alg);
    const SpherePoint s = sigma_pow(y.as_sphere(), 1);
    err = std::max(err, dist(sigma_loop(0.5, y), EquatorPoint::make(s.p, s.w)));
  }
  return err;
}

double run_suspension(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const auto susp = suspend(sigma_loop_path(alg));
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    SpherePoint x = sample_sphere_point(rng, alg);
    if (i % 16 == 0) {
      // exercise the near-pole latitudes as well
      const double w0 = (i % 32 == 0 ? 1.0 : -1.0) * (1.0 - rng.uniform(0.0, 1e-4));
      const double s = std::sqrt(std::max(0.0, 1.0 - w0 * w0));
      const EquatorPoint y = sample_equator_point(rng, alg);
      x = SpherePoint::make(s * y.p, real_elem(alg, w0) + s * y.w);
    }
    err = std::max(err, dist(susp(x), sigma_pow(x, 1)));
  }
  return err;
}

double run_suspension_poles(Algebra alg, long n, std::uint64_t seed) {
  (void)n;
  (void)seed;
  const auto susp = suspend(sigma_loop_path(alg));
  double err = 0.0;
  for (const double w0 : {1.0, -1.0}) {
    const SpherePoint pole = SpherePoint::make(zero_elem(alg), real_elem(alg, w0));
    err = std::max(err, dist(susp(pole), pole));
  }
  return err;
}

double run_path_commutation(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const DiffPath loop = sigma_loop_path(alg);
  const DiffPath lhs = conjugate_by_antipode(reverse(loop));
  const DiffPath rhs = pointwise_inverse(loop);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = rng.uniform();
    const EquatorPoint y = sample_equator_point(rng, alg);
    err = std::max(err, dist(lhs.eval(t, y), rhs.eval(t, y)));
  }
  return err;
}

double run_path_inverse_roundtrip(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const DiffPath loop = sigma_loop_path(alg);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = rng.uniform();
    const EquatorPoint y = sample_equator_point(rng, alg);
    err = std::max(err, dist(loop.eval(t, loop.inverse_eval(t, y)), y));
  }
  return err;
}

double run_path_reverse_juxtapose(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const DiffPath loop = sigma_loop_path(alg);
  const DiffPath rr = reverse(reverse(loop));
  const DiffPath jux = juxtapose(loop, constant_identity_path(alg));
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = rng.uniform();
    const EquatorPoint y = sample_equator_point(rng, alg);
    err = std::max(err, dist(rr.eval(t, y), loop.eval(t, y)));
    err = std::max(err, dist(jux.eval(0.5 * t, y), loop.eval(t, y)));
  }
  return err;
}

double run_flat_ramp_neighborhood(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const DiffPath clamped = flat_ramp(sigma_loop_path(alg), 0.05);
  double err = 0.0;
  for (long i = 0; i < std::max<long>(1, n / 10); ++i) {
    const EquatorPoint y = sample_equator_point(rng, alg);
    for (const double t : {0.0, 0.02, 0.049, 0.951, 0.98, 1.0})
      err = std::max(err, dist(clamped.eval(t, y), y));
  }
  return err;
}

double run_rotation_identity(Algebra alg, long n, std::uint64_t seed) {
  (void)seed;
  const RotationPath A(alg);
  return rotation_identity_error(A, static_cast<int>(std::min<long>(n, 100)));
}

double run_rotation_orthogonality(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const RotationPath A(alg);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = rng.uniform();
    const EquatorPoint y = sample_equator_point(rng, alg);
    const EquatorPoint im = A.apply(t, y);
    err = std::max(err, std::abs(std::sqrt(norm2(im.p) + norm2(im.w)) - 1.0));
    err = std::max(err, dist(A.apply_inverse(t, im), y));
  }
  return err;
}

double run_commutator_trivial(Algebra alg, long n, std::uint64_t seed) {
  Rng rng(seed);
  const RotationPath A(alg);
  const SphereMap id = identity_map();
  const SphereMap rot = rotation_slice(A, 0.37);
  double err = 0.0;
  for (long i = 0; i < std::max<long>(1, n / 10); ++i) {
    const double t = rng.uniform();
    const EquatorPoint y = sample_equator_point(rng, alg);
    err = std::max(err, dist(commutator_path(t, id, A).fwd(y), y));
    // h commuting with A makes the whole commutator path trivial
    err = std::max(err, dist(commutator_path(t, rot, A).fwd(y), y));
    // and any h gives the identity at t = 0
    err = std::max(err, dist(commutator_path(0.0, sigma0_map(), A).fwd(y), y));
  }
  return err;
}

double run_homotopy_boundaries(Algebra alg, int which_h, long n, std::uint64_t seed) {
  Rng rng(seed);
  const RotationPath A(alg);
  SphereMap h;
  switch (which_h) {
    case 0: {
      Rng hrng(mix_seed(seed, "h-rotation"));
      h = conjugation_map(sample_unit(hrng, alg));
      break;
    }
    case 1: h = sigma0_map(); break;
    default: h = path_slice(sigma_loop_path(alg), 0.3); break;
  }
  const SphereMap alpha0 = antipode_map();
  double err = 0.0;
  for (long i = 0; i < std::max<long>(1, n / 20); ++i) {
    const double s = rng.uniform(), t = rng.uniform();
    const EquatorPoint y = sample_equator_point(rng, alg);

    const SphereMap psi_t = commutator_path(t, h, A);
    // H(0, t) = alpha0 psi(t) alpha0
    err = std::max(err, dist(commutator_homotopy(0.0, t, h, A).fwd(y),
                             alpha0.fwd(psi_t.fwd(alpha0.fwd(y)))));
    // H(1, t) = psi(t)^{-1}
    err = std::max(err, dist(commutator_homotopy(1.0, t, h, A).fwd(y), psi_t.inv(y)));
    // H(s, 1) = h alpha0 h^{-1} alpha0
    err = std::max(err, dist(commutator_homotopy(s, 1.0, h, A).fwd(y),
                             h.fwd(alpha0.fwd(h.inv(alpha0.fwd(y))))));
    // H(s, 0) = (alpha0 A(s)^{-1}) (h A(s)^2 h^{-1} A(s)^{-2}) (alpha0 A(s)^{-1})^{-1}
    EquatorPoint z = alpha0.fwd(y);
    z = A.apply(s, z);
    z = A.apply_inverse(s, A.apply_inverse(s, z));
    z = h.inv(z);
    z = A.apply(s, A.apply(s, z));
    z = h.fwd(z);
    z = A.apply_inverse(s, z);
    z = alpha0.fwd(z);
    err = std::max(err, dist(commutator_homotopy(s, 0.0, h, A).fwd(y), z));
  }
  return err;
}

// ----- sp2 ------------------------------------------------------------------

SpherePoint sample_chart_friendly(Rng& rng) {
  for (;;) {
    const SpherePoint x = sample_sphere_point(rng, Algebra::quaternion);
    if (norm(x.p) > 1e-3 && norm(x.w) > 1e-3) return x;
  }
}

double run_geodesic_unitarity(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = rng.uniform(0.0, 2.0 * kPi);
    Quaternion p, w;
    if (i % 8 == 7) {
      // w = 0 branch and its numerical boundary
      const double s = (i % 16 == 15) ? 0.0 : 1e-6;
      Quaternion pd = as_quat(im_part(sample_unit(rng, Algebra::quaternion)));
      pd = (1.0 / norm(pd)) * pd;
      p = std::sqrt(1.0 - s * s) * pd;
      w = s * sample_unit_quat(rng);
    } else {
      const SpherePoint x = sample_sphere_point(rng, Algebra::quaternion);
      p = as_quat(x.p);
      w = as_quat(x.w);
    }
    err = std::max(err, unitarity_error(horizontal_geodesic(p, w, t)));
  }
  return err;
}

double run_geodesic_basics(long n, std::uint64_t seed) {
  Rng rng(seed);
  const Sp2 identity{kQuatOne, {}, {}, kQuatOne};
  double err = 0.0;
  for (long i = 0; i < std::max<long>(1, n / 10); ++i) {
    const SpherePoint x = sample_sphere_point(rng, Algebra::quaternion);
    const Quaternion p = as_quat(x.p), w = as_quat(x.w);
    err = std::max(err, entry_error(horizontal_geodesic(p, w, 0.0), identity));
    // w = 0: gamma(t) = diag(e^{tp}, 1)
    Quaternion pd = p;
    if (norm(pd.vec()) < 1e-6) pd = kQuatI;
    pd = (1.0 / norm(pd)) * pd;
    const double t = rng.uniform(0.0, 2.0 * kPi);
    const Sp2 branch = horizontal_geodesic(pd, Quaternion{}, t);
    err = std::max(err, entry_error(branch, Sp2{exp_pure(pd, t), {}, {}, kQuatOne}));
    // midpoint lands on the pure-a locus
    const Sp2 mid = horizontal_geodesic(p, w, kPi / 2.0);
    err = std::max(err, std::abs(mid.a.r));
  }
  return err;
}

double run_action_laws(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const Sp2 A = random_sp2(rng);
    const Quaternion q1 = sample_unit_quat(rng), q2 = sample_unit_quat(rng);
    err = std::max(err, entry_error(star_action(q1 * q2, A), star_action(q1, star_action(q2, A))));
    err = std::max(err, entry_error(bullet_action(q1 * q2, A), bullet_action(q1, bullet_action(q2, A))));
    err = std::max(err, entry_error(star_action(q1, bullet_action(q2, A)),
                                    bullet_action(q2, star_action(q1, A))));
  }
  return err;
}

double run_actions_unitary(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const Sp2 A = random_sp2(rng);
    const Quaternion q = sample_unit_quat(rng);
    err = std::max({err, unitarity_error(A), unitarity_error(star_action(q, A)),
                    unitarity_error(bullet_action(q, A)), unitarity_error(m_involution(A))});
  }
  return err;
}

double run_level_preservation(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const Quaternion q = sample_unit_quat(rng);
    // S6 level: midpoint frames; S5 level: equatorial ones
    const SpherePoint x = sample_chart_friendly(rng);
    const Sp2 A = horizontal_geodesic(as_quat(x.p), as_quat(x.w), kPi / 2.0);
    err = std::max(err, std::abs(star_action(q, A).a.r));
    const EquatorPoint y = sample_equator_nondeg(rng, Algebra::quaternion);
    const Sp2 B = horizontal_geodesic(as_quat(y.p), as_quat(y.w), kPi / 2.0);
    const Sp2 Bq = star_action(q, B);
    err = std::max({err, std::abs(Bq.a.r), std::abs(Bq.b.r)});
  }
  return err;
}

double run_m_and_projection(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const Sp2 A = random_sp2(rng);
    const Quaternion q = sample_unit_quat(rng);
    err = std::max(err, entry_error(m_involution(m_involution(A)), A));
    const auto [a1, b1] = to_s7(bullet_action(q, A));
    err = std::max({err, dist(a1, A.a), dist(b1, A.b)});
    const auto [a2, b2] = to_s7(m_involution(A));
    err = std::max({err, dist(a2, -A.a), dist(b2, -A.b)});
  }
  return err;
}

double run_psi_roundtrip(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng);
    const Sp2 A = psi_map(as_quat(x.p), as_quat(x.w), q);
    const auto [x2, q2] = psi_inv(A);
    err = std::max(err, pair_error({x2, q2}, x, q));
    const Sp2 A2 = psi_map(as_quat(x2.p), as_quat(x2.w), q2);
    err = std::max(err, entry_error(A2, A));
  }
  return err;
}

double run_psi_equivariance(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng), qp = sample_unit_quat(rng);
    err = std::max(err, entry_error(psi_map(as_quat(x.p), as_quat(x.w), qp * q),
                                    star_action(qp, psi_map(as_quat(x.p), as_quat(x.w), q))));
  }
  return err;
}

double run_phi_roundtrip(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng);
    const Sp2 A = phi_map(as_quat(x.p), as_quat(x.w), q);
    const auto [x2, q2] = phi_inv(A);
    err = std::max(err, pair_error({x2, q2}, x, q));
    const Sp2 A2 = phi_map(as_quat(x2.p), as_quat(x2.w), q2);
    err = std::max(err, entry_error(A2, A));
  }
  return err;
}

double run_phi_equivariance(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng), qp = sample_unit_quat(rng);
    err = std::max(err, entry_error(phi_map(as_quat(x.p), as_quat(x.w), qp * q),
                                    bullet_action(qp, phi_map(as_quat(x.p), as_quat(x.w), q))));
    err = std::max(err, entry_error(phi_map(as_quat(x.p), as_quat(x.w), kQuatOne),
                                    psi_map(as_quat(x.p), as_quat(x.w), kQuatOne)));
  }
  return err;
}

double run_pullback_star(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng);
    const auto got = pullback_star(x, q);
    err = std::max(err, pair_error(got, rho(x, -1), q * as_quat(blakers_massey(x))));
  }
  return err;
}

double run_pullback_bullet(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng);
    const auto got = pullback_bullet(x, q);
    err = std::max(err, pair_error(got, antipode(x), q * conj(as_quat(blakers_massey(x)))));
  }
  return err;
}

double run_pullback_fixed_slice(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < std::max<long>(1, n / 10); ++i) {
    const Quaternion w = sample_unit_quat(rng);
    const Quaternion q = sample_unit_quat(rng);
    const SpherePoint x = SpherePoint::make(Quaternion{}, w);
    const auto got = pullback_star(x, q);
    err = std::max(err, pair_error(got, SpherePoint::make(Quaternion{}, -w), q));
  }
  return err;
}

double run_chart_star_invariance(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng), qp = sample_unit_quat(rng);
    const Sp2 A = psi_map(as_quat(x.p), as_quat(x.w), q);
    const MilnorCoords m1 = milnor_chart(A);
    const MilnorCoords m2 = milnor_chart(star_action(qp, A));
    err = std::max({err, dist(m1.u, m2.u), dist(m1.v, m2.v)});
    const MilnorCoords m3 = milnor_chart(m_involution(A));
    const MilnorCoords m4 = fiber_antipode(m1);
    err = std::max({err, dist(m3.u, m4.u), dist(m3.v, m4.v)});
    err = std::max(err, std::abs(norm(m1.v) - 1.0));
  }
  return err;
}

double run_clutch_properties(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const Quaternion v = sample_unit_quat(rng);
    Quaternion u = rng.uniform(0.2, 3.0) * sample_unit_quat(rng);
    const MilnorCoords m{u, v};
    const MilnorCoords c = milnor_clutch(m);
    err = std::max(err, std::abs(norm(c.v) - 1.0));
    // tau commutes with the transition
    const MilnorCoords ct = milnor_clutch(fiber_antipode(m));
    const MilnorCoords tc = fiber_antipode(c);
    err = std::max({err, dist(ct.u, tc.u), dist(ct.v, tc.v)});
    // unit u is a fixed point of the u-component
    const Quaternion uu = sample_unit_quat(rng);
    const MilnorCoords cu = milnor_clutch({uu, v});
    err = std::max(err, dist(cu.u, uu));
  }
  return err;
}

double run_hm_equator_residual(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const SpherePoint x = sample_chart_friendly(rng);
    const Quaternion q = sample_unit_quat(rng);
    const Sp2 A = psi_map(as_quat(x.p), as_quat(x.w), q);
    err = std::max(err, chart_residuals(A).re_v);
  }
  return err;
}

double run_hm_sublocus_residuals(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const EquatorPoint y = sample_equator_nondeg(rng, Algebra::quaternion);
    const Quaternion q = sample_unit_quat(rng);
    const Sp2 A = psi_map(as_quat(y.p), as_quat(y.w), q);
    const ChartResiduals res = chart_residuals(A);
    err = std::max({err, res.re_uv, res.re_v});
  }
  return err;
}

double run_hm_negative_control(long n, std::uint64_t seed) {
  Rng rng(seed);
  double min_res = 1e300;
  long kept = 0;
  while (kept < n) {
    const Sp2 A = random_sp2(rng);
    if (norm(A.d) < 1e-3 || norm(A.a) < 1e-3) continue;
    if (std::abs(A.a.r) / norm(A.a) < 0.1) continue;  // stay away from the locus
    min_res = std::min(min_res, chart_residuals(A).re_v);
    ++kept;
  }
  return std::max(0.0, 0.05 - min_res);
}

// ----- actions ---------------------------------------------------------------

double run_action_identity(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < std::max<long>(1, n / 10); ++i) {
    const ProductPoint pt = sample_product_point(rng);
    err = std::max(err, dist(r1({0, kQuatOne}, pt), pt));
    err = std::max(err, dist(r2({0, kQuatOne}, pt), pt));
  }
  return err;
}

double run_action_axiom(bool second, long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    const Z2S3 g1{rng.uniform_int(0, 1), sample_unit_quat(rng)};
    const Z2S3 g2{rng.uniform_int(0, 1), sample_unit_quat(rng)};
    const auto act = second ? r2 : r1;
    err = std::max(err, dist(act(compose(g1, g2), pt), act(g1, act(g2, pt))));
  }
  return err;
}

double run_action_z2_square(long n, std::uint64_t seed) {
  Rng rng(seed);
  const Z2S3 flip{1, kQuatOne};
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    err = std::max(err, dist(r1(flip, r1(flip, pt)), pt));
    err = std::max(err, dist(r2(flip, r2(flip, pt)), pt));
  }
  return err;
}

double run_F_involution(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    err = std::max(err, dist(conjugating_involution(conjugating_involution(pt)), pt));
  }
  return err;
}

double run_restricted_conjugacy(long n, std::uint64_t seed) {
  Rng rng(seed);
  const Z2S3 flip{1, kQuatOne};
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    err = std::max(err, dist(conjugating_involution(r1(flip, pt)),
                             r2(flip, conjugating_involution(pt))));
  }
  return err;
}

double run_s3_restrictions_equal(long n, std::uint64_t seed) {
  Rng rng(seed);
  double err = 0.0;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    const Z2S3 g{0, sample_unit_quat(rng)};
    err = std::max(err, dist(r1(g, pt), r2(g, pt)));
  }
  return err;
}

double run_action_freeness(long n, std::uint64_t seed) {
  Rng rng(seed);
  const Z2S3 flip{1, kQuatOne};
  double min1 = 1e300, min2 = 1e300;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    min1 = std::min(min1, dist(r1(flip, pt), pt));
    min2 = std::min(min2, dist(r2(flip, pt), pt));
  }
  return std::max(0.0, 0.5 - std::min(min1, min2));
}

double run_slice_asymmetry(long n, std::uint64_t seed) {
  Rng rng(seed);
  double max_diff = 0.0;
  for (long i = 0; i < n; ++i) {
    const ProductPoint pt = sample_product_point(rng);
    const Z2S3 g{1, sample_unit_quat(rng)};
    max_diff = std::max(max_diff, dist(r1(g, pt), r2(g, pt)));
  }
  return std::max(0.0, 0.5 - max_diff);
}

// ----- gamma (exact) ----------------------------------------------------------

double run_gamma_arithmetic(long, std::uint64_t) {
  using namespace exinv::gamma;
  bool ok = true;
  ok = ok && scale(generator(Dim::d7), 28) == make7(0);
  for (long k = 1; k < 28; ++k) ok = ok && !(scale(generator(Dim::d7), k) == make7(0));
  ok = ok && neg(make7(1)) == make7(27);
  ok = ok && scale(make15(1, 0), 8128) == make15(0, 0);
  ok = ok && add(make7(20), make7(15)) == make7(7);
  return ok ? 0.0 : 1.0;
}

double run_gamma_conjugation(long, std::uint64_t) {
  using namespace exinv::gamma;
  bool ok = true;
  ok = ok && antipodal_conjugation(make7(1)).value == make7(27);
  ok = ok && antipodal_conjugation(make7(14)).value == make7(14);
  ok = ok && antipodal_conjugation(make7(0)).value == make7(0);
  for (long v = 0; v < 28; ++v) {
    const auto once = antipodal_conjugation(make7(v));
    ok = ok && once.determined() && antipodal_conjugation(once.value).value == make7(v);
  }
  const auto amb = antipodal_conjugation(make15(0, 1));
  ok = ok && !amb.determined();
  ok = ok && amb.value == make15(0, 1);
  ok = ok && amb.alternate.value() == make15(4064, 1);
  const auto pinned = antipodal_conjugation(make15(0, 1), TauMode::zero);
  ok = ok && pinned.determined() && pinned.value == make15(0, 1);
  ok = ok && antipodal_conjugation(make15(5, 0)).determined();
  return ok ? 0.0 : 1.0;
}

double run_gamma_thm2(long, std::uint64_t) {
  using namespace exinv::gamma;
  bool ok = true;
  ok = ok && solve_conjugacy_obstruction(Dim::d7, generator(Dim::d7)).empty();
  ok = ok && solve_conjugacy_obstruction(Dim::d15, generator(Dim::d15)).empty();
  ok = ok && solve_conjugacy_obstruction(Dim::d15, generator(Dim::d15), TauMode::zero).empty();
  const auto control = solve_conjugacy_obstruction(Dim::d7, make7(2));
  ok = ok && control.size() == 2 && control[0] == make7(1) && control[1] == make7(15);
  return ok ? 0.0 : 1.0;
}

double run_gamma_lemma2(long, std::uint64_t) {
  using namespace exinv::gamma;
  const QuotientReport q7 = two_torsion_quotient(Dim::d7);
  const QuotientReport q15 = two_torsion_quotient(Dim::d15);
  const bool ok = q7.subgroup_order == 2 && q7.quotient_order == 14 && q7.generator_image_order == 14 &&
                  q15.subgroup_order == 4 && q15.quotient_order == 4064 &&
                  q15.generator_image_order == 4064;
  return ok ? 0.0 : 1.0;
}

double run_gamma_census(long, std::uint64_t) {
  using namespace exinv::gamma;
  const Census c = component_census();
  bool ok = c.total_components == 56 && c.orientation_preserving == 28 && c.orientation_reversing == 28;
  ok = ok && c.fixed_classes == std::vector<long>{0, 14};
  ok = ok && c.orbit_pairs.size() == 13;
  bool found = false;
  for (const auto& pr : c.orbit_pairs) found = found || (pr.first == 3 && pr.second == 25);
  ok = ok && found;
  return ok ? 0.0 : 1.0;
}

double run_gamma_rho_parity(long, std::uint64_t) {
  using namespace exinv::gamma;
  bool ok = rho_parity(0) == 0 && rho_parity(3) == 1 && rho_parity(-1) == 1 && rho_parity(14) == 0;
  for (long k = -6; k <= 6; ++k)
    for (long l = -4; l <= 4; ++l) ok = ok && rho_parity(k) == rho_parity(k + 2 * l);
  return ok ? 0.0 : 1.0;
}

// ----- registry ---------------------------------------------------------------

std::vector<CaseSpec> build_cases() {
  std::vector<CaseSpec> cases;
  const auto add = [&cases](std::string suite, std::string name, CaseAlgebra algebra, double tol,
                            std::function<double(long, std::uint64_t)> run, long fixed = -1) {
    cases.push_back({std::move(suite), std::move(name), algebra, tol, fixed, std::move(run)});
  };
  using CA = CaseAlgebra;

  add("involution", "s6-double-application", CA::quat, 1e-10,
      [](long n, std::uint64_t s) { return run_involution(Algebra::quaternion, false, n, s); });
  add("involution", "s5-double-application", CA::quat, 1e-10,
      [](long n, std::uint64_t s) { return run_involution(Algebra::quaternion, true, n, s); });
  add("involution", "s14-double-application", CA::cayley, 1e-10,
      [](long n, std::uint64_t s) { return run_involution(Algebra::cayley, false, n, s); });
  add("involution", "s13-double-application", CA::cayley, 1e-10,
      [](long n, std::uint64_t s) { return run_involution(Algebra::cayley, true, n, s); });

  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    const CA ca = alg == Algebra::quaternion ? CA::quat : CA::cayley;
    const std::string tag = alg == Algebra::quaternion ? "quat" : "cayley";
    add("commutation", "main-relation-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_main_commutation(alg, n, s); });
    add("commutation", "conjugacy-shift-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_conjugacy_shift(alg, n, s); });
    add("commutation", "equator-preserved-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_equator_preserved(alg, n, s); });

    add("b-properties", "algebra-norm-multiplicative-" + tag, ca, 1e-12,
        [alg](long n, std::uint64_t s) { return run_norm_mult(alg, n, s); });
    add("b-properties", "algebra-conj-action-isometry-" + tag, ca, 1e-12,
        [alg](long n, std::uint64_t s) { return run_conj_isometry(alg, n, s); });
    add("b-properties", "algebra-exp-one-parameter-" + tag, ca, 1e-11,
        [alg](long n, std::uint64_t s) { return run_exp_subgroup(alg, n, s); });
    add("b-properties", "equivariance-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_b_equivariance(alg, n, s); });
    add("b-properties", "antipode-conjugation-" + tag, ca, 1e-11,
        [alg](long n, std::uint64_t s) { return run_b_antipode_conj(alg, n, s); });
    add("b-properties", "sigma-invariance-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_b_sigma_invariance(alg, n, s); });
    add("b-properties", "power-closed-form-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_b_power_closed_form(alg, n, s); });
    add("b-properties", "branch-continuity-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_b_branch_continuity(alg, n, s); });
  }
  add("b-properties", "algebra-associativity-quat", CA::quat, 1e-12,
      [](long n, std::uint64_t s) { return run_associativity(n, s); });
  add("b-properties", "algebra-alternativity-cayley", CA::cayley, 1e-12,
      [](long n, std::uint64_t s) { return run_alternativity(n, s); });
  add("b-properties", "algebra-subalgebra-associativity-cayley", CA::cayley, 1e-12,
      [](long n, std::uint64_t s) { return run_subalgebra_associativity(n, s); });
  add("b-properties", "fixed-point-residuals", CA::quat, 1e-12,
      [](long n, std::uint64_t s) { return run_fixed_point_residuals(n, s); });

  add("geometric-oracle", "rodrigues-vs-conjugation", CA::quat, 1e-10,
      [](long n, std::uint64_t s) { return run_rodrigues_correspondence(n, s); });
  add("geometric-oracle", "figures-vs-algebraic", CA::quat, 1e-10,
      [](long n, std::uint64_t s) { return run_figures_vs_algebraic(n, s); });
  add("geometric-oracle", "figures-captioned-cases", CA::quat, 1e-12,
      [](long n, std::uint64_t s) { return run_figures_captioned_cases(n, s); });
  add("geometric-oracle", "figures-axis-in-span", CA::quat, 1e-12,
      [](long n, std::uint64_t s) { return run_figures_axis_in_span(n, s); });

  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    const CA ca = alg == Algebra::quaternion ? CA::quat : CA::cayley;
    const std::string tag = alg == Algebra::quaternion ? "quat" : "cayley";
    add("paths", "loop-endpoints-" + tag, ca, 1e-11,
        [alg](long n, std::uint64_t s) { return run_loop_endpoints(alg, n, s); });
    add("paths", "loop-midpoint-is-sigma-" + tag, ca, 1e-11,
        [alg](long n, std::uint64_t s) { return run_loop_midpoint(alg, n, s); });
    add("paths", "suspension-is-sigma-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_suspension(alg, n, s); });
    add("paths", "suspension-fixes-poles-" + tag, ca, 0.0,
        [alg](long n, std::uint64_t s) { return run_suspension_poles(alg, n, s); });
    add("paths", "reversal-commutation-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_path_commutation(alg, n, s); });
    add("paths", "inverse-roundtrip-" + tag, ca, 1e-10,
        [alg](long n, std::uint64_t s) { return run_path_inverse_roundtrip(alg, n, s); });
    add("paths", "reverse-juxtapose-" + tag, ca, 1e-12,
        [alg](long n, std::uint64_t s) { return run_path_reverse_juxtapose(alg, n, s); });
    add("paths", "flat-ramp-neighborhood-" + tag, ca, 1e-15,
        [alg](long n, std::uint64_t s) { return run_flat_ramp_neighborhood(alg, n, s); });
    add("paths", "rotation-path-identity-" + tag, ca, 1e-12,
        [alg](long n, std::uint64_t s) { return run_rotation_identity(alg, n, s); });
    add("paths", "rotation-orthogonality-" + tag, ca, 1e-12,
        [alg](long n, std::uint64_t s) { return run_rotation_orthogonality(alg, n, s); });
    add("paths", "commutator-degenerate-" + tag, ca, 1e-12,
        [alg](long n, std::uint64_t s) { return run_commutator_trivial(alg, n, s); });
    add("paths", "homotopy-boundaries-rotation-" + tag, ca, 1e-9,
        [alg](long n, std::uint64_t s) { return run_homotopy_boundaries(alg, 0, n, s); });
    add("paths", "homotopy-boundaries-sigma0-" + tag, ca, 1e-9,
        [alg](long n, std::uint64_t s) { return run_homotopy_boundaries(alg, 1, n, s); });
    add("paths", "homotopy-boundaries-loop-slice-" + tag, ca, 1e-9,
        [alg](long n, std::uint64_t s) { return run_homotopy_boundaries(alg, 2, n, s); });
  }

  add("sp2", "geodesic-unitarity", CA::quat, 1e-10, run_geodesic_unitarity);
  add("sp2", "geodesic-endpoints-and-branch", CA::quat, 1e-12, run_geodesic_basics);
  add("sp2", "action-laws", CA::quat, 1e-11, run_action_laws);
  add("sp2", "actions-stay-unitary", CA::quat, 1e-10, run_actions_unitary);
  add("sp2", "level-preservation", CA::quat, 1e-10, run_level_preservation);
  add("sp2", "involution-and-projection", CA::quat, 0.0, run_m_and_projection);
  add("sp2", "psi-roundtrip", CA::quat, 1e-9, run_psi_roundtrip);
  add("sp2", "psi-equivariance", CA::quat, 1e-10, run_psi_equivariance);
  add("sp2", "phi-roundtrip", CA::quat, 1e-9, run_phi_roundtrip);
  add("sp2", "phi-equivariance", CA::quat, 1e-10, run_phi_equivariance);
  add("sp2", "pullback-star", CA::quat, 1e-9, run_pullback_star);
  add("sp2", "pullback-bullet", CA::quat, 1e-9, run_pullback_bullet);
  add("sp2", "pullback-fixed-slice", CA::quat, 1e-12, run_pullback_fixed_slice);
  add("sp2", "chart-invariance-and-intertwine", CA::quat, 1e-10, run_chart_star_invariance);
  add("sp2", "clutch-properties", CA::quat, 1e-12, run_clutch_properties);
  add("sp2", "hm-equator-residual", CA::quat, 1e-9, run_hm_equator_residual);
  add("sp2", "hm-sublocus-residuals", CA::quat, 1e-9, run_hm_sublocus_residuals);
  add("sp2", "hm-negative-control", CA::quat, 0.0, run_hm_negative_control);

  add("actions", "identity-element", CA::quat, 0.0, run_action_identity);
  add("actions", "r1-axiom", CA::quat, 1e-10,
      [](long n, std::uint64_t s) { return run_action_axiom(false, n, s); });
  add("actions", "r2-axiom", CA::quat, 1e-10,
      [](long n, std::uint64_t s) { return run_action_axiom(true, n, s); });
  add("actions", "z2-squares-to-identity", CA::quat, 1e-10, run_action_z2_square);
  add("actions", "conjugator-involution", CA::quat, 1e-12, run_F_involution);
  add("actions", "restricted-z2-conjugacy", CA::quat, 1e-10, run_restricted_conjugacy);
  add("actions", "s3-restrictions-equal", CA::quat, 0.0, run_s3_restrictions_equal);
  add("actions", "z2-freeness-floor", CA::quat, 0.0, run_action_freeness);
  add("actions", "slice-asymmetry-witness", CA::quat, 0.0, run_slice_asymmetry);

  add("gamma", "arithmetic", CA::exact, 0.0, run_gamma_arithmetic, 28 + 8128);
  add("gamma", "antipodal-conjugation", CA::exact, 0.0, run_gamma_conjugation, 28 + 2);
  add("gamma", "conjugacy-obstruction", CA::exact, 0.0, run_gamma_thm2, 28 + 16256);
  add("gamma", "two-torsion-quotients", CA::exact, 0.0, run_gamma_lemma2, 28 + 16256);
  add("gamma", "component-census", CA::exact, 0.0, run_gamma_census, 56);
  add("gamma", "rho-parity", CA::exact, 0.0, run_gamma_rho_parity, 117);

  return cases;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"involution", "commutation", "b-properties",
                                                 "geometric-oracle", "paths", "sp2",
                                                 "actions", "gamma"};
  return names;
}

const std::vector<CaseSpec>& all_cases() {
  static const std::vector<CaseSpec> cases = build_cases();
  return cases;
}

bool known_suite(const std::string& name) {
  if (name == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CaseResult> run_cases(const RunConfig& config) {
  if (!known_suite(config.suite)) throw std::invalid_argument("unknown suite: " + config.suite);
  std::vector<CaseResult> results;
  for (const CaseSpec& spec : all_cases()) {
    if (config.suite != "all" && spec.suite != config.suite) continue;
    if (config.algebra == "quat" && spec.algebra == CaseAlgebra::cayley) continue;
    if (config.algebra == "cayley" && spec.algebra == CaseAlgebra::quat) continue;
    const long samples = spec.fixed_samples >= 0 ? spec.fixed_samples : config.samples;
    const std::uint64_t seed = mix_seed(config.seed, spec.suite + "/" + spec.name);
    const auto start = std::chrono::steady_clock::now();
    const double max_error = spec.run(samples, seed);
    const auto stop = std::chrono::steady_clock::now();
    const double tol = config.tol_override >= 0.0 ? config.tol_override : spec.tol;
    CaseResult r;
    r.suite = spec.suite;
    r.name = spec.name;
    r.samples = samples;
    r.max_error = max_error;
    r.tol = tol;
    r.pass = max_error <= tol;
    r.seed = config.seed;
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(), [](const CaseResult& a, const CaseResult& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.name < b.name;
  });
  return results;
}

}  // namespace exinv::suites
