// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; sampling is deterministic.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "exinv/cli.hpp"
#include "exinv/exotic_maps.hpp"
#include "exinv/freeness.hpp"
#include "exinv/gamma.hpp"
#include "exinv/group_actions.hpp"
#include "exinv/isotopy_paths.hpp"
#include "exinv/rng.hpp"
#include "exinv/sp2.hpp"

using namespace exinv;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, double max_error, double tol) {
  const bool pass = max_error <= tol;
  if (!pass) ++g_failures;
  std::printf("%s  [%2d] %-58s max_error=%.3e tol=%.0e\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), max_error, tol);
}

void report_bool(int number, const std::string& name, bool ok) {
  if (!ok) ++g_failures;
  std::printf("%s  [%2d] %-58s\n", ok ? "PASS" : "FAIL", number, name.c_str());
}

constexpr long kSamples = 10000;

// Frozen regression constants for the displacement scan, taken verbatim from
// the first scan runs at grid 50000, 150 descent iterations, 16 starts,
// seed 1 (never hand-entered).
constexpr double kScanFloor5 = 0.9417606304701787;
constexpr double kScanFloor6 = 0.9417618895961938;
constexpr double kScanFloor13 = 0.9417606455431742;
constexpr double kScanFloor14 = 0.9417613662788135;

SpherePoint conjugate_point(const AlgebraElement& q, const SpherePoint& x) {
  return SpherePoint::make(conj_action(q, x.p), conj_action(q, x.w));
}

// --- 1: involutions on all four spheres --------------------------------------

void criterion_involution() {
  const auto start = std::chrono::steady_clock::now();
  double err = 0.0;
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    Rng rng(mix_seed(1, alg == Algebra::quaternion ? "acc-inv-q" : "acc-inv-c"));
    for (long i = 0; i < kSamples; ++i) {
      const SpherePoint x = sample_sphere_point(rng, alg);
      const EquatorPoint y = sample_equator_point(rng, alg);
      for (int k = -2; k <= 2; ++k) {
        err = std::max(err, dist(rho(rho(x, k), k), x));
        err = std::max(err, dist(rho(rho(y, k), k), y));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, "involution rho_k^2 = id on S6/S14/S5/S13, k in -2..2", err, 1e-9);
  report_bool(1, "involution suite runtime < 10 s (" + std::to_string(secs) + " s)", secs < 10.0);
}

// --- 2: main commutation relation ---------------------------------------------

void criterion_commutation() {
  double err = 0.0;
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    Rng rng(mix_seed(2, "acc-comm"));
    for (long i = 0; i < kSamples; ++i) {
      const SpherePoint x = sample_sphere_point(rng, alg);
      err = std::max(err, dist(antipode(sigma_pow(x, 1)), sigma_pow(antipode(x), -1)));
    }
  }
  report(2, "main commutation: antipode.sigma = sigma^{-1}.antipode", err, 1e-9);
}

// --- 3: b-property bullets ------------------------------------------------------

void criterion_b_properties() {
  double equiv = 0.0, anti = 0.0, powers = 0.0;
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    Rng rng(mix_seed(3, "acc-b"));
    for (long i = 0; i < kSamples; ++i) {
      SpherePoint x = sample_sphere_point(rng, alg);
      while (norm(x.p) < 1e-2 || norm(x.w) < 1e-2) x = sample_sphere_point(rng, alg);
      const AlgebraElement q = alg == Algebra::quaternion ? sample_unit(rng, alg)
                                                          : subalgebra_sample(x.p, x.w, rng);
      equiv = std::max(equiv, dist(blakers_massey(conjugate_point(q, x)),
                                   conj_action(q, blakers_massey(x))));
      anti = std::max(anti, dist(blakers_massey(antipode(x)), conj(blakers_massey(x))));
      const int k = static_cast<int>(i % 7) - 3;
      SpherePoint iterated = x;
      for (int j = 0; j < std::abs(k); ++j) iterated = sigma_pow(iterated, k >= 0 ? 1 : -1);
      powers = std::max(powers, dist(sigma_pow(x, k), iterated));
    }
  }
  report(3, "b equivariance (unit q / subalgebra q)", equiv, 1e-9);
  report(3, "b(-p,-w) = conj(b(p,w))", anti, 1e-9);
  report(3, "sigma^k closed form vs iterated composition", powers, 1e-9);
}

// --- 4: geometric oracle ---------------------------------------------------------

void criterion_geometric_oracle() {
  Rng rng(mix_seed(4, "acc-geom"));
  double err = 0.0;
  for (long i = 0; i < kSamples; ++i) {
    const EquatorPoint y = sample_equator_point(rng, Algebra::quaternion);
    err = std::max(err, dist(geometric_rho(y), rho(y, 1)));
  }
  report(4, "pictorial construction matches algebraic rho on S5", err, 1e-9);
  double special = 0.0;
  for (int i = 0; i < 100; ++i) {
    const AlgebraElement pu = im_part(sample_unit(rng, Algebra::quaternion));
    const AlgebraElement pd = (1.0 / norm(pu)) * pu;
    const EquatorPoint pole = EquatorPoint::make(pd, zero_elem(Algebra::quaternion));
    special = std::max(special, dist(geometric_rho(pole),
                                     EquatorPoint{-pole.p, zero_elem(Algebra::quaternion)}));
    const double c = rng.uniform(0.2, 0.8);
    const EquatorPoint par = EquatorPoint::make(c * pd, std::sqrt(1.0 - c * c) * pd);
    special = std::max(special, dist(geometric_rho(par), equator_antipode(par)));
  }
  report(4, "captioned special cases (w = 0 and p parallel w)", special, 1e-12);
}

// --- 5: freeness scan ---------------------------------------------------------------

void criterion_freeness() {
  const struct {
    int dim;
    double frozen;
  } spheres[] = {{5, kScanFloor5}, {6, kScanFloor6}, {13, kScanFloor13}, {14, kScanFloor14}};
  for (const auto& [dim, frozen] : spheres) {
    double lo = 1e300, hi = -1e300;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ScanOptions opts;
      opts.dim = dim;
      opts.grid = 50000;
      opts.starts = 16;
      opts.descent_iters = 150;
      opts.seed = seed;
      const ScanResult r = scan_freeness(opts);
      lo = std::min(lo, r.min_displacement);
      hi = std::max(hi, r.min_displacement);
    }
    const bool positive = lo > 0.0;
    const double drift = std::max(std::abs(lo - frozen), std::abs(hi - frozen));
    report_bool(5, "dim " + std::to_string(dim) + " scan minimum strictly positive", positive);
    report(5, "dim " + std::to_string(dim) + " scan minimum stable across 5 seeds", drift, 1e-3);
  }
  // Sampled floor: no random point across 5 independent seeds dips below the
  // recorded constant minus the slack.
  double worst_gap = 0.0;
  for (std::uint64_t seed = 101; seed <= 105; ++seed) {
    Rng rng(mix_seed(seed, "acc-floor"));
    for (long i = 0; i < 20000; ++i) {
      const Algebra alg = i % 2 ? Algebra::cayley : Algebra::quaternion;
      const double frozen = i % 2 ? kScanFloor14 : kScanFloor6;
      const double d = displacement(sample_sphere_point(rng, alg), 1);
      worst_gap = std::max(worst_gap, frozen - d);
    }
  }
  report(5, "sampled displacements stay above the recorded floor", worst_gap, 1e-3);
}

// --- 6: path suite --------------------------------------------------------------------

void criterion_paths() {
  double endpoints = 0.0, susp_err = 0.0, comm = 0.0, homotopy = 0.0, rotation = 0.0;
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    Rng rng(mix_seed(6, "acc-paths"));
    const DiffPath loop = sigma_loop_path(alg);
    const auto susp = suspend(loop);
    const DiffPath lhs = conjugate_by_antipode(reverse(loop));
    const DiffPath rhs = pointwise_inverse(loop);
    for (long i = 0; i < 1000; ++i) {
      const EquatorPoint y = sample_equator_point(rng, alg);
      endpoints = std::max({endpoints, dist(loop.eval(0.0, y), y), dist(loop.eval(1.0, y), y)});
      const SpherePoint x = sample_sphere_point(rng, alg);
      susp_err = std::max(susp_err, dist(susp(x), sigma_pow(x, 1)));
      const double t = rng.uniform();
      comm = std::max(comm, dist(lhs.eval(t, y), rhs.eval(t, y)));
    }
    const RotationPath A(alg);
    rotation = std::max(rotation, rotation_identity_error(A, 100));
    const SphereMap alpha0 = antipode_map();
    Rng hr(mix_seed(6, "acc-h"));
    const SphereMap hs[3] = {conjugation_map(sample_unit(hr, alg)), sigma0_map(),
                             path_slice(loop, 0.3)};
    for (const SphereMap& h : hs) {
      for (long i = 0; i < 200; ++i) {
        const double s = rng.uniform(), t = rng.uniform();
        const EquatorPoint y = sample_equator_point(rng, alg);
        const SphereMap psi_t = commutator_path(t, h, A);
        homotopy = std::max(homotopy, dist(commutator_homotopy(0.0, t, h, A).fwd(y),
                                           alpha0.fwd(psi_t.fwd(alpha0.fwd(y)))));
        homotopy = std::max(homotopy, dist(commutator_homotopy(1.0, t, h, A).fwd(y), psi_t.inv(y)));
        homotopy = std::max(homotopy, dist(commutator_homotopy(s, 1.0, h, A).fwd(y),
                                           h.fwd(alpha0.fwd(h.inv(alpha0.fwd(y))))));
        EquatorPoint z = alpha0.fwd(y);
        z = A.apply(s, z);
        z = A.apply_inverse(s, A.apply_inverse(s, z));
        z = h.inv(z);
        z = A.apply(s, A.apply(s, z));
        z = h.fwd(z);
        z = A.apply_inverse(s, z);
        z = alpha0.fwd(z);
        homotopy = std::max(homotopy, dist(commutator_homotopy(s, 0.0, h, A).fwd(y), z));
      }
    }
  }
  report(6, "sigma-loop endpoint identities", endpoints, 1e-11);
  report(6, "suspension of the loop equals sigma", susp_err, 1e-10);
  report(6, "path commutation alpha0 sigma^(1-t) alpha0 = inverse", comm, 1e-10);
  report(6, "homotopy boundary identities, three test maps", homotopy, 1e-9);
  report(6, "rotation-path reversal identity", rotation, 1e-12);
}

// --- 7: Sp(2) suite ----------------------------------------------------------------------

void criterion_sp2() {
  Rng rng(mix_seed(7, "acc-sp2"));
  double unitarity = 0.0;
  for (long i = 0; i < kSamples; ++i) {
    const SpherePoint x = sample_sphere_point(rng, Algebra::quaternion);
    const double t = rng.uniform(0.0, 2.0 * kPi);
    unitarity = std::max(unitarity,
                         unitarity_error(horizontal_geodesic(as_quat(x.p), as_quat(x.w), t)));
  }
  report(7, "geodesic unitarity", unitarity, 1e-10);

  double roundtrip = 0.0, equivariance = 0.0, pb_star = 0.0, pb_bullet = 0.0;
  double chart = 0.0, locus = 0.0, prop3 = 0.0;
  for (long i = 0; i < kSamples; ++i) {
    SpherePoint x = sample_sphere_point(rng, Algebra::quaternion);
    while (norm(x.p) < 1e-2 || norm(x.w) < 1e-2) x = sample_sphere_point(rng, Algebra::quaternion);
    const Quaternion p = as_quat(x.p), w = as_quat(x.w);
    const Quaternion q = as_quat(sample_unit(rng, Algebra::quaternion));
    const Quaternion qp = as_quat(sample_unit(rng, Algebra::quaternion));

    const Sp2 A = psi_map(p, w, q);
    const auto [xs, qs] = psi_inv(A);
    roundtrip = std::max({roundtrip, dist(xs, x), dist(qs, q)});
    const Sp2 B = phi_map(p, w, q);
    const auto [xb, qb] = phi_inv(B);
    roundtrip = std::max({roundtrip, dist(xb, x), dist(qb, q)});

    const Sp2 Aeq = psi_map(p, w, qp * q), Beq = phi_map(p, w, qp * q);
    const Sp2 Ast = star_action(qp, A), Bst = bullet_action(qp, B);
    equivariance = std::max({equivariance, dist(Aeq.a, Ast.a), dist(Aeq.b, Ast.b),
                             dist(Aeq.c, Ast.c), dist(Aeq.d, Ast.d), dist(Beq.a, Bst.a),
                             dist(Beq.b, Bst.b), dist(Beq.c, Bst.c), dist(Beq.d, Bst.d)});

    const Quaternion b = as_quat(blakers_massey(x));
    const auto star = pullback_star(x, q);
    pb_star = std::max({pb_star, dist(star.first, rho(x, -1)), dist(star.second, q * b)});
    const auto bullet = pullback_bullet(x, q);
    pb_bullet = std::max({pb_bullet, dist(bullet.first, antipode(x)),
                          dist(bullet.second, q * conj(b))});

    const MilnorCoords m1 = milnor_chart(A);
    const MilnorCoords m2 = milnor_chart(star_action(qp, A));
    chart = std::max({chart, dist(m1.u, m2.u), dist(m1.v, m2.v)});
    const MilnorCoords m3 = milnor_chart(m_involution(A));
    const MilnorCoords m4 = fiber_antipode(m1);
    chart = std::max({chart, dist(m3.u, m4.u), dist(m3.v, m4.v)});

    // Invariant-sphere residuals: the equator-membership residual |Re v|
    // vanishes on the whole midpoint locus; the printed |Re(u v)| condition
    // additionally holds on the equatorial sublocus, where the two conditions
    // together carve the invariant 5-sphere.
    locus = std::max(locus, chart_residuals(A).re_v);
    const Quaternion w_im{0.0, w.x, w.y, w.z};
    const Quaternion w_pure = (std::sqrt(1.0 - norm2(p)) / norm(w_im)) * w_im;
    const Sp2 As5 = psi_map(p, w_pure, q);
    const ChartResiduals sub = chart_residuals(As5);
    locus = std::max({locus, sub.re_uv, sub.re_v});

    const auto [pa, pbq] = to_s7(bullet_action(qp, A));
    prop3 = std::max({prop3, dist(pa, A.a), dist(pbq, A.b)});
    const auto [na, nb] = to_s7(m_involution(A));
    prop3 = std::max({prop3, dist(na, -A.a), dist(nb, -A.b)});
  }
  report(7, "psi/phi round trips", roundtrip, 1e-9);
  report(7, "psi/phi equivariance", equivariance, 1e-9);
  report(7, "pullback through psi: (alpha sigma^{-1}, q b)", pb_star, 1e-9);
  report(7, "pullback through phi: (alpha, q conj(b))", pb_bullet, 1e-9);
  report(7, "milnor chart star-invariance and f.m = tau.f", chart, 1e-9);
  report(7, "invariant-sphere residuals on chart samples", locus, 1e-9);
  report(7, "projection identities under bullet and m", prop3, 1e-11);
}

// --- 8: product actions --------------------------------------------------------------------

void criterion_actions() {
  Rng rng(mix_seed(8, "acc-actions"));
  double axioms = 0.0, involution = 0.0, conjugacy = 0.0, restriction = 0.0;
  const Z2S3 flip{1, kQuatOne};
  for (long i = 0; i < kSamples; ++i) {
    const ProductPoint pt{sample_sphere_point(rng, Algebra::quaternion),
                          as_quat(sample_unit(rng, Algebra::quaternion))};
    const Z2S3 g1{rng.uniform_int(0, 1), as_quat(sample_unit(rng, Algebra::quaternion))};
    const Z2S3 g2{rng.uniform_int(0, 1), as_quat(sample_unit(rng, Algebra::quaternion))};
    axioms = std::max({axioms, dist(r1(compose(g1, g2), pt), r1(g1, r1(g2, pt))),
                       dist(r2(compose(g1, g2), pt), r2(g1, r2(g2, pt)))});
    involution = std::max(involution, dist(conjugating_involution(conjugating_involution(pt)), pt));
    conjugacy = std::max(conjugacy, dist(conjugating_involution(r1(flip, pt)),
                                         r2(flip, conjugating_involution(pt))));
    const Z2S3 s3{0, g1.theta};
    restriction = std::max(restriction, dist(r1(s3, pt), r2(s3, pt)));
  }
  report(8, "r1 and r2 satisfy the action axioms", axioms, 1e-10);
  report(8, "conjugator F is an involution", involution, 1e-12);
  report(8, "F conjugates the restricted Z2 actions", conjugacy, 1e-10);
  report(8, "restrictions to {0} x S3 literally equal", restriction, 0.0);
}

// --- 9: mapping-class arithmetic --------------------------------------------------------------

void criterion_gamma() {
  using namespace exinv::gamma;
  bool ok = solve_conjugacy_obstruction(Dim::d7, generator(Dim::d7)).empty() &&
            solve_conjugacy_obstruction(Dim::d15, generator(Dim::d15)).empty();
  const auto control = solve_conjugacy_obstruction(Dim::d7, make7(2));
  ok = ok && control.size() == 2 && control[0] == make7(1) && control[1] == make7(15);
  report_bool(9, "no h with [sigma] = 2[h]+tau; even control solvable", ok);
  const QuotientReport q7 = two_torsion_quotient(Dim::d7);
  const QuotientReport q15 = two_torsion_quotient(Dim::d15);
  report_bool(9, "two-torsion quotient orders are 14 and 4064",
              q7.quotient_order == 14 && q7.generator_image_order == 14 &&
                  q15.quotient_order == 4064 && q15.generator_image_order == 4064);
  const Census census = component_census();
  report_bool(9, "56 components with fixed classes {0, 14}",
              census.total_components == 56 && census.fixed_classes == std::vector<long>{0, 14} &&
                  census.orbit_pairs.size() == 13);
  bool parity = true;
  for (long k = -9; k <= 9; ++k) parity = parity && rho_parity(k) == (((k % 2) + 2) % 2);
  report_bool(9, "rho_k class is k mod 2", parity);
}

// --- 10: byte determinism -----------------------------------------------------------------------

void criterion_determinism() {
  const std::vector<std::string> args{"verify", "--suite", "all", "--samples", "200",
                                      "--seed", "17"};
  std::ostringstream out1, err1, out2, err2;
  const int c1 = exinv::cli::run(args, out1, err1);
  const int c2 = exinv::cli::run(args, out2, err2);
  report_bool(10, "identical seed gives byte-identical JSON reports",
              c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty());
}

}  // namespace

int main() {
  criterion_involution();
  criterion_commutation();
  criterion_b_properties();
  criterion_geometric_oracle();
  criterion_freeness();
  criterion_paths();
  criterion_sp2();
  criterion_actions();
  criterion_gamma();
  criterion_determinism();
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion check(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
