#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exinv/exotic_maps.hpp"
#include "exinv/freeness.hpp"
#include "exinv/rng.hpp"

using namespace exinv;

namespace {

SpherePoint conjugate_point(const AlgebraElement& q, const SpherePoint& x) {
  return SpherePoint::make(conj_action(q, x.p), conj_action(q, x.w));
}

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

}  // namespace

TEST_CASE("sphere point invariants are enforced") {
  CHECK_THROWS_AS(SpherePoint::make(kQuatOne, Quaternion{}), std::domain_error);
  CHECK_THROWS_AS(SpherePoint::make(kQuatI, kQuatI), std::domain_error);
  CHECK_THROWS_AS(SpherePoint::make(AlgebraElement{kQuatI}, AlgebraElement{Octonion{}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EquatorPoint::make(0.6 * kQuatI, Quaternion::real(0.8)), std::domain_error);
}

TEST_CASE("blakers-massey spot values") {
  // branch value at w = 0
  const SpherePoint pole = SpherePoint::make(kQuatI, Quaternion{});
  CHECK(dist(blakers_massey(pole), AlgebraElement{-kQuatOne}) == 0.0);
  // trivial value at p = 0
  const SpherePoint base = SpherePoint::make(Quaternion{}, kQuatOne);
  CHECK(dist(blakers_massey(base), AlgebraElement{kQuatOne}) < 1e-15);
  // normal-form value: p = i/2, w = (sqrt(3)/2) j gives -i
  const SpherePoint nf = SpherePoint::make(0.5 * kQuatI, kSqrt3Half * kQuatJ);
  CHECK(dist(blakers_massey(nf), AlgebraElement{-kQuatI}) < 1e-15);
  // unit norm everywhere
  Rng rng(2);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley})
    for (int i = 0; i < 1000; ++i)
      CHECK(std::abs(norm(blakers_massey(sample_sphere_point(rng, alg))) - 1.0) < 1e-13);
}

TEST_CASE("blakers-massey normal-form family matches the closed form") {
  // b = cos(2 theta) i + sin(2 theta) j along p = i/2, w = (sqrt(3)/2)(cos t i + sin t j)
  for (double theta = 0.0; theta <= kPi + 1e-9; theta += kPi / 32.0) {
    const Quaternion w{0.0, kSqrt3Half * std::cos(theta), kSqrt3Half * std::sin(theta), 0.0};
    const SpherePoint x = SpherePoint::make(0.5 * kQuatI, w);
    const Quaternion expected{0.0, std::cos(2.0 * theta), std::sin(2.0 * theta), 0.0};
    CHECK(dist(blakers_massey(x), AlgebraElement{expected}) < 1e-14);
  }
}

TEST_CASE("sigma fixes the poles and the p = 0 slice") {
  Rng rng(4);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    const SpherePoint fixed = SpherePoint::make(zero_elem(alg), sample_unit(rng, alg));
    CHECK(dist(sigma_pow(fixed, 1), fixed) < 1e-14);
    const AlgebraElement pu = im_part(sample_unit(rng, alg));
    const AlgebraElement pd = (1.0 / norm(pu)) * pu;
    const SpherePoint pole = SpherePoint::make(pd, zero_elem(alg));
    CHECK(dist(sigma_pow(pole, 1), pole) < 1e-14);
  }
}

TEST_CASE("sigma powers compose") {
  Rng rng(6);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    for (int i = 0; i < 500; ++i) {
      const SpherePoint x = sample_sphere_point(rng, alg);
      CHECK(dist(sigma_pow(x, 2), sigma_pow(sigma_pow(x, 1), 1)) < 1e-10);
      CHECK(dist(sigma_pow(sigma_pow(x, 1), -1), x) < 1e-12);
      CHECK(dist(sigma_pow(x, 0), x) == 0.0);
    }
  }
}

TEST_CASE("rho is an involution and preserves the equator") {
  Rng rng(8);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    for (int i = 0; i < 500; ++i) {
      const SpherePoint x = sample_sphere_point(rng, alg);
      for (int k = -2; k <= 2; ++k) CHECK(dist(rho(rho(x, k), k), x) < 1e-10);
      const EquatorPoint y = sample_equator_point(rng, alg);
      const SpherePoint image = rho(y.as_sphere(), 1);
      CHECK(std::abs(re_part(image.w)) < 1e-12);
    }
  }
  // rho on the w = 0 locus is p -> -p
  const SpherePoint pole = SpherePoint::make(kQuatI, Quaternion{});
  CHECK(dist(rho(pole, 1), SpherePoint::make(-kQuatI, Quaternion{})) < 1e-14);
  // and sigma does not move the p = 0 slice, so rho negates w there
  const SpherePoint base = SpherePoint::make(Quaternion{}, kQuatJ);
  CHECK(dist(rho(base, 1), SpherePoint::make(Quaternion{}, -kQuatJ)) < 1e-14);
}

TEST_CASE("antipode is an involution preserving the equator") {
  Rng rng(10);
  const SpherePoint x = sample_sphere_point(rng, Algebra::cayley);
  CHECK(dist(antipode(antipode(x)), x) == 0.0);
  const EquatorPoint y = sample_equator_point(rng, Algebra::quaternion);
  const SpherePoint ay = antipode(y.as_sphere());
  CHECK(std::abs(re_part(ay.w)) == 0.0);
}

TEST_CASE("main commutation relation and conjugacy shift") {
  Rng rng(12);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    for (int i = 0; i < 500; ++i) {
      const SpherePoint x = sample_sphere_point(rng, alg);
      CHECK(dist(antipode(sigma_pow(x, 1)), sigma_pow(antipode(x), -1)) < 1e-10);
      for (int k = -2; k <= 2; ++k)
        for (int l = -2; l <= 2; ++l)
          CHECK(dist(sigma_pow(rho(sigma_pow(x, l), k), -l), rho(x, k + 2 * l)) < 1e-10);
    }
  }
}

TEST_CASE("b equivariance, antipode conjugation, sigma invariance") {
  Rng rng(14);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    for (int i = 0; i < 1000; ++i) {
      SpherePoint x = sample_sphere_point(rng, alg);
      while (norm(x.p) < 1e-2 || norm(x.w) < 1e-2) x = sample_sphere_point(rng, alg);
      const AlgebraElement q = alg == Algebra::quaternion ? sample_unit(rng, alg)
                                                          : subalgebra_sample(x.p, x.w, rng);
      CHECK(dist(blakers_massey(conjugate_point(q, x)), conj_action(q, blakers_massey(x))) < 1e-10);
      CHECK(dist(blakers_massey(antipode(x)), conj(blakers_massey(x))) < 1e-11);
      CHECK(dist(blakers_massey(sigma_pow(x, 1)), blakers_massey(x)) < 1e-10);
    }
  }
}

TEST_CASE("branch continuity of b toward w = 0") {
  Rng rng(16);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley}) {
    for (int ray = 0; ray < 200; ++ray) {
      const AlgebraElement pu = im_part(sample_unit(rng, alg));
      const AlgebraElement pd = (1.0 / norm(pu)) * pu;
      const AlgebraElement wd = sample_unit(rng, alg);
      double prev = 2.0;
      for (const double s : {1e-3, 1e-5, 1e-7}) {
        const SpherePoint x = SpherePoint::make(std::sqrt(1.0 - s * s) * pd, s * wd);
        const double dev = dist(blakers_massey(x), real_elem(alg, -1.0));
        CHECK(dev < prev + 1e-15);
        prev = dev;
      }
      CHECK(prev < 1e-10);
    }
  }
}

TEST_CASE("geometric construction agrees with the algebraic involution") {
  Rng rng(18);
  for (int i = 0; i < 10000; ++i) {
    const EquatorPoint y = sample_equator_point(rng, Algebra::quaternion);
    CHECK(dist(geometric_rho(y), rho(y, 1)) < 1e-10);
  }
  // captioned cases: w = 0 maps to (-p, 0); parallel pairs to their antipodes
  const EquatorPoint pole = EquatorPoint::make(kQuatI, Quaternion{});
  CHECK(dist(geometric_rho(pole), EquatorPoint::make(-kQuatI, Quaternion{})) < 1e-15);
  const EquatorPoint par = EquatorPoint::make(0.6 * kQuatJ, 0.8 * kQuatJ);
  CHECK(dist(geometric_rho(par), equator_antipode(par)) < 1e-15);
  // degenerate p = 0 slice
  const EquatorPoint base = EquatorPoint::make(Quaternion{}, kQuatK);
  CHECK(dist(geometric_rho(base), EquatorPoint::make(Quaternion{}, -kQuatK)) == 0.0);
  const Octonion oct_i{{0.0, 0.6, 0.0, 0.0}, {}};
  const Octonion oct_e5{{}, {0.0, 0.8, 0.0, 0.0}};
  CHECK_THROWS_AS(geometric_rho(EquatorPoint::make(oct_i, oct_e5)), std::invalid_argument);
}

TEST_CASE("displacement witnesses freeness") {
  const SpherePoint pole = SpherePoint::make(kQuatI, Quaternion{});
  CHECK(displacement(pole, 1) == doctest::Approx(2.0).epsilon(1e-12));
  const SpherePoint base = SpherePoint::make(Quaternion{}, kQuatJ);
  CHECK(displacement(base, 1) == doctest::Approx(2.0).epsilon(1e-12));
  // The scan puts the true minimum near 0.94; any sampled point must stay
  // well above a crude positivity floor.
  Rng rng(20);
  for (const Algebra alg : {Algebra::quaternion, Algebra::cayley})
    for (int i = 0; i < 2000; ++i)
      CHECK(displacement(sample_sphere_point(rng, alg), 1) > 0.5);
}

TEST_CASE("scan minima agree between a sphere and its equator") {
  // The displacement optimum has Re(w) ~ 0, so the even- and odd-dimensional
  // scans land on the same value.
  const auto scan = [](int dim) {
    ScanOptions opts;
    opts.dim = dim;
    opts.grid = 8000;
    opts.starts = 8;
    opts.descent_iters = 120;
    opts.seed = 2;
    return scan_freeness(opts);
  };
  const ScanResult s5 = scan(5), s6 = scan(6);
  CHECK(s5.min_displacement > 0.5);
  CHECK(std::abs(s5.min_displacement - s6.min_displacement) < 1e-3);
  CHECK(std::abs(s6.argmin_w.front()) < 0.05);  // Re(w) at the dim-6 argmin
  CHECK(s6.argmin_p_norm == doctest::Approx(0.4445).epsilon(0.01));
}

TEST_CASE("fixed point residuals along the critical family") {
  // First residual |cos 2 theta| vanishes exactly at pi/4 and 3 pi/4; the
  // second, sqrt(3) |cos theta|, stays at sqrt(6)/2 there.
  const auto [r1a, r2a] = fixed_point_residuals(kPi / 2.0);
  CHECK(r1a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r2a < 1e-12);
  const double sqrt6_half = std::sqrt(6.0) / 2.0;
  for (const double theta : {kPi / 4.0, 3.0 * kPi / 4.0}) {
    const auto [r1b, r2b] = fixed_point_residuals(theta);
    CHECK(r1b < 1e-14);
    CHECK(r2b == doctest::Approx(sqrt6_half).epsilon(1e-12));
  }
  Rng rng(22);
  for (int i = 0; i < 2000; ++i) {
    const double theta = rng.uniform(0.0, kPi);
    const auto [r1v, r2v] = fixed_point_residuals(theta);
    CHECK(std::abs(r1v - std::abs(std::cos(2.0 * theta))) < 1e-13);
    CHECK(std::abs(r2v - std::sqrt(3.0) * std::abs(std::cos(theta))) < 1e-13);
    CHECK(std::max(r1v, r2v) > 0.4);  // the two residuals never vanish together
  }
}
