#include "exinv/gamma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace exinv::gamma {

namespace {

long mod(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

void check_same_dim(const GammaElement& a, const GammaElement& b) {
  if (a.dim != b.dim) throw std::invalid_argument("gamma: dimension mismatch");
}

}  // namespace

GammaElement make7(long n) { return {Dim::d7, mod(n, 28), 0}; }

GammaElement make15(long n, int bit) { return {Dim::d15, mod(n, 8128), bit & 1}; }

GammaElement add(const GammaElement& a, const GammaElement& b) {
  check_same_dim(a, b);
  return {a.dim, mod(a.cyclic + b.cyclic, cyclic_modulus(a.dim)), (a.bit + b.bit) & 1};
}

GammaElement neg(const GammaElement& a) {
  return {a.dim, mod(-a.cyclic, cyclic_modulus(a.dim)), a.bit};
}

GammaElement scale(const GammaElement& a, long k) {
  const long m = cyclic_modulus(a.dim);
  const long kc = mod(k, m);  // safe since m * m fits comfortably in a long
  return {a.dim, mod(a.cyclic * kc, m), static_cast<int>((mod(k, 2) * a.bit) & 1)};
}

GammaElement generator(Dim d) { return d == Dim::d7 ? make7(1) : make15(1, 0); }

ConjugationResult antipodal_conjugation(const GammaElement& g, TauMode mode) {
  const GammaElement negated = neg(g);
  if (g.dim == Dim::d7 || g.bit == 0) return {negated, std::nullopt};
  if (mode == TauMode::zero) return {negated, std::nullopt};
  return {negated, add(negated, make15(4064, 0))};
}

std::vector<GammaElement> solve_conjugacy_obstruction(Dim d, const GammaElement& target,
                                                      TauMode mode) {
  if (target.dim != d) throw std::invalid_argument("gamma: dimension mismatch");
  std::vector<GammaElement> solutions;
  const long m = cyclic_modulus(d);
  const int bits = d == Dim::d7 ? 1 : 2;
  for (int bit = 0; bit < bits; ++bit) {
    for (long n = 0; n < m; ++n) {
      const GammaElement h = d == Dim::d7 ? make7(n) : make15(n, bit);
      std::vector<GammaElement> taus = {d == Dim::d7 ? make7(0) : make15(0, 0)};
      if (d == Dim::d15 && bit == 1 && mode == TauMode::swap_unknown)
        taus.push_back(make15(4064, 0));
      for (const GammaElement& tau : taus) {
        if (add(scale(h, 2), tau) == target) {
          solutions.push_back(h);
          break;
        }
      }
    }
  }
  return solutions;
}

QuotientReport two_torsion_quotient(Dim d) {
  const long m = cyclic_modulus(d);
  // Elements of order dividing 2. In an abelian group the sums of such
  // elements are again 2-torsion, so this set already is the subgroup they
  // generate; a closure pass keeps that honest.
  std::set<std::pair<long, int>> subgroup;
  const int bits = d == Dim::d7 ? 1 : 2;
  for (int bit = 0; bit < bits; ++bit)
    for (long n = 0; n < m; ++n)
      if (mod(2 * n, m) == 0) subgroup.insert({n, bit});
  for (bool grew = true; grew;) {
    grew = false;
    const std::set<std::pair<long, int>> snapshot = subgroup;
    for (const auto& x : snapshot)
      for (const auto& y : snapshot) {
        const std::pair<long, int> s{mod(x.first + y.first, m), (x.second + y.second) & 1};
        if (subgroup.insert(s).second) grew = true;
      }
  }
  const long total = d == Dim::d7 ? m : 2 * m;
  const long sub_order = static_cast<long>(subgroup.size());
  const long quotient_order = total / sub_order;
  // Order of the generator's image: least k > 0 with k * generator in the subgroup.
  const GammaElement gen = generator(d);
  long image_order = 0;
  for (long k = 1; k <= total; ++k) {
    const GammaElement g = scale(gen, k);
    if (subgroup.count({g.cyclic, g.bit})) {
      image_order = k;
      break;
    }
  }
  return {sub_order, quotient_order, image_order};
}

int rho_parity(long k) { return static_cast<int>(mod(k, 2)); }

Census component_census() {
  Census census;
  census.orientation_preserving = 28;
  census.orientation_reversing = 28;
  census.total_components = 56;
  for (long n = 0; n < 28; ++n) {
    const long image = mod(28 - n, 28);
    if (image == n)
      census.fixed_classes.push_back(n);
    else if (n < image)
      census.orbit_pairs.emplace_back(n, image);
  }
  return census;
}

}  // namespace exinv::gamma
