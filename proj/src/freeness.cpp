#include "exinv/freeness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exinv/exotic_maps.hpp"
#include "exinv/rng.hpp"

namespace exinv {

namespace {

struct DimInfo {
  Algebra algebra;
  bool equator;  // pure w
  int pure;      // imaginary coefficients per component
};

DimInfo dim_info(int dim) {
  switch (dim) {
    case 5: return {Algebra::quaternion, true, 3};
    case 6: return {Algebra::quaternion, false, 3};
    case 13: return {Algebra::cayley, true, 7};
    case 14: return {Algebra::cayley, false, 7};
    default: throw std::invalid_argument("scan_freeness: dim must be 5, 6, 13 or 14");
  }
}

void normalize(std::vector<double>& v) {
  double n2 = 0.0;
  for (double c : v) n2 += c * c;
  const double n = std::sqrt(n2);
  if (n < 1e-14) {
    v.assign(v.size(), 0.0);
    v[0] = 1.0;
    return;
  }
  for (double& c : v) c /= n;
}

double displacement_at(int dim, const std::vector<double>& coords, int k) {
  return displacement(scan_point_from_coords(dim, coords), k);
}

}  // namespace

int scan_coords(int dim) {
  const DimInfo info = dim_info(dim);
  return info.equator ? 2 * info.pure : 2 * info.pure + 1;
}

SpherePoint scan_point_from_coords(int dim, const std::vector<double>& coords) {
  const DimInfo info = dim_info(dim);
  std::vector<double> v = coords;
  normalize(v);
  std::array<double, 7> pc{}, wc{};
  for (int i = 0; i < info.pure; ++i) pc[i] = v[i];
  double w_real = 0.0;
  int offset = info.pure;
  if (!info.equator) w_real = v[offset++];
  for (int i = 0; i < info.pure; ++i) wc[i] = v[offset + i];
  const AlgebraElement p = pure_from_coords(info.algebra, pc);
  const AlgebraElement w = real_elem(info.algebra, w_real) + pure_from_coords(info.algebra, wc);
  return SpherePoint::make(p, w);
}

ScanResult scan_freeness(const ScanOptions& opts) {
  const int n = scan_coords(opts.dim);
  const int gauss_dims = n + (n % 2);  // Box-Muller consumes pairs
  HaltonSampler halton(gauss_dims, opts.seed);

  std::vector<double> uniforms(gauss_dims), point(n);
  // Best `starts` grid points, kept as a simple bounded worst-out list.
  std::vector<std::pair<double, std::vector<double>>> best;
  best.reserve(opts.starts + 1);

  for (long it = 0; it < opts.grid; ++it) {
    halton.next(uniforms);
    for (int i = 0; i + 1 < gauss_dims; i += 2) {
      double u1 = std::max(uniforms[i], 1e-15);
      const double m = std::sqrt(-2.0 * std::log(u1));
      const double a = 2.0 * kPi * uniforms[i + 1];
      if (i < n) point[i] = m * std::cos(a);
      if (i + 1 < n) point[i + 1] = m * std::sin(a);
    }
    normalize(point);
    const double d = displacement_at(opts.dim, point, opts.k);
    if (static_cast<int>(best.size()) < opts.starts || d < best.back().first) {
      best.emplace_back(d, point);
      std::sort(best.begin(), best.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (static_cast<int>(best.size()) > opts.starts) best.pop_back();
    }
  }

  // Projected gradient descent on displacement^2 from each surviving start,
  // halving the step whenever it fails to decrease.
  double best_val = best.empty() ? 0.0 : best.front().first;
  std::vector<double> best_coords = best.empty() ? std::vector<double>(n, 0.0) : best.front().second;
  const double h = 1e-6;
  for (auto& [d0, start] : best) {
    std::vector<double> x = start;
    double fx = d0 * d0;
    double step = 0.05;
    for (int iter = 0; iter < opts.descent_iters; ++iter) {
      std::vector<double> grad(n);
      for (int i = 0; i < n; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fp = displacement_at(opts.dim, xp, opts.k);
        const double fm = displacement_at(opts.dim, xm, opts.k);
        grad[i] = (fp * fp - fm * fm) / (2.0 * h);
      }
      double gx = 0.0;
      for (int i = 0; i < n; ++i) gx += grad[i] * x[i];
      for (int i = 0; i < n; ++i) grad[i] -= gx * x[i];  // tangent projection
      std::vector<double> cand = x;
      for (int i = 0; i < n; ++i) cand[i] -= step * grad[i];
      normalize(cand);
      const double dc = displacement_at(opts.dim, cand, opts.k);
      if (dc * dc < fx) {
        x = cand;
        fx = dc * dc;
      } else {
        step *= 0.5;
        if (step < 1e-12) break;
      }
    }
    const double fd = std::sqrt(fx);
    if (fd < best_val) {
      best_val = fd;
      best_coords = x;
    }
  }

  const DimInfo info = dim_info(opts.dim);
  normalize(best_coords);
  ScanResult result;
  result.dim = opts.dim;
  result.k = opts.k;
  result.grid = opts.grid;
  result.seed = opts.seed;
  result.min_displacement = best_val;
  result.argmin_p.assign(best_coords.begin(), best_coords.begin() + info.pure);
  result.argmin_w.assign(best_coords.begin() + info.pure, best_coords.end());
  double pn2 = 0.0;
  for (double c : result.argmin_p) pn2 += c * c;
  result.argmin_p_norm = std::sqrt(pn2);
  return result;
}

}  // namespace exinv
