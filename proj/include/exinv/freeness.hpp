#pragma once

#include <cstdint>
#include <vector>

#include "exinv/sphere.hpp"

namespace exinv {

/// Quasi-random scan for the minimum displacement of rho_k over one of the
/// four spheres (dim 5/6 quaternionic, 13/14 Cayley; odd dims are the pure-w
/// equators). Halton seeds on the sphere, then projected gradient descent on
/// the squared displacement from the best grid points.
struct ScanOptions {
  int dim = 6;
  int k = 1;
  long grid = 1'000'000;
  int starts = 32;
  int descent_iters = 200;
  std::uint64_t seed = 1;
};

struct ScanResult {
  int dim = 0;
  int k = 0;
  long grid = 0;
  std::uint64_t seed = 0;
  double min_displacement = 0.0;
  double argmin_p_norm = 0.0;
  std::vector<double> argmin_p;  // imaginary coefficients
  std::vector<double> argmin_w;  // real part first on even-dimensional spheres
};

ScanResult scan_freeness(const ScanOptions& opts);

/// Number of ambient coordinates of the scan domain for a given dim.
int scan_coords(int dim);

SpherePoint scan_point_from_coords(int dim, const std::vector<double>& coords);

}  // namespace exinv
