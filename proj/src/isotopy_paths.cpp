#include "exinv/isotopy_paths.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace exinv {

namespace {

SpherePoint embed_slice(double t, const EquatorPoint& y) {
  const double w0 = std::cos(kPi * t), s = std::sin(kPi * t);
  return SpherePoint::make(s * y.p, real_elem(y.algebra(), w0) + s * y.w);
}

EquatorPoint conjugate_pair(const AlgebraElement& q, const EquatorPoint& y) {
  return EquatorPoint::make(conj_action(q, y.p), conj_action(q, y.w));
}

}  // namespace

EquatorPoint sigma_loop(double t, const EquatorPoint& y) {
  if (t < -1e-12 || t > 1.0 + 1e-12) throw std::invalid_argument("sigma_loop: t outside [0, 1]");
  const AlgebraElement beta = blakers_massey(embed_slice(t, y));
  return conjugate_pair(beta, y);
}

DiffPath sigma_loop_path(Algebra a) {
  DiffPath path;
  path.algebra = a;
  path.eval = [](double t, const EquatorPoint& y) { return sigma_loop(t, y); };
  // The image slice has the same b-value as the source slice, so the inverse
  // is conjugation by the conjugate of b evaluated at the target.
  path.inverse_eval = [](double t, const EquatorPoint& y) {
    const AlgebraElement beta = blakers_massey(embed_slice(t, y));
    return conjugate_pair(conj(beta), y);
  };
  path.identity_at_0 = true;
  path.identity_at_1 = true;
  return path;
}

DiffPath constant_identity_path(Algebra a) {
  DiffPath path;
  path.algebra = a;
  path.eval = [](double, const EquatorPoint& y) { return y; };
  path.inverse_eval = path.eval;
  path.identity_at_0 = true;
  path.identity_at_1 = true;
  return path;
}

DiffPath reverse(const DiffPath& path) {
  DiffPath out;
  out.algebra = path.algebra;
  out.eval = [eval = path.eval](double t, const EquatorPoint& y) { return eval(1.0 - t, y); };
  if (path.inverse_eval)
    out.inverse_eval = [inv = path.inverse_eval](double t, const EquatorPoint& y) {
      return inv(1.0 - t, y);
    };
  out.identity_at_0 = path.identity_at_1;
  out.identity_at_1 = path.identity_at_0;
  return out;
}

DiffPath juxtapose(const DiffPath& first, const DiffPath& second) {
  if (first.algebra != second.algebra) throw std::invalid_argument("juxtapose: algebra mismatch");
  Rng rng(mix_seed(0x6a757874, "juxtapose-probes"));
  double max_dev = 0.0;
  for (int i = 0; i < 8; ++i) {
    const EquatorPoint y = sample_equator_point(rng, first.algebra);
    max_dev = std::max(max_dev, dist(first.eval(1.0, y), second.eval(0.0, y)));
  }
  if (max_dev > 1e-9) {
    std::ostringstream msg;
    msg << "juxtapose: endpoint mismatch, max probe deviation " << max_dev;
    throw std::invalid_argument(msg.str());
  }
  DiffPath out;
  out.algebra = first.algebra;
  out.eval = [a = first.eval, b = second.eval](double t, const EquatorPoint& y) {
    return t <= 0.5 ? a(2.0 * t, y) : b(2.0 * t - 1.0, y);
  };
  if (first.inverse_eval && second.inverse_eval)
    out.inverse_eval = [a = first.inverse_eval, b = second.inverse_eval](double t, const EquatorPoint& y) {
      return t <= 0.5 ? a(2.0 * t, y) : b(2.0 * t - 1.0, y);
    };
  out.identity_at_0 = first.identity_at_0;
  out.identity_at_1 = second.identity_at_1;
  return out;
}

DiffPath conjugate_by_antipode(const DiffPath& path) {
  DiffPath out;
  out.algebra = path.algebra;
  out.eval = [eval = path.eval](double t, const EquatorPoint& y) {
    return equator_antipode(eval(t, equator_antipode(y)));
  };
  if (path.inverse_eval)
    out.inverse_eval = [inv = path.inverse_eval](double t, const EquatorPoint& y) {
      return equator_antipode(inv(t, equator_antipode(y)));
    };
  out.identity_at_0 = path.identity_at_0;
  out.identity_at_1 = path.identity_at_1;
  return out;
}

DiffPath pointwise_inverse(const DiffPath& path) {
  if (!path.inverse_eval)
    throw std::invalid_argument("pointwise_inverse: path carries no analytic inverse");
  DiffPath out;
  out.algebra = path.algebra;
  out.eval = path.inverse_eval;
  out.inverse_eval = path.eval;
  out.identity_at_0 = path.identity_at_0;
  out.identity_at_1 = path.identity_at_1;
  return out;
}

namespace {

double bump(double u) { return u <= 0.0 ? 0.0 : std::exp(-1.0 / u); }

// C-infinity monotone 0 -> 1 transition; exactly 0 for u <= 0, 1 for u >= 1.
double smooth_step(double u) {
  const double a = bump(u), b = bump(1.0 - u);
  return a / (a + b);
}

}  // namespace

DiffPath flat_ramp(const DiffPath& path, double eps) {
  if (eps <= 0.0 || eps >= 0.5) throw std::invalid_argument("flat_ramp: eps must be in (0, 0.5)");
  const auto ramp = [eps](double t) { return smooth_step((t - eps) / (1.0 - 2.0 * eps)); };
  DiffPath out;
  out.algebra = path.algebra;
  out.eval = [eval = path.eval, ramp](double t, const EquatorPoint& y) { return eval(ramp(t), y); };
  if (path.inverse_eval)
    out.inverse_eval = [inv = path.inverse_eval, ramp](double t, const EquatorPoint& y) {
      return inv(ramp(t), y);
    };
  out.identity_at_0 = path.identity_at_0;
  out.identity_at_1 = path.identity_at_1;
  return out;
}

std::function<SpherePoint(const SpherePoint&)> suspend(const DiffPath& path) {
  if (!path.identity_at_0 || !path.identity_at_1)
    throw std::invalid_argument("suspend: path must have identity endpoints");
  return [eval = path.eval](const SpherePoint& x) {
    const double w0 = re_part(x.w);
    const AlgebraElement omega = im_part(x.w);
    const double s = std::sqrt(norm2(x.p) + norm2(omega));
    if (s < 1e-13) return x;  // poles
    const double w0c = w0 < -1.0 ? -1.0 : (w0 > 1.0 ? 1.0 : w0);
    const double t = std::acos(w0c) / kPi;
    const EquatorPoint y = EquatorPoint::make((1.0 / s) * x.p, (1.0 / s) * omega);
    const EquatorPoint image = eval(t, y);
    return SpherePoint::make(s * image.p, real_elem(x.algebra(), w0) + s * image.w);
  };
}

RotationPath::RotationPath(Algebra a)
    : algebra_(a), ambient_(a == Algebra::quaternion ? 6 : 14) {}

namespace {

// Endpoints are the identity and the antipode exactly, not up to sin(pi)
// roundoff.
void rotate_pairs(double t, int ambient, std::vector<double>& v) {
  if (t == 0.0) return;
  if (t == 1.0 || t == -1.0) {
    for (double& c : v) c = -c;
    return;
  }
  const double c = std::cos(kPi * t), s = std::sin(kPi * t);
  for (int m = 0; m + 1 < ambient; m += 2) {
    const double a = v[m], b = v[m + 1];
    v[m] = c * a - s * b;
    v[m + 1] = s * a + c * b;
  }
}

}  // namespace

void RotationPath::apply_coords(double t, std::vector<double>& v) const {
  rotate_pairs(t, ambient_, v);
}

void RotationPath::apply_inverse_coords(double t, std::vector<double>& v) const {
  rotate_pairs(-t, ambient_, v);
}

std::vector<double> flatten(const EquatorPoint& y) {
  const int n = pure_dim(y.algebra());
  std::vector<double> coords(2 * n);
  const auto pc = pure_coords(y.p), wc = pure_coords(y.w);
  for (int i = 0; i < n; ++i) {
    coords[i] = pc[i];
    coords[n + i] = wc[i];
  }
  return coords;
}

EquatorPoint unflatten(Algebra a, const std::vector<double>& coords) {
  const int n = pure_dim(a);
  std::array<double, 7> pc{}, wc{};
  for (int i = 0; i < n; ++i) {
    pc[i] = coords[i];
    wc[i] = coords[n + i];
  }
  return EquatorPoint::make(pure_from_coords(a, pc), pure_from_coords(a, wc));
}

EquatorPoint RotationPath::apply(double t, const EquatorPoint& y) const {
  std::vector<double> coords = flatten(y);
  apply_coords(t, coords);
  return unflatten(algebra_, coords);
}

EquatorPoint RotationPath::apply_inverse(double t, const EquatorPoint& y) const {
  std::vector<double> coords = flatten(y);
  apply_inverse_coords(t, coords);
  return unflatten(algebra_, coords);
}

double rotation_identity_error(const RotationPath& A, int t_samples) {
  const int n = A.ambient();
  Rng rng(mix_seed(0x726f74, "rotation-identity"));
  double max_err = 0.0;
  for (int it = 0; it < t_samples; ++it) {
    const double t = it == 0 ? 0.0 : (it == 1 ? 0.5 : rng.uniform());
    for (int i = 0; i < n; ++i) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      std::vector<double> lhs = e;        // A(1-t)^{-1} e
      A.apply_inverse_coords(1.0 - t, lhs);
      std::vector<double> mid = e;        // -A(t) e
      A.apply_coords(t, mid);
      for (double& v : mid) v = -v;
      std::vector<double> rhs = e;        // A(t) alpha0 e
      for (double& v : rhs) v = -v;
      A.apply_coords(t, rhs);
      for (int j = 0; j < n; ++j) {
        max_err = std::max(max_err, std::abs(lhs[j] - mid[j]));
        max_err = std::max(max_err, std::abs(rhs[j] - mid[j]));
      }
    }
  }
  return max_err;
}

SphereMap identity_map() {
  auto id = [](const EquatorPoint& y) { return y; };
  return {id, id};
}

SphereMap antipode_map() {
  auto neg = [](const EquatorPoint& y) { return equator_antipode(y); };
  return {neg, neg};
}

SphereMap conjugation_map(const AlgebraElement& q) {
  return {[q](const EquatorPoint& y) { return conjugate_pair(q, y); },
          [qc = conj(q)](const EquatorPoint& y) { return conjugate_pair(qc, y); }};
}

SphereMap sigma0_map() {
  // b is invariant under sigma, so the inverse conjugates by conj(b) taken at
  // the target point.
  return {[](const EquatorPoint& y) {
            return conjugate_pair(blakers_massey(y.as_sphere()), y);
          },
          [](const EquatorPoint& y) {
            return conjugate_pair(conj(blakers_massey(y.as_sphere())), y);
          }};
}

SphereMap path_slice(const DiffPath& path, double t0) {
  if (!path.inverse_eval) throw std::invalid_argument("path_slice: path carries no analytic inverse");
  return {[eval = path.eval, t0](const EquatorPoint& y) { return eval(t0, y); },
          [inv = path.inverse_eval, t0](const EquatorPoint& y) { return inv(t0, y); }};
}

SphereMap rotation_slice(const RotationPath& A, double t0) {
  return {[A, t0](const EquatorPoint& y) { return A.apply(t0, y); },
          [A, t0](const EquatorPoint& y) { return A.apply_inverse(t0, y); }};
}

SphereMap compose(const SphereMap& f, const SphereMap& g) {
  return {[ff = f.fwd, gf = g.fwd](const EquatorPoint& y) { return ff(gf(y)); },
          [fi = f.inv, gi = g.inv](const EquatorPoint& y) { return gi(fi(y)); }};
}

SphereMap commutator_path(double t, const SphereMap& h, const RotationPath& A) {
  if (!h.fwd || !h.inv) throw std::invalid_argument("commutator_path: h must carry an inverse");
  auto fwd = [t, h, A](const EquatorPoint& y) {
    return A.apply_inverse(t, h.fwd(A.apply(t, h.inv(y))));
  };
  auto inv = [t, h, A](const EquatorPoint& y) {
    return h.fwd(A.apply_inverse(t, h.inv(A.apply(t, y))));
  };
  return {fwd, inv};
}

SphereMap commutator_homotopy(double s, double t, const SphereMap& h, const RotationPath& A) {
  const double u = s + t - s * t;
  const double v = 1.0 - s + t * s;
  auto fwd = [u, v, h, A](const EquatorPoint& y) {
    EquatorPoint z = A.apply(v, y);
    z = h.inv(z);
    z = A.apply_inverse(v, z);
    z = equator_antipode(z);
    z = A.apply(u, z);
    z = h.fwd(z);
    z = A.apply_inverse(u, z);
    return equator_antipode(z);
  };
  return {fwd, nullptr};
}

}  // namespace exinv
