#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "exinv/algebra.hpp"

namespace exinv {

/// xoshiro256++ seeded through splitmix64. Self-contained so that a fixed seed
/// reproduces the identical stream everywhere; this determinism is part of the
/// public contract of every sampling routine built on top of it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (own implementation, stream-stable).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return m * std::cos(2.0 * kPi * u2);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  static std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Derives an independent per-case seed from a base seed and a label, so that
/// adding or reordering cases never shifts another case's sample stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  std::uint64_t s = seed ^ h;
  return Rng::splitmix(s);
}

/// Uniform unit-norm element of the requested algebra.
inline AlgebraElement sample_unit(Rng& rng, Algebra a) {
  for (;;) {
    if (a == Algebra::quaternion) {
      Quaternion q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
      const double n = norm(q);
      if (n > 1e-6) return (1.0 / n) * q;
    } else {
      Octonion o{{rng.normal(), rng.normal(), rng.normal(), rng.normal()},
                 {rng.normal(), rng.normal(), rng.normal(), rng.normal()}};
      const double n = norm(o);
      if (n > 1e-6) return (1.0 / n) * o;
    }
  }
}

/// Normalized random real combination of {1, p, w, pw}; every output lies in
/// the associative subalgebra generated by p and w.
inline AlgebraElement subalgebra_sample(const AlgebraElement& p, const AlgebraElement& w, Rng& rng) {
  if (norm(p) <= 0.0 || norm(w) <= 0.0)
    throw std::invalid_argument("subalgebra_sample: p and w must be nonzero");
  const AlgebraElement pw = p * w;
  const AlgebraElement id = one(algebra_of(p));
  for (;;) {
    AlgebraElement e = rng.normal() * id + rng.normal() * p + rng.normal() * w + rng.normal() * pw;
    const double n = norm(e);
    if (n > 1e-6) return (1.0 / n) * e;
  }
}

inline double halton_radical_inverse(std::uint64_t index, int base) {
  double f = 1.0, result = 0.0;
  while (index > 0) {
    f /= base;
    result += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return result;
}

/// Halton sequence in [0,1)^d with a seed-derived Cranley-Patterson rotation,
/// so distinct seeds give distinct but fully deterministic quasi-random scans.
class HaltonSampler {
 public:
  HaltonSampler(int dims, std::uint64_t seed) : dims_(dims), shift_(dims) {
    static constexpr int primes[16] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    if (dims < 1 || dims > 16) throw std::invalid_argument("HaltonSampler: 1..16 dims supported");
    Rng rng(seed);
    for (int i = 0; i < dims; ++i) {
      bases_.push_back(primes[i]);
      shift_[i] = rng.uniform();
    }
    index_ = 16 + (seed % 64);  // skip the degenerate initial points
  }

  void next(std::span<double> out) {
    for (int i = 0; i < dims_; ++i) {
      double v = halton_radical_inverse(index_, bases_[i]) + shift_[i];
      out[i] = v - std::floor(v);
    }
    ++index_;
  }

 private:
  int dims_;
  std::vector<int> bases_;
  std::vector<double> shift_;
  std::uint64_t index_;
};

}  // namespace exinv
