#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <variant>

#include "exinv/octonion.hpp"
#include "exinv/quaternion.hpp"

namespace exinv {

enum class Algebra { quaternion, cayley };

/// Uniform scalar for the code paths that run over both algebras. Operations
/// on two elements require matching algebras and throw otherwise.
using AlgebraElement = std::variant<Quaternion, Octonion>;

inline Algebra algebra_of(const AlgebraElement& e) {
  return std::holds_alternative<Quaternion>(e) ? Algebra::quaternion : Algebra::cayley;
}

inline int pure_dim(Algebra a) { return a == Algebra::quaternion ? 3 : 7; }

inline const Quaternion& as_quat(const AlgebraElement& e) {
  if (const auto* q = std::get_if<Quaternion>(&e)) return *q;
  throw std::invalid_argument("expected a quaternion element");
}

inline const Octonion& as_oct(const AlgebraElement& e) {
  if (const auto* o = std::get_if<Octonion>(&e)) return *o;
  throw std::invalid_argument("expected a Cayley element");
}

inline AlgebraElement real_elem(Algebra a, double v) {
  if (a == Algebra::quaternion) return Quaternion::real(v);
  return Octonion::real(v);
}

inline AlgebraElement one(Algebra a) { return real_elem(a, 1.0); }
inline AlgebraElement zero_elem(Algebra a) { return real_elem(a, 0.0); }

namespace detail {

template <class F>
auto unary(const AlgebraElement& e, F f) {
  return std::visit([&](const auto& v) -> AlgebraElement { return f(v); }, e);
}

template <class F>
auto binary(const AlgebraElement& a, const AlgebraElement& b, F f) {
  if (a.index() != b.index()) throw std::invalid_argument("algebra mismatch");
  if (const auto* qa = std::get_if<Quaternion>(&a))
    return AlgebraElement{f(*qa, std::get<Quaternion>(b))};
  return AlgebraElement{f(std::get<Octonion>(a), std::get<Octonion>(b))};
}

}  // namespace detail

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return detail::binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return detail::binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

inline AlgebraElement operator-(const AlgebraElement& e) {
  return detail::unary(e, [](const auto& v) { return -v; });
}

inline AlgebraElement operator*(double s, const AlgebraElement& e) {
  return detail::unary(e, [&](const auto& v) { return s * v; });
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return detail::binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

inline AlgebraElement conj(const AlgebraElement& e) {
  return detail::unary(e, [](const auto& v) { return conj(v); });
}

inline double re_part(const AlgebraElement& e) {
  if (const auto* q = std::get_if<Quaternion>(&e)) return q->r;
  return std::get<Octonion>(e).lo.r;
}

inline AlgebraElement im_part(const AlgebraElement& e) {
  return detail::unary(e, [](const auto& v) {
    auto out = v;
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Quaternion>)
      out.r = 0.0;
    else
      out.lo.r = 0.0;
    return out;
  });
}

inline double norm2(const AlgebraElement& e) {
  return std::visit([](const auto& v) { return norm2(v); }, e);
}

inline double norm(const AlgebraElement& e) { return std::sqrt(norm2(e)); }

inline double dist(const AlgebraElement& a, const AlgebraElement& b) { return norm(a - b); }

inline AlgebraElement inverse(const AlgebraElement& e) {
  return detail::unary(e, [](const auto& v) { return inverse(v); });
}

inline bool is_pure(const AlgebraElement& e, double tol = 1e-10) {
  return std::abs(re_part(e)) <= tol;
}

inline AlgebraElement exp_pure(const AlgebraElement& p, double t, double purity_tol = 1e-10) {
  return detail::unary(p, [&](const auto& v) { return exp_pure(v, t, purity_tol); });
}

inline AlgebraElement conj_action(const AlgebraElement& q, const AlgebraElement& x) {
  return detail::binary(q, x, [](const auto& a, const auto& b) { return conj_action(a, b); });
}

/// Coefficients on the imaginary basis; only the first pure_dim() entries are
/// meaningful for quaternions.
inline std::array<double, 7> pure_coords(const AlgebraElement& e) {
  if (const auto* q = std::get_if<Quaternion>(&e)) return {q->x, q->y, q->z, 0, 0, 0, 0};
  return im_coords(std::get<Octonion>(e));
}

inline AlgebraElement pure_from_coords(Algebra a, const std::array<double, 7>& c) {
  if (a == Algebra::quaternion) return Quaternion{0.0, c[0], c[1], c[2]};
  return from_im_coords(c);
}

}  // namespace exinv
