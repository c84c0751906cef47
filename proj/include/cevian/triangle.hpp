#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "cevian/errors.hpp"
#include "cevian/scalar.hpp"

namespace cevian {

/// Ordered vertex triple (a0, a1, a2) in the complex plane. Labels matter:
/// operators act on the triple as a column vector.
template <Scalar S>
struct Triple {
  std::array<S, 3> v{};

  Triple() = default;
  Triple(S a0, S a1, S a2) : v{std::move(a0), std::move(a1), std::move(a2)} {}

  S& operator[](std::size_t k) { return v[k]; }
  const S& operator[](std::size_t k) const { return v[k]; }

  friend bool operator==(const Triple& a, const Triple& b) { return a.v == b.v; }
};

inline std::size_t mod3(long k) { return static_cast<std::size_t>(((k % 3) + 3) % 3); }

/// J^k applied to the triple; k = 1 gives (a1, a2, a0).
template <Scalar S>
Triple<S> j_apply(const Triple<S>& d, long k) {
  const std::size_t s = mod3(k);
  return {d[s], d[(s + 1) % 3], d[(s + 2) % 3]};
}

template <Scalar S>
S centroid(const Triple<S>& d) {
  return (d[0] + d[1] + d[2]) / rational<S>(3);
}

/// (a0, a2, a1)
template <Scalar S>
Triple<S> swap_last(const Triple<S>& d) {
  return {d[0], d[2], d[1]};
}

/// Vertex-wise z -> lambda z + nu.
template <Scalar S>
Triple<S> affine_map(const Triple<S>& d, const S& lambda, const S& nu) {
  return {lambda * d[0] + nu, lambda * d[1] + nu, lambda * d[2] + nu};
}

/// Vertex-wise real affine map z -> lambda z + mu conj(z) + nu.
template <Scalar S>
Triple<S> real_affine_map(const Triple<S>& d, const S& lambda, const S& mu, const S& nu) {
  Triple<S> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = lambda * d[k] + mu * conj(d[k]) + nu;
  }
  return out;
}

template <Scalar S>
Triple<Approx> downcast(const Triple<S>& d) {
  return {downcast(d[0]), downcast(d[1]), downcast(d[2])};
}

enum class TriangleClass { TripleCollision, DoubleCollision, DegenerateDistinct, NonDegenerate };

/// Twice the signed cross product Im((a1 - a0) conj(a2 - a0)) is the
/// collinearity witness used by classify.
template <Scalar S>
S collinearity_witness(const Triple<S>& d) {
  const S u = d[1] - d[0];
  const S w = d[2] - d[0];
  return u * conj(w);
}

inline double max_spread(const Triple<Approx>& d) {
  return std::max({(d[0] - d[1]).abs(), (d[1] - d[2]).abs(), (d[2] - d[0]).abs()});
}

inline TriangleClass classify(const Triple<Cyc12>& d) {
  const bool e01 = d[0] == d[1];
  const bool e12 = d[1] == d[2];
  const bool e20 = d[2] == d[0];
  if (e01 && e12) {
    return TriangleClass::TripleCollision;
  }
  if (e01 || e12 || e20) {
    return TriangleClass::DoubleCollision;
  }
  if (collinearity_witness(d).imag_part().is_zero()) {
    return TriangleClass::DegenerateDistinct;
  }
  return TriangleClass::NonDegenerate;
}

/// Collisions are judged relative to the largest side (1e-9 * spread) and
/// collinearity relative to spread^2.
inline TriangleClass classify(const Triple<Approx>& d) {
  const double spread = max_spread(d);
  const double magnitude = std::max({d[0].abs(), d[1].abs(), d[2].abs()});
  if (spread <= 1e-12 * (1.0 + magnitude)) {
    return TriangleClass::TripleCollision;
  }
  const double tol = 1e-9 * spread;
  if ((d[0] - d[1]).abs() <= tol || (d[1] - d[2]).abs() <= tol || (d[2] - d[0]).abs() <= tol) {
    return TriangleClass::DoubleCollision;
  }
  if (std::abs(collinearity_witness(d).im()) <= 1e-9 * spread * spread) {
    return TriangleClass::DegenerateDistinct;
  }
  return TriangleClass::NonDegenerate;
}

/// Im((a0 - a1) / (a2 - a1)) > 0, evaluated as the sign of
/// Im((a0 - a1) conj(a2 - a1)).
template <Scalar S>
bool orientation_positive(const Triple<S>& d) {
  if (classify(d) != TriangleClass::NonDegenerate) {
    throw DegenerateInput("orientation of a degenerate triangle");
  }
  const S x = (d[0] - d[1]) * conj(d[2] - d[1]);
  if constexpr (scalar_traits<S>::exact) {
    return x.imag_part().real_sign() > 0;
  } else {
    return x.im() > 0;
  }
}

/// (|a1 - a2|^2, |a2 - a0|^2, |a0 - a1|^2); exact on either backend's field.
template <Scalar S>
std::array<S, 3> squared_side_lengths(const Triple<S>& d) {
  auto sq = [](const S& z) { return z * conj(z); };
  return {sq(d[1] - d[2]), sq(d[2] - d[0]), sq(d[0] - d[1])};
}

/// (|a1 - a2|, |a2 - a0|, |a0 - a1|)
inline std::array<double, 3> side_lengths(const Triple<Approx>& d) {
  return {(d[1] - d[2]).abs(), (d[2] - d[0]).abs(), (d[0] - d[1]).abs()};
}

/// Shoelace area 1/2 Im(conj(a0) a1 + conj(a1) a2 + conj(a2) a0).
inline double signed_area(const Triple<Approx>& d) {
  const Approx s = d[0].conj() * d[1] + d[1].conj() * d[2] + d[2].conj() * d[0];
  return 0.5 * s.im();
}

}  // namespace cevian
