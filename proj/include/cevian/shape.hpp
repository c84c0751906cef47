#pragma once

#include <cstdint>
#include <string>

#include "cevian/operator.hpp"
#include "cevian/report.hpp"

namespace cevian {

template <Scalar S>
struct FourierTriple {
  S psi0;
  S psi1;
  S psi2;
  friend bool operator==(const FourierTriple&, const FourierTriple&) = default;
};

/// (1/3)(a+b+c, a + b w^2 + c w, a + b w + c w^2); psi0 is the centroid.
template <Scalar S>
FourierTriple<S> fourier(const Triple<S>& d) {
  const S third = rational<S>(1, 3);
  const S w = scalar_traits<S>::omega();
  const S w2 = w * w;
  return {third * (d[0] + d[1] + d[2]), third * (d[0] + d[1] * w2 + d[2] * w),
          third * (d[0] + d[1] * w + d[2] * w2)};
}

/// a_k = psi0 + psi1 w^k + psi2 w^{2k}
template <Scalar S>
Triple<S> inverse_fourier(const FourierTriple<S>& f) {
  const S w = scalar_traits<S>::omega();
  const S w2 = w * w;
  return {f.psi0 + f.psi1 + f.psi2, f.psi0 + f.psi1 * w + f.psi2 * w2, f.psi0 + f.psi1 * w2 + f.psi2 * w};
}

/// Point num/den of the projective line; den = 0 is infinity. Equality is
/// cross-multiplication, so 0 and infinity need no special cases.
template <Scalar S>
struct ShapePoint {
  S num;
  S den;

  bool is_infinity() const { return is_zero(den); }
  bool is_zero_point() const { return is_zero(num); }

  /// Finite value num/den; throws DivisionByZero at infinity.
  S value() const { return num / den; }

  ShapePoint cubed() const { return {num * num * num, den * den * den}; }
  ShapePoint inverse() const { return {den, num}; }

  friend ShapePoint operator*(const ShapePoint& a, const ShapePoint& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend ShapePoint operator*(const S& k, const ShapePoint& a) { return {k * a.num, a.den}; }
};

inline bool operator==(const ShapePoint<Cyc12>& a, const ShapePoint<Cyc12>& b) {
  return a.num * b.den == b.num * a.den;
}

/// Cross-multiplied comparison relative to the size of both products.
inline bool approx_equal(const ShapePoint<Approx>& a, const ShapePoint<Approx>& b, double tol) {
  const Approx l = a.num * b.den;
  const Approx r = b.num * a.den;
  return (l - r).abs() <= tol * std::max({1e-300, l.abs(), r.abs()});
}

std::string to_string(const ShapePoint<Cyc12>& p);
std::string to_string(const ShapePoint<Approx>& p);

/// psi2 / psi1 as a point of the projective line.
template <Scalar S>
ShapePoint<S> shape(const Triple<S>& d) {
  const FourierTriple<S> f = fourier(d);
  if (is_zero(f.psi1) && is_zero(f.psi2)) {
    throw TripleCollision();
  }
  return {f.psi2, f.psi1};
}

template <Scalar S>
ShapePoint<S> shape_cubed(const Triple<S>& d) {
  return shape(d).cubed();
}

/// circ applied after an optional swap_last.
template <Scalar S>
struct ExtOp {
  bool pre_swap = false;
  CircOp<S> circ = CircOp<S>::identity();

  Triple<S> operator()(const Triple<S>& d) const { return circ(pre_swap ? swap_last(d) : d); }
  friend bool operator==(const ExtOp&, const ExtOp&) = default;
};

/// Conjugation by swap_last: (alpha, beta, gamma) -> (alpha, gamma, beta).
template <Scalar S>
CircOp<S> swap_conjugate(const CircOp<S>& op) {
  return CircOp<S>(op.alpha(), op.gamma(), op.beta());
}

/// a o b
template <Scalar S>
ExtOp<S> compose(const ExtOp<S>& a, const ExtOp<S>& b) {
  const CircOp<S> moved = a.pre_swap ? swap_conjugate(b.circ) : b.circ;
  return {a.pre_swap != b.pre_swap, compose(a.circ, moved)};
}

template <Scalar S>
ExtOp<S> extend(const CircOp<S>& op) {
  return {false, op};
}

/// H_s = S[s + w, s + w^2], defined for every s.
template <Scalar S>
CircOp<S> hajja(const S& s) {
  const S w = scalar_traits<S>::omega();
  return from_eta(EtaPair<S>{s + w, s + w * w});
}

/// C_s: swap_last, then S[s + w^2, s + w]. Sends (psi2, psi1) to
/// ((s + w^2) psi1, (s + w) psi2).
template <Scalar S>
ExtOp<S> ceva(const S& s) {
  const S w = scalar_traits<S>::omega();
  return {true, from_eta(EtaPair<S>{s + w * w, s + w})};
}

/// (s + w) / (s + w^2); throws PoleAtRho at s = rho.
template <Scalar S>
S xi(const S& s) {
  const S w = scalar_traits<S>::omega();
  const S den = s + w * w;
  if (is_zero(den)) {
    throw PoleAtRho();
  }
  return (s + w) / den;
}

/// Inverse of xi: the s with xi(s) = value (value != 1).
template <Scalar S>
S xi_preimage(const S& value) {
  const S w = scalar_traits<S>::omega();
  const S one = rational<S>(1);
  if (is_zero(one - value)) {
    throw InvalidArgument("xi never takes the value 1 at finite s");
  }
  return (value * w * w - w) / (one - value);
}

/// Same oriented shape up to relabelling: psi^3 agree.
inline bool dr_similar(const Triple<Cyc12>& a, const Triple<Cyc12>& b) {
  return shape_cubed(a) == shape_cubed(b);
}

/// Reversed orientation: psi(a)^3 psi(b)^3 = 1, cross-multiplied (so 0 and
/// infinity pair up).
inline bool rv_similar(const Triple<Cyc12>& a, const Triple<Cyc12>& b) {
  const ShapePoint<Cyc12> p = shape_cubed(a) * shape_cubed(b);
  return p.num == p.den;
}

inline bool dr_similar(const Triple<Approx>& a, const Triple<Approx>& b, double tol = 1e-9) {
  return approx_equal(shape_cubed(a), shape_cubed(b), tol);
}

inline bool rv_similar(const Triple<Approx>& a, const Triple<Approx>& b, double tol = 1e-9) {
  return approx_equal(shape_cubed(a), shape_cubed(b).inverse(), tol);
}

/// Action of an operator on the (psi2, psi1) components, read off by
/// applying it to a triple and transforming back.
template <typename Op, Scalar S>
std::pair<S, S> reduced_action(const Op& op, const S& psi2, const S& psi1) {
  const Triple<S> d = inverse_fourier(FourierTriple<S>{rational<S>(0), psi1, psi2});
  const FourierTriple<S> f = fourier(op(d));
  return {f.psi2, f.psi1};
}

/// Hajja operator against its median, (p, q) and coefficient forms at
/// `count` random rational s, plus the removable singularities s = -3, 3/2.
SuiteReport hajja_suite(std::uint64_t seed, std::size_t count);

/// The six shape relations between Hajja and binary Ceva operators at
/// `count` random rational parameters and exact triples.
SuiteReport bclift_suite(std::uint64_t seed, std::size_t count);

}  // namespace cevian
