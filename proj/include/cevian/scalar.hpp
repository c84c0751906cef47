#pragma once

#include <concepts>

#include "cevian/approx.hpp"
#include "cevian/cyc12.hpp"

namespace cevian {

/// Per-backend constants and field operations shared by the geometry code.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Cyc12> {
  static constexpr bool exact = true;
  static Cyc12 zero() { return 0; }
  static Cyc12 one() { return 1; }
  static Cyc12 omega() { return Cyc12::omega(); }
  static Cyc12 omega_pow(long k) { return Cyc12::omega_pow(k); }
  static Cyc12 rho() { return Cyc12::rho(); }
  static Cyc12 imag_unit() { return Cyc12::imag_unit(); }
  static Cyc12 from_rational(const Rational& r) { return r; }
  static Cyc12 conj(const Cyc12& a) { return a.conj(); }
  static bool is_zero(const Cyc12& a) { return a.is_zero(); }
};

template <>
struct scalar_traits<Approx> {
  static constexpr bool exact = false;
  static Approx zero() { return 0.0; }
  static Approx one() { return 1.0; }
  static Approx omega() { return Approx::omega(); }
  static Approx omega_pow(long k) { return Approx::omega_pow(k); }
  static Approx rho() { return Approx::rho(); }
  static Approx imag_unit() { return Approx::imag_unit(); }
  static Approx from_rational(const Rational& r) { return r.to_double(); }
  static Approx conj(const Approx& a) { return a.conj(); }
  static bool is_zero(const Approx& a) { return a.is_zero(); }
};

template <typename S>
concept Scalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { scalar_traits<S>::zero() } -> std::convertible_to<S>;
  { scalar_traits<S>::omega() } -> std::convertible_to<S>;
  { scalar_traits<S>::conj(a) } -> std::convertible_to<S>;
  { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Scalar S>
S rational(long num, long den = 1) {
  return scalar_traits<S>::from_rational(Rational(num, den));
}

template <Scalar S>
S conj(const S& a) {
  return scalar_traits<S>::conj(a);
}

template <Scalar S>
bool is_zero(const S& a) {
  return scalar_traits<S>::is_zero(a);
}

/// Ring homomorphism Q(zeta12) -> C.
inline Approx downcast(const Cyc12& a) { return a.to_complex(); }
inline Approx downcast(const Approx& a) { return a; }

}  // namespace cevian
