#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include "cevian/rational.hpp"

namespace cevian {

/// Exact element of the cyclotomic field Q(zeta), zeta = exp(i*pi/6).
///
/// Stored on the power basis {1, zeta, zeta^2, zeta^3}; products are reduced
/// with the minimal polynomial zeta^4 = zeta^2 - 1. The field holds
/// omega = zeta^2 - 1, rho = zeta^2, i = zeta^3 and sqrt(3) = 2 zeta - zeta^3.
class Cyc12 {
 public:
  Cyc12() = default;
  Cyc12(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyc12(long n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyc12(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyc12 zeta() { return {0, 1, 0, 0}; }
  static Cyc12 omega() { return {-1, 0, 1, 0}; }
  static Cyc12 rho() { return {0, 0, 1, 0}; }
  static Cyc12 imag_unit() { return {0, 0, 0, 1}; }
  static Cyc12 sqrt3() { return {0, 2, 0, -1}; }

  /// Integer power of omega; k is reduced mod 3.
  static Cyc12 omega_pow(long k);

  /// a + b*i with rational a, b.
  static Cyc12 gaussian(const Rational& re, const Rational& im) { return {re, 0, 0, im}; }

  const Rational& coeff(std::size_t k) const { return c_[k]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  /// Image under zeta -> zeta^{-1} (complex conjugation).
  Cyc12 conj() const;

  /// Multiplicative inverse, found by solving the 4x4 system of x -> a*x.
  Cyc12 inverse() const;

  Cyc12 real_part() const;
  Cyc12 imag_part() const;

  /// Squared modulus a*conj(a); lies in the real subfield.
  Cyc12 norm_sq() const { return *this * conj(); }

  /// Exact sign of a real element (throws InvalidArgument if not real).
  int real_sign() const;

  std::complex<double> to_complex() const;

  /// Power-basis text "c0 + c1*z + c2*z^2 + c3*z^3", zero terms omitted.
  std::string to_string() const;

  /// "a + b*i" when the element lies in Q(i), "a + b*w" in Q(omega),
  /// otherwise the power-basis form.
  std::string to_pretty_string() const;

  Cyc12 operator-() const;
  Cyc12& operator+=(const Cyc12& o);
  Cyc12& operator-=(const Cyc12& o);
  Cyc12& operator*=(const Cyc12& o);
  Cyc12& operator/=(const Cyc12& o) { return *this *= o.inverse(); }

  friend Cyc12 operator+(Cyc12 a, const Cyc12& b) { return a += b; }
  friend Cyc12 operator-(Cyc12 a, const Cyc12& b) { return a -= b; }
  friend Cyc12 operator*(const Cyc12& a, const Cyc12& b);
  friend Cyc12 operator/(Cyc12 a, const Cyc12& b) { return a /= b; }
  friend bool operator==(const Cyc12& a, const Cyc12& b) { return a.c_ == b.c_; }

 private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Cyc12& a);

}  // namespace cevian
