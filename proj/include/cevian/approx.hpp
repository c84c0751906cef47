#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <string>

namespace cevian {

/// Double-precision complex scalar. Division by zero and any non-finite
/// result raise instead of producing NaN/Inf.
class Approx {
 public:
  Approx() = default;
  Approx(double re, double im = 0.0) : z_(re, im) {}  // NOLINT(google-explicit-constructor)
  Approx(std::complex<double> z) : z_(z) {}  // NOLINT(google-explicit-constructor)

  static Approx omega() { return {-0.5, std::sqrt(3.0) / 2.0}; }
  static Approx rho() { return {0.5, std::sqrt(3.0) / 2.0}; }
  static Approx imag_unit() { return {0.0, 1.0}; }
  static Approx omega_pow(long k);
  static Approx polar_unit(double turns);  // exp(2*pi*i*turns)

  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  std::complex<double> value() const { return z_; }
  double abs() const { return std::abs(z_); }
  Approx conj() const { return std::conj(z_); }
  bool is_zero() const { return z_ == std::complex<double>(0.0, 0.0); }
  Approx inverse() const;

  std::string to_string() const;

  Approx operator-() const { return -z_; }
  Approx& operator+=(const Approx& o);
  Approx& operator-=(const Approx& o);
  Approx& operator*=(const Approx& o);
  Approx& operator/=(const Approx& o);

  friend Approx operator+(Approx a, const Approx& b) { return a += b; }
  friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
  friend Approx operator*(Approx a, const Approx& b) { return a *= b; }
  friend Approx operator/(Approx a, const Approx& b) { return a /= b; }
  friend bool operator==(const Approx& a, const Approx& b) { return a.z_ == b.z_; }

 private:
  std::complex<double> z_{};
};

std::ostream& operator<<(std::ostream& os, const Approx& a);

/// |a - b| <= tol * max(1, |a|, |b|)
inline bool approx_equal(const Approx& a, const Approx& b, double tol) {
  const double scale = std::max({1.0, a.abs(), b.abs()});
  return (a - b).abs() <= tol * scale;
}

}  // namespace cevian
