#include "cevian/approx.hpp"

#include <cstdio>
#include <numbers>
#include <ostream>

#include "cevian/errors.hpp"

namespace cevian {

namespace {

std::complex<double> checked(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NonFinite();
  }
  return z;
}

}  // namespace

Approx Approx::omega_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return 1.0;
    case 1:
      return omega();
    default:
      return omega().conj();
  }
}

Approx Approx::polar_unit(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

Approx Approx::inverse() const { return Approx(1.0) / *this; }

Approx& Approx::operator+=(const Approx& o) {
  z_ = checked(z_ + o.z_);
  return *this;
}

Approx& Approx::operator-=(const Approx& o) {
  z_ = checked(z_ - o.z_);
  return *this;
}

Approx& Approx::operator*=(const Approx& o) {
  z_ = checked(z_ * o.z_);
  return *this;
}

Approx& Approx::operator/=(const Approx& o) {
  if (o.is_zero()) {
    throw DivisionByZero();
  }
  z_ = checked(z_ / o.z_);
  return *this;
}

std::string Approx::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", re(), im());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Approx& a) { return os << a.to_string(); }

}  // namespace cevian
