#include "cevian/cyc12.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

#include "cevian/errors.hpp"

namespace cevian {

Cyc12 Cyc12::omega_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return 1;
    case 1:
      return omega();
    default:
      return {0, 0, -1, 0};
  }
}

bool Cyc12::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

bool Cyc12::is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

// zeta^-1 = zeta - zeta^3, zeta^-2 = 1 - zeta^2, zeta^-3 = -zeta^3.
Cyc12 Cyc12::conj() const {
  return {c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]};
}

Cyc12 operator*(const Cyc12& a, const Cyc12& b) {
  std::array<Rational, 7> d{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < 4; ++j) {
      if (!b.c_[j].is_zero()) {
        d[i + j] += a.c_[i] * b.c_[j];
      }
    }
  }
  // zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta, zeta^6 = -1
  return {d[0] - d[4] - d[6], d[1] - d[5], d[2] + d[4], d[3] + d[5]};
}

Cyc12& Cyc12::operator*=(const Cyc12& o) {
  *this = *this * o;
  return *this;
}

Cyc12 Cyc12::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Cyc12& Cyc12::operator+=(const Cyc12& o) {
  for (std::size_t k = 0; k < 4; ++k) {
    c_[k] += o.c_[k];
  }
  return *this;
}

Cyc12& Cyc12::operator-=(const Cyc12& o) {
  for (std::size_t k = 0; k < 4; ++k) {
    c_[k] -= o.c_[k];
  }
  return *this;
}

Cyc12 Cyc12::inverse() const {
  if (is_zero()) {
    throw DivisionByZero("inverse of zero in Q(zeta12)");
  }
  // Column j of m holds the coordinates of this * zeta^j; solve m x = e0.
  std::array<std::array<Rational, 5>, 4> m{};
  Cyc12 column = *this;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t r = 0; r < 4; ++r) {
      m[r][j] = column.c_[r];
    }
    column *= zeta();
  }
  m[0][4] = 1;

  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && m[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == 4) {
      // Multiplication by a nonzero field element is injective.
      throw DivisionByZero("singular multiplication map");
    }
    std::swap(m[pivot], m[col]);
    const Rational inv = m[col][col].inverse();
    for (std::size_t k = col; k < 5; ++k) {
      m[col][k] *= inv;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) {
        continue;
      }
      const Rational f = m[r][col];
      for (std::size_t k = col; k < 5; ++k) {
        m[r][k] -= f * m[col][k];
      }
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

Cyc12 Cyc12::real_part() const { return (*this + conj()) * Cyc12(Rational(1, 2)); }

Cyc12 Cyc12::imag_part() const {
  return (*this - conj()) * Cyc12(0, 0, 0, Rational(-1, 2));
}

int Cyc12::real_sign() const {
  if (!(conj() == *this)) {
    throw InvalidArgument("real_sign of a non-real element");
  }
  // A real element is c0 - c3*sqrt(3).
  const Rational& a = c_[0];
  const Rational b = -c_[3];
  if (b.is_zero()) {
    return a.sign();
  }
  if (a.is_zero() || a.sign() == b.sign()) {
    return b.sign();
  }
  return (a * a > Rational(3) * b * b) ? a.sign() : b.sign();
}

std::complex<double> Cyc12::to_complex() const {
  const double h = std::sqrt(3.0) / 2.0;
  const double c0 = c_[0].to_double();
  const double c1 = c_[1].to_double();
  const double c2 = c_[2].to_double();
  const double c3 = c_[3].to_double();
  return {c0 + c1 * h + c2 * 0.5, c1 * 0.5 + c2 * h + c3};
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, const char* unit) {
  if (c.is_zero()) {
    return;
  }
  const bool negative = c.sign() < 0;
  const Rational mag = c.abs();
  if (first) {
    os << (negative ? "-" : "");
  } else {
    os << (negative ? " - " : " + ");
  }
  first = false;
  if (unit[0] == '\0') {
    os << mag;
  } else if (mag == Rational(1)) {
    os << unit;
  } else {
    os << mag << '*' << unit;
  }
}

}  // namespace

std::string Cyc12::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, c_[0], "");
  append_term(os, first, c_[1], "z");
  append_term(os, first, c_[2], "z^2");
  append_term(os, first, c_[3], "z^3");
  return first ? "0" : os.str();
}

std::string Cyc12::to_pretty_string() const {
  std::ostringstream os;
  bool first = true;
  if (c_[1].is_zero() && c_[2].is_zero()) {
    append_term(os, first, c_[0], "");
    append_term(os, first, c_[3], "i");
    return first ? "0" : os.str();
  }
  if (c_[1].is_zero() && c_[3].is_zero()) {
    // c0 + c2 zeta^2 = (c0 + c2) + c2 omega
    append_term(os, first, c_[0] + c_[2], "");
    append_term(os, first, c_[2], "w");
    return first ? "0" : os.str();
  }
  return to_string();
}

std::ostream& operator<<(std::ostream& os, const Cyc12& a) { return os << a.to_string(); }

}  // namespace cevian
