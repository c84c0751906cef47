#include "cevian/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "cevian/errors.hpp"

namespace cevian {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

namespace {

mpz_class parse_digits(std::string_view digits, std::size_t offset) {
  if (digits.empty()) {
    throw ParseError("expected digits", offset);
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("unexpected character in number", offset + i);
    }
  }
  return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  mpq_class value;

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_digits(body.substr(0, slash), pos);
    mpz_class den = parse_digits(body.substr(slash + 1), pos + slash + 1);
    if (den == 0) {
      throw DivisionByZero("rational literal with zero denominator");
    }
    value = mpq_class(num, den);
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
        exp_negative = exp_text[0] == '-';
        exp_text.remove_prefix(1);
      }
      mpz_class ez = parse_digits(exp_text, pos + e + 1);
      if (ez > 4096) {
        throw ParseError("exponent too large", pos + e + 1);
      }
      exponent = ez.get_si() * (exp_negative ? -1 : 1);
    }
    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
      fraction_digits = static_cast<long>(mantissa.size() - dot - 1);
    } else {
      digits = std::string(mantissa);
    }
    mpz_class num = parse_digits(digits, pos);
    const long shift = exponent - fraction_digits;
    if (shift >= 0) {
      value = mpq_class(num * pow10(static_cast<unsigned long>(shift)));
    } else {
      value = mpq_class(num, pow10(static_cast<unsigned long>(-shift)));
    }
  }
  value.canonicalize();
  if (negative) {
    value = -value;
  }
  return Rational(value);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw NonFinite("cannot convert non-finite double to rational");
  }
  return Rational(mpq_class(value));
}

std::string Rational::numerator_string() const { return q_.get_num().get_str(); }

std::string Rational::denominator_string() const { return q_.get_den().get_str(); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

std::string Rational::to_string() const {
  if (is_integer()) {
    return numerator_string();
  }
  return numerator_string() + "/" + denominator_string();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw DivisionByZero();
  }
  return Rational(mpq_class(1) / q_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw DivisionByZero();
  }
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cevian
