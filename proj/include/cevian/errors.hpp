#pragma once

#include <stdexcept>
#include <string>

namespace cevian {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CEVIAN_DEFINE_ERROR(Name, Default)                            \
  class Name : public Error {                                         \
   public:                                                            \
    Name() : Error(Default) {}                                        \
    explicit Name(const std::string& what) : Error(what) {}           \
  }

CEVIAN_DEFINE_ERROR(DivisionByZero, "division by zero");
CEVIAN_DEFINE_ERROR(NonFinite, "non-finite floating point result");
CEVIAN_DEFINE_ERROR(InvalidOperator, "operator coefficients must sum to 1");
CEVIAN_DEFINE_ERROR(InvalidPQ, "invalid (p,q): p*q = 1");
CEVIAN_DEFINE_ERROR(SingularParameter, "(eta,eta') lies on a pole of the (p,q) chart");
CEVIAN_DEFINE_ERROR(NotInvertible, "operator is not invertible (eta*eta' = 0)");
CEVIAN_DEFINE_ERROR(DegenerateInput, "triangle is degenerate");
CEVIAN_DEFINE_ERROR(TripleCollision, "triangle has a triple collision");
CEVIAN_DEFINE_ERROR(InconsistentSystem, "median constraints do not close up");
CEVIAN_DEFINE_ERROR(InvalidLabel, "invalid median label");
CEVIAN_DEFINE_ERROR(PoleAtRho, "xi(s) has a pole at s = rho");
CEVIAN_DEFINE_ERROR(GridNotDivisibleBy3, "sample count must be divisible by 3");
CEVIAN_DEFINE_ERROR(BadGamma, "shape curve violates gamma(t+1/3) = omega^eps gamma(t) or gamma(0) in {0, inf}");
CEVIAN_DEFINE_ERROR(BadGauge, "gauge mu must have period 1/3 and no zeros");
CEVIAN_DEFINE_ERROR(InvalidArgument, "invalid argument");

#undef CEVIAN_DEFINE_ERROR

/// Parse failure with the byte offset into the input where it was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cevian
