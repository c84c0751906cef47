#pragma once

#include <cstdint>
#include <random>

#include "cevian/cyc12.hpp"
#include "cevian/triangle.hpp"

namespace cevian {

/// Deterministic draws built only on mt19937_64's raw output, so sequences
/// are identical across standard library implementations.
class ExactSampler {
 public:
  explicit ExactSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num = 9, long max_den = 6);
  Rational nonzero_rational(long max_num = 9, long max_den = 6);
  /// Element with four independent random rational coordinates.
  Cyc12 cyc12(long max_num = 9, long max_den = 6);
  Cyc12 nonzero_cyc12(long max_num = 9, long max_den = 6);
  Triple<Cyc12> triple(long max_num = 9, long max_den = 6);
  /// Uniform double in [lo, hi).
  double real(double lo, double hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cevian
