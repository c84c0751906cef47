#include "cevian/random.hpp"

namespace cevian {

long ExactSampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational ExactSampler::rational(long max_num, long max_den) {
  const long num = integer(-max_num, max_num);
  const long den = integer(1, max_den);
  return Rational(num, den);
}

Rational ExactSampler::nonzero_rational(long max_num, long max_den) {
  Rational r;
  do {
    r = rational(max_num, max_den);
  } while (r.is_zero());
  return r;
}

Cyc12 ExactSampler::cyc12(long max_num, long max_den) {
  Rational c0 = rational(max_num, max_den);
  Rational c1 = rational(max_num, max_den);
  Rational c2 = rational(max_num, max_den);
  Rational c3 = rational(max_num, max_den);
  return {c0, c1, c2, c3};
}

Cyc12 ExactSampler::nonzero_cyc12(long max_num, long max_den) {
  Cyc12 a;
  do {
    a = cyc12(max_num, max_den);
  } while (a.is_zero());
  return a;
}

Triple<Cyc12> ExactSampler::triple(long max_num, long max_den) {
  Cyc12 a0 = cyc12(max_num, max_den);
  Cyc12 a1 = cyc12(max_num, max_den);
  Cyc12 a2 = cyc12(max_num, max_den);
  return {a0, a1, a2};
}

double ExactSampler::real(double lo, double hi) {
  // 53 random mantissa bits
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace cevian
