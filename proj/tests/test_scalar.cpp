#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cevian/random.hpp"
#include "cevian/scalar.hpp"

using namespace cevian;

namespace {

const Cyc12 w = Cyc12::omega();
const Cyc12 i = Cyc12::imag_unit();
const Cyc12 z = Cyc12::zeta();

bool close(const Approx& a, const Approx& b, double tol = 1e-12) { return approx_equal(a, b, tol); }

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational a(6, -4);
  EXPECT_EQ(a.numerator_string(), "-3");
  EXPECT_EQ(a.denominator_string(), "2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(0, 7).denominator_string(), "1");
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, ParseDecimals) {
  EXPECT_EQ(Rational::parse("0.7"), Rational(7, 10));
  EXPECT_EQ(Rational::parse("-12/18"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("1.5e2"), Rational(150));
  EXPECT_EQ(Rational::parse("25e-3"), Rational(1, 40));
}

TEST(Rational, GrowsPastMachineWords) {
  Rational r(1);
  for (int k = 0; k < 40; ++k) r *= Rational(1000003, 999983);
  Rational back = r;
  for (int k = 0; k < 40; ++k) back /= Rational(1000003, 999983);
  EXPECT_EQ(back, Rational(1));
  EXPECT_GT(r.numerator_string().size(), 200u);
}

TEST(Cyc12, Constants) {
  EXPECT_EQ(w * w * w, Cyc12(1));
  EXPECT_EQ(w * w + w + Cyc12(1), Cyc12(0));
  EXPECT_EQ(i * i, Cyc12(-1));
  EXPECT_EQ(Cyc12::rho(), Cyc12(1) + w);
  EXPECT_EQ(w, z * z - Cyc12(1));
  EXPECT_EQ(i, z * z * z);
  EXPECT_EQ(Cyc12::rho(), z * z);
  EXPECT_EQ(z * z * z * z, z * z - Cyc12(1));
  EXPECT_EQ(Cyc12::sqrt3() * Cyc12::sqrt3(), Cyc12(3));
}

TEST(Cyc12, MultiplicationExamples) {
  EXPECT_EQ((Cyc12(2) - w) * (Cyc12(2) - w * w), Cyc12(7));
}

TEST(Cyc12, InverseExamples) {
  EXPECT_EQ(Cyc12(1).inverse(), Cyc12(1));
  EXPECT_EQ(w.inverse(), w * w);
  EXPECT_EQ((Cyc12(2) - w).inverse(), (Cyc12(2) - w * w) / Cyc12(7));
  EXPECT_THROW(Cyc12(0).inverse(), DivisionByZero);
  EXPECT_THROW(Cyc12(1) / Cyc12(0), DivisionByZero);
}

TEST(Cyc12, ConjugationExamples) {
  EXPECT_EQ(i.conj(), -i);
  EXPECT_EQ(w.conj(), w * w);
  EXPECT_EQ(z * z.conj(), Cyc12(1));
  EXPECT_EQ(z.conj(), z.inverse());
  EXPECT_EQ(Cyc12(Rational(3, 7)).conj(), Cyc12(Rational(3, 7)));
}

TEST(Cyc12, RealAndImaginaryParts) {
  const Cyc12 a = Cyc12::gaussian(Rational(7, 10), Rational(-8, 3));
  EXPECT_EQ(a.real_part(), Cyc12(Rational(7, 10)));
  EXPECT_EQ(a.imag_part(), Cyc12(Rational(-8, 3)));
  EXPECT_EQ(w.imag_part() * w.imag_part(), Cyc12(Rational(3, 4)));
  EXPECT_EQ(Cyc12::sqrt3().real_sign(), 1);
  EXPECT_EQ((Cyc12(1) - Cyc12::sqrt3()).real_sign(), -1);
  EXPECT_EQ((Cyc12(Rational(17, 10)) - Cyc12::sqrt3()).real_sign(), -1);
  EXPECT_EQ((Cyc12(Rational(7, 4)) - Cyc12::sqrt3()).real_sign(), 1);
}

TEST(Cyc12, TextRoundTrip) {
  const Cyc12 a(Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7));
  EXPECT_EQ(a.to_string(), "1/2 - 3*z + 5/7*z^3");
  EXPECT_EQ(Cyc12(0).to_string(), "0");
  EXPECT_EQ(Cyc12::gaussian(Rational(93, 3050), Rational(542, 1525)).to_pretty_string(), "93/3050 + 542/1525*i");
}

TEST(Cyc12, DowncastExamples) {
  EXPECT_TRUE(close(downcast(Cyc12(1)), Approx(1.0, 0.0)));
  EXPECT_TRUE(close(downcast(i), Approx(0.0, 1.0)));
  EXPECT_TRUE(close(downcast(w), Approx(-0.5, 0.8660254037844386)));
  EXPECT_TRUE(close(downcast(z), Approx(std::cos(std::numbers::pi / 6), std::sin(std::numbers::pi / 6))));
}

TEST(Cyc12Property, FieldAxioms) {
  ExactSampler rng(20240611);
  for (int n = 0; n < 1000; ++n) {
    const Cyc12 a = rng.cyc12(), b = rng.cyc12(), c = rng.cyc12();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) - b, a);
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Cyc12(1));
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

TEST(Cyc12Property, ConjugationIsInvolutiveAutomorphism) {
  ExactSampler rng(7);
  for (int n = 0; n < 1000; ++n) {
    const Cyc12 a = rng.cyc12(), b = rng.cyc12();
    ASSERT_EQ(a.conj().conj(), a);
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
    ASSERT_TRUE(a.norm_sq().imag_part().is_zero());
  }
}

TEST(Cyc12Property, DowncastIsHomomorphism) {
  ExactSampler rng(99);
  for (int n = 0; n < 1000; ++n) {
    const Cyc12 a = rng.cyc12(), b = rng.cyc12();
    ASSERT_TRUE(close(downcast(a * b), downcast(a) * downcast(b)));
    ASSERT_TRUE(close(downcast(a + b), downcast(a) + downcast(b)));
    ASSERT_TRUE(close(downcast(a.conj()), downcast(a).conj()));
    if (!a.is_zero()) {
      ASSERT_TRUE(close(downcast(a.inverse()), downcast(a).inverse()));
    }
  }
}

TEST(Cyc12Property, DowncastMatchesCoordinateSum) {
  ExactSampler rng(5);
  for (int n = 0; n < 200; ++n) {
    const Cyc12 a = rng.cyc12();
    std::complex<double> sum;
    for (std::size_t k = 0; k < 4; ++k) {
      sum += a.coeff(k).to_double() * std::polar(1.0, static_cast<double>(k) * std::numbers::pi / 6.0);
    }
    ASSERT_TRUE(close(downcast(a), Approx(sum)));
  }
}

TEST(Approx, DivisionByZeroSignals) {
  EXPECT_THROW(Approx(1.0) / Approx(0.0), DivisionByZero);
  EXPECT_THROW(Approx(0.0).inverse(), DivisionByZero);
}

TEST(Approx, Constants) {
  const Approx aw = Approx::omega();
  EXPECT_TRUE(close(aw * aw * aw, Approx(1.0)));
  EXPECT_TRUE(close(Approx::rho(), Approx(1.0) + aw));
  EXPECT_TRUE(close(Approx::omega_pow(-1), aw * aw));
  EXPECT_TRUE(close(Approx::polar_unit(0.25), Approx(0.0, 1.0)));
}
