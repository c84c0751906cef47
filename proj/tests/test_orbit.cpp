#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cevian/orbit.hpp"
#include "cevian/random.hpp"

using namespace cevian;

namespace {

using cd = std::complex<double>;

const cd kOmega = Approx::omega().value();
const Triple<Approx> kBase{0.0, 1.0, Approx(0.7, 0.5)};

double dist(const Approx& a, const Approx& b) { return (a - b).abs(); }

OrbitFamily cevian_family(TrigPoly eta, TrigPoly eta_prime, Triple<Approx> base = kBase) {
  return OrbitFamily{std::nullopt, std::move(eta), std::move(eta_prime), base};
}

TrigPoly random_poly(ExactSampler& rng) {
  TrigPoly::Coeffs c;
  const long terms = rng.integer(1, 4);
  for (long k = 0; k < terms; ++k) {
    c[static_cast<int>(rng.integer(-6, 6))] = cd(rng.real(-2, 2), rng.real(-2, 2));
  }
  return c;
}

}  // namespace

TEST(TrigPoly, Evaluation) {
  EXPECT_EQ(eval_poly(TrigPoly::constant(5.0), 0.37), cd(5.0));
  EXPECT_NEAR(std::abs(eval_poly(TrigPoly{{1, 1.0}}, 0.25) - cd(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_poly(TrigPoly{{1, -2.0}, {-2, 1.0}}, 0.0) - cd(-1.0)), 0.0, 1e-15);
}

TEST(TrigPoly, DropsZerosAndSupport) {
  const TrigPoly p{{1, 0.0}, {2, 3.0}, {4, 1e-20}};
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(p.support(), std::vector<int>{2});
  EXPECT_EQ(p.coeff(7), cd(0.0));
}

TEST(TrigPoly, ShiftThirdExamples) {
  EXPECT_NEAR(std::abs(shift_third(TrigPoly{{1, 1.0}}).coeff(1) - kOmega), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(shift_third(TrigPoly{{-2, 1.0}}).coeff(-2) - kOmega), 0.0, 1e-15);
  EXPECT_EQ(shift_third(TrigPoly{{3, 2.0}}).coeff(3), cd(2.0));
}

TEST(TrigPoly, ShiftThirdMatchesEvaluation) {
  ExactSampler rng(61);
  for (int n = 0; n < 50; ++n) {
    const TrigPoly p = random_poly(rng);
    const TrigPoly q = shift_third(p);
    for (int j = 0; j < 20; ++j) {
      const double t = rng.real(-3, 3);
      ASSERT_NEAR(std::abs(eval_poly(q, t) - eval_poly(p, t + 1.0 / 3.0)), 0.0, 1e-12);
    }
  }
}

TEST(TrigPoly, ShiftThirdOnThousandPoints) {
  ExactSampler rng(62);
  const TrigPoly p{{1, -2.0}, {-2, 1.0}, {5, cd(0.3, -1.1)}, {0, 2.5}};
  const TrigPoly q = shift_third(p);
  for (int j = 0; j < 1000; ++j) {
    const double t = rng.real(0, 1);
    ASSERT_NEAR(std::abs(eval_poly(q, t) - eval_poly(p, t + 1.0 / 3.0)), 0.0, 1e-12);
  }
}

TEST(TrigPoly, Arithmetic) {
  const TrigPoly a{{1, 2.0}}, b{{-1, 3.0}, {0, 1.0}};
  const TrigPoly prod = a * b;
  EXPECT_EQ(prod.coeff(0), cd(6.0));
  EXPECT_EQ(prod.coeff(1), cd(2.0));
  EXPECT_EQ((a + b).coeff(1), cd(2.0));
  EXPECT_EQ((cd(0, 1) * a).coeff(1), cd(0, 2));
}

TEST(Tracing, ClassifierExamples) {
  EXPECT_EQ(tracing_class(single_frequency_family(-1, 1, kBase)), TracingClass::Ascending);
  EXPECT_EQ(tracing_class(figure8_family()), TracingClass::Descending);
  EXPECT_EQ(tracing_class(single_frequency_family(1, 1, kBase)), TracingClass::NotTracing);
  EXPECT_EQ(tracing_class(single_frequency_family(1, 2, kBase)), TracingClass::Descending);
  EXPECT_EQ(tracing_class(steiner_family()), TracingClass::Ascending);
  EXPECT_STREQ(to_string(TracingClass::NotTracing), "not-tracing");
}

TEST(Tracing, MedianFamiliesUseShiftedParameters) {
  EXPECT_EQ(tracing_class(median_figure8_family()), TracingClass::Descending);
  // shifted eta has the single frequency -5 = 1 (mod 3)
  for (long x = 0; x < 3; ++x) {
    EXPECT_EQ(tracing_class(median_orbit_family(x)), TracingClass::Descending);
  }
  // same polynomials without the constant shift do not trace as a median family
  OrbitFamily f = figure8_family();
  f.median = MedianLabel::parse("01/01");
  EXPECT_EQ(tracing_class(f), TracingClass::NotTracing);
}

TEST(Tracing, NumericCheck) {
  const auto steiner = sample(steiner_family(), 300);
  EXPECT_LE(verify_tracing(steiner, TracingClass::Ascending), 1e-10);
  const auto eight = sample(figure8_family(), 300);
  EXPECT_LE(verify_tracing(eight, TracingClass::Descending), 1e-10);
  const auto loose = sample(single_frequency_family(1, 1, kBase), 300);
  EXPECT_GT(verify_tracing(loose, TracingClass::Ascending), 0.1);
  EXPECT_GT(verify_tracing(loose, TracingClass::Descending), 0.1);
  const auto median8 = sample(median_figure8_family(), 300);
  EXPECT_LE(verify_tracing(median8, TracingClass::Descending), 1e-10);
  EXPECT_THROW(verify_tracing(sample(steiner_family(), 100), TracingClass::Ascending), GridNotDivisibleBy3);
}

TEST(Tracing, AscendingVertexRelations) {
  const std::size_t n = 300;
  const auto s = sample(steiner_family(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& now = s[j].triple;
    ASSERT_LE(dist(now[0], s[(j + n / 3) % n].triple[2]), 1e-10);
    ASSERT_LE(dist(now[0], s[(j + 2 * n / 3) % n].triple[1]), 1e-10);
  }
  const OrbitFamily f = steiner_family();
  for (int k = 0; k < 10; ++k) {
    const double t = 0.1 * k;
    ASSERT_LE(dist(f.at(t)[0], f.at(t + 1.0)[0]), 1e-10);
  }
}

TEST(Tracing, SuiteOverSmallFrequencies) {
  const SuiteReport r = tracing_suite(4, 300);
  for (const auto& c : r.results) EXPECT_TRUE(c.passed()) << c.name << ": " << c.first_failure;
}

TEST(Sample, Examples) {
  const auto fixed = sample(cevian_family(TrigPoly::constant(1.0), TrigPoly::constant(1.0)), 7);
  ASSERT_EQ(fixed.size(), 7u);
  for (std::size_t j = 0; j < fixed.size(); ++j) {
    EXPECT_DOUBLE_EQ(fixed[j].t, static_cast<double>(j) / 7.0);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_LE(dist(fixed[j].triple[k], kBase[k]), 1e-15);
  }
  const auto st = sample(steiner_family(), 12);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LE(dist(st[0].triple[k], kBase[k]), 1e-15);
  const auto eight = sample(figure8_family(), 12);
  EXPECT_LE(dist(eight[0].triple[0], Approx(4.0 * std::sqrt(3.0) / 3.0)), 1e-12);
  EXPECT_THROW(sample(steiner_family(), 2), InvalidArgument);
}

// Changing x multiplies the shifted parameters by w^-x and w^x, which is the
// time shift t -> t + 2x/3 for frequencies (-5, 2): same orbit, relabelled clock.
TEST(Sample, MedianOrbitIndependentOfX) {
  const std::size_t n = 90;
  const auto a = sample(median_orbit_family(0), n);
  for (long x = 1; x < 3; ++x) {
    const auto b = sample(median_orbit_family(x), n);
    const std::size_t shift = static_cast<std::size_t>(x) * 2 * n / 3;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < 3; ++k) ASSERT_LE(dist(a[(j + shift) % n].triple[k], b[j].triple[k]), 1e-12);
    }
  }
}

TEST(Collision, Report) {
  const Triple<Approx> eq{1.0, Approx::omega(), Approx::omega() * Approx::omega()};
  const auto still = sample(cevian_family(TrigPoly::constant(1.0), TrigPoly::constant(1.0), eq), 9);
  EXPECT_NEAR(collision_report(still), std::sqrt(3.0), 1e-12);
  EXPECT_GT(collision_report(sample(figure8_family(), 1000)), 1e-3);
  const auto collapsed = sample(cevian_family(TrigPoly::constant(0.0), TrigPoly::constant(0.0)), 9);
  EXPECT_LE(collision_report(collapsed), 1e-12);
}

TEST(Steiner, Residual) {
  EXPECT_LE(steiner_residual(0.7, 0.5, sample(steiner_family(0.7, 0.5), 1000)), 1e-9);
  const double h = std::sqrt(3.0) / 2.0;
  EXPECT_LE(steiner_residual(0.5, h, sample(steiner_family(0.5, h), 1000)), 1e-9);
  // (1,-1) runs the same ellipse backwards: psi1 e^{it} + psi2 e^{-it} is the (-1,1) curve at -t
  EXPECT_LE(steiner_residual(0.7, 0.5, sample(single_frequency_family(1, -1, kBase), 1000)), 1e-9);
  EXPECT_GT(steiner_residual(0.7, 0.5, sample(single_frequency_family(-1, 2, kBase), 1000)), 1e-3);
}

TEST(FigureEight, CurveAndClosedForm) {
  const auto s = sample(figure8_family(), 1000);
  const Figure8Residuals r = figure8_check(s);
  EXPECT_LE(r.curve, 1e-9);
  EXPECT_LE(r.vertex, 1e-9);
  EXPECT_LE(figure8_family().at(0.25)[0].abs(), 1e-12);
}

TEST(AreaPreservation, UnitSingleFrequencyFamilies) {
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      const auto s = sample(single_frequency_family(m, n, kBase), 120);
      const double a0 = std::abs(signed_area(s[0].triple));
      for (const auto& x : s) ASSERT_NEAR(std::abs(signed_area(x.triple)), a0, 1e-9);
    }
  }
}

TEST(ShapeTrace, Examples) {
  const auto st = shape_trace(sample(steiner_family(), 60));
  const double r0 = st[0].psi.value().abs();
  for (const auto& x : st) ASSERT_NEAR(x.psi.value().abs(), r0, 1e-9);
  const auto eight = shape_trace(sample(figure8_family(), 300));
  const Approx ratio = eight[100].psi.value() / eight[0].psi.value();
  EXPECT_TRUE(approx_equal(ratio, Approx::omega() * Approx::omega(), 1e-9));
  const auto asc = shape_trace(sample(steiner_family(), 300));
  EXPECT_TRUE(approx_equal(asc[100].psi.value() / asc[0].psi.value(), Approx::omega(), 1e-9));
  const auto eq = shape_trace(sample(steiner_family(0.5, std::sqrt(3.0) / 2.0), 30));
  for (const auto& x : eq) ASSERT_LE(x.psi.value().abs(), 1e-12);
}

TEST(Lift, SingleFrequencyShapeCurve) {
  const cd c(0.4, -1.3);
  const OrbitFamily f = lift_shape_curve(TrigPoly{{1, c}}, 1);
  EXPECT_EQ(f.eta.support(), std::vector<int>{2});
  EXPECT_EQ(f.eta_prime.support(), std::vector<int>{1});
  EXPECT_EQ(tracing_class(f), TracingClass::Ascending);
  const auto trace = shape_trace(sample(f, 90));
  for (const auto& x : trace) {
    ASSERT_TRUE(approx_equal(x.psi.value(), Approx(c * std::exp(cd(0, 2 * std::numbers::pi * x.t))), 1e-9));
  }
}

TEST(Lift, GaugeFreedom) {
  const TrigPoly gamma{{-2, cd(1.0, 0.5)}, {4, 0.3}, {1, cd(0, -0.2)}};
  const auto plain = shape_trace(sample(lift_shape_curve(gamma, 1), 120));
  const auto gauged = shape_trace(sample(lift_shape_curve(gamma, 1, TrigPoly{{0, 2.0}, {3, 0.5}, {-6, cd(0, 0.4)}}), 120));
  for (std::size_t j = 0; j < plain.size(); ++j) {
    ASSERT_TRUE(approx_equal(plain[j].psi.value(), gauged[j].psi.value(), 1e-9));
    ASSERT_TRUE(approx_equal(plain[j].psi.value(), Approx(gamma(plain[j].t)), 1e-9));
  }
}

TEST(Lift, DescendingShapeCurves) {
  const TrigPoly gamma{{2, 1.0}, {-1, cd(0.2, 0.1)}};
  const OrbitFamily f = lift_shape_curve(gamma, -1);
  EXPECT_EQ(tracing_class(f), TracingClass::Descending);
  EXPECT_LE(verify_tracing(sample(f, 300), TracingClass::Descending), 1e-10);
}

TEST(Lift, RejectsBadInput) {
  EXPECT_THROW(lift_shape_curve(TrigPoly{{2, 1.0}}, 1), BadGamma);
  EXPECT_THROW(lift_shape_curve(TrigPoly{{1, 1.0}, {-2, -1.0}}, 1), BadGamma);
  EXPECT_THROW(lift_shape_curve(TrigPoly{{1, 1.0}}, 1, TrigPoly{{1, 1.0}}), BadGauge);
  EXPECT_THROW(lift_shape_curve(TrigPoly{{1, 1.0}}, 1, TrigPoly{{0, 1.0}, {3, 1.0}}), BadGauge);
  EXPECT_THROW(lift_shape_curve(TrigPoly{{1, 1.0}}, 2), InvalidArgument);
}
