#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cevian/median.hpp"
#include "cevian/report.hpp"
#include "cevian/shape.hpp"

namespace cevian {

/// t -> sum_k c_k exp(2 pi i k t), period 1.
class TrigPoly {
 public:
  using Coeffs = std::map<int, std::complex<double>>;

  TrigPoly() = default;
  TrigPoly(Coeffs coeffs);  // NOLINT(google-explicit-constructor)
  TrigPoly(std::initializer_list<Coeffs::value_type> terms) : TrigPoly(Coeffs(terms)) {}

  static TrigPoly constant(std::complex<double> c) { return TrigPoly(Coeffs{{0, c}}); }
  static TrigPoly monomial(int k, std::complex<double> c = 1.0) { return TrigPoly(Coeffs{{k, c}}); }

  const Coeffs& coeffs() const { return coeffs_; }
  std::complex<double> coeff(int k) const;

  /// Frequencies whose coefficient is not negligible (1e-12 relative to
  /// the largest coefficient).
  std::vector<int> support() const;

  std::complex<double> operator()(double t) const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(std::complex<double> k, const TrigPoly& a);

 private:
  Coeffs coeffs_;  // zero coefficients are dropped
};

std::complex<double> eval_poly(const TrigPoly& p, double t);

/// c_k -> c_k w^{k mod 3}, i.e. t -> p(t + 1/3).
TrigPoly shift_third(const TrigPoly& p);

enum class TracingClass { Ascending, Descending, NotTracing };

const char* to_string(TracingClass c);

/// Delta(t) = S[eta(t), eta'(t)](base) or M^{label}[eta(t), eta'(t)](base).
struct OrbitFamily {
  std::optional<MedianLabel> median;  // empty for the cevian kind
  TrigPoly eta;
  TrigPoly eta_prime;
  Triple<Approx> base;

  EtaPair<Approx> parameters(double t) const;
  Triple<Approx> at(double t) const;
};

struct OrbitSample {
  double t;
  Triple<Approx> triple;
};

/// Frequency residues of the parameters: ascending needs eta in 2 mod 3 and
/// eta' in 1 mod 3, descending the reverse. Median families are tested on
/// eta - w^{x-w} and eta' - w^{w-x}.
TracingClass tracing_class(const OrbitFamily& f);

/// n samples at t = j/n.
std::vector<OrbitSample> sample(const OrbitFamily& f, std::size_t n);

/// max_j |J Delta(t_j) - Delta(t_j +- 1/3)| (+ for ascending).
double verify_tracing(const std::vector<OrbitSample>& samples, TracingClass order);

/// Smallest vertex distance over all samples.
double collision_report(const std::vector<OrbitSample>& samples);

/// Largest deviation of any vertex from the Steiner circumellipse of
/// (0, 1, u + vi).
double steiner_residual(double u, double v, const std::vector<OrbitSample>& samples);

struct Figure8Residuals {
  double curve;   // max |X^2 - (3/16) X^4 - Y^2| over all vertices
  double vertex;  // max |a0(t) - ((4/3)sqrt3 cos 2 pi t + i (2/3)sqrt3 sin 4 pi t)|
};

Figure8Residuals figure8_check(const std::vector<OrbitSample>& samples);

/// Per-sample shape psi and psi^3.
struct ShapeSample {
  double t;
  ShapePoint<Approx> psi;
  ShapePoint<Approx> psi_cubed;
};

std::vector<ShapeSample> shape_trace(const std::vector<OrbitSample>& samples);

/// S[exp(2 pi i m t), exp(2 pi i n t)](base)
OrbitFamily single_frequency_family(int m, int n, const Triple<Approx>& base);

/// S[exp(-2 pi i t), exp(2 pi i t)] on (0, 1, u + vi)
OrbitFamily steiner_family(double u = 0.7, double v = 0.5);

/// S[-2e(t) + e(-2t), 2e(-t) + e(2t)] on (0, i, -i), e(k) = exp(2 pi i k)
OrbitFamily figure8_family();

/// M^{01/01} with the figure-eight parameters shifted by (w, w^2), on (0, 4, 3 + i)
OrbitFamily median_figure8_family();

/// M^{0x/01}[exp(2 pi i m t) + w^x, exp(2 pi i n t) + w^-x] on (0, 1, 0.7 + 0.5i)
OrbitFamily median_orbit_family(long x, int m = -5, int n = 2);

/// Cevian family whose shape curve is gamma: with xi = gamma/gamma(0),
/// eta = exp(2 pi i eps t) xi mu, eta' = exp(2 pi i eps t) mu, base
/// inverse_fourier(0, 1, gamma(0)). Throws BadGamma unless
/// gamma(t + 1/3) = w^eps gamma(t) and gamma(0) != 0; BadGauge unless mu has
/// only frequencies divisible by 3 and no zero on a 768-point grid.
OrbitFamily lift_shape_curve(const TrigPoly& gamma, int eps, const TrigPoly& mu = TrigPoly::constant(1.0));

/// Single-frequency families over coprime |m|, |n| <= max_freq: classifier
/// against the residue law and against the numeric tracing check.
SuiteReport tracing_suite(int max_freq = 10, std::size_t grid = 300);

}  // namespace cevian
