#include "cevian/orbit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace cevian {

namespace {

using cplx = std::complex<double>;

/// exp(2 pi i x), with x reduced to [0, 1) first so large frequencies keep
/// their accuracy.
cplx unit(double x) {
  x -= std::floor(x);
  return std::polar(1.0, 2.0 * std::numbers::pi * x);
}

cplx omega_pow(long k) { return Approx::omega_pow(k).value(); }

double max_abs(const TrigPoly::Coeffs& c) {
  double m = 0.0;
  for (const auto& [k, v] : c) m = std::max(m, std::abs(v));
  return m;
}

bool residues_are(const TrigPoly& p, long residue) {
  for (int k : p.support()) {
    if (static_cast<long>(mod3(k)) != residue) return false;
  }
  return true;
}

double vertex_distance(const Triple<Approx>& a, const Triple<Approx>& b) {
  return std::max({(a[0] - b[0]).abs(), (a[1] - b[1]).abs(), (a[2] - b[2]).abs()});
}

}  // namespace

TrigPoly::TrigPoly(Coeffs coeffs) {
  for (const auto& [k, c] : coeffs) {
    if (c != cplx(0.0, 0.0)) coeffs_[k] = c;
  }
}

cplx TrigPoly::coeff(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
}

std::vector<int> TrigPoly::support() const {
  const double tol = 1e-12 * std::max(1.0, max_abs(coeffs_));
  std::vector<int> out;
  for (const auto& [k, c] : coeffs_) {
    if (std::abs(c) > tol) out.push_back(k);
  }
  return out;
}

cplx TrigPoly::operator()(double t) const {
  cplx sum(0.0, 0.0);
  for (const auto& [k, c] : coeffs_) sum += c * unit(static_cast<double>(k) * t);
  return sum;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly::Coeffs c = a.coeffs_;
  for (const auto& [k, v] : b.coeffs_) c[k] += v;
  return TrigPoly(c);
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly::Coeffs c;
  for (const auto& [i, u] : a.coeffs_) {
    for (const auto& [j, v] : b.coeffs_) c[i + j] += u * v;
  }
  return TrigPoly(c);
}

TrigPoly operator*(cplx k, const TrigPoly& a) {
  TrigPoly::Coeffs c;
  for (const auto& [i, u] : a.coeffs_) c[i] = k * u;
  return TrigPoly(c);
}

cplx eval_poly(const TrigPoly& p, double t) { return p(t); }

TrigPoly shift_third(const TrigPoly& p) {
  TrigPoly::Coeffs c;
  for (const auto& [k, v] : p.coeffs()) c[k] = v * omega_pow(k);
  return TrigPoly(c);
}

const char* to_string(TracingClass c) {
  switch (c) {
    case TracingClass::Ascending:
      return "ascending";
    case TracingClass::Descending:
      return "descending";
    case TracingClass::NotTracing:
      break;
  }
  return "not-tracing";
}

EtaPair<Approx> OrbitFamily::parameters(double t) const { return {Approx(eta(t)), Approx(eta_prime(t))}; }

Triple<Approx> OrbitFamily::at(double t) const {
  const EtaPair<Approx> e = parameters(t);
  return median ? median_apply(*median, e, base) : from_eta(e)(base);
}

TracingClass tracing_class(const OrbitFamily& f) {
  TrigPoly eta = f.eta;
  TrigPoly eta_prime = f.eta_prime;
  if (f.median) {
    const long d = f.median->x() - f.median->w();
    eta = eta + TrigPoly::constant(-omega_pow(d));
    eta_prime = eta_prime + TrigPoly::constant(-omega_pow(-d));
  }
  // with both polynomials zero the conditions hold vacuously; report ascending
  if (residues_are(eta, 2) && residues_are(eta_prime, 1)) return TracingClass::Ascending;
  if (residues_are(eta, 1) && residues_are(eta_prime, 2)) return TracingClass::Descending;
  return TracingClass::NotTracing;
}

std::vector<OrbitSample> sample(const OrbitFamily& f, std::size_t n) {
  if (n < 3) {
    throw InvalidArgument("need at least 3 samples");
  }
  std::vector<OrbitSample> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    out.push_back({t, f.at(t)});
  }
  return out;
}

double verify_tracing(const std::vector<OrbitSample>& samples, TracingClass order) {
  const std::size_t n = samples.size();
  if (n == 0 || n % 3 != 0) {
    throw GridNotDivisibleBy3();
  }
  if (order == TracingClass::NotTracing) {
    throw InvalidArgument("tracing order must be ascending or descending");
  }
  const std::size_t step = order == TracingClass::Ascending ? n / 3 : 2 * n / 3;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Triple<Approx> rotated = j_apply(samples[j].triple, 1);
    worst = std::max(worst, vertex_distance(rotated, samples[(j + step) % n].triple));
  }
  return worst;
}

double collision_report(const std::vector<OrbitSample>& samples) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    const auto sides = side_lengths(s.triple);
    best = std::min({best, sides[0], sides[1], sides[2]});
  }
  return best;
}

double steiner_residual(double u, double v, const std::vector<OrbitSample>& samples) {
  const double cx = (1.0 + u) / 3.0;
  const double cy = v / 3.0;
  double worst = 0.0;
  for (const auto& s : samples) {
    for (std::size_t k = 0; k < 3; ++k) {
      const double x = s.triple[k].re() - cx;
      const double y = s.triple[k].im() - cy;
      const double lhs = v * v * x * x + (v - 2.0 * u * v) * x * y + (1.0 - u + u * u) * y * y;
      worst = std::max(worst, std::abs(lhs - v * v / 3.0));
    }
  }
  return worst;
}

Figure8Residuals figure8_check(const std::vector<OrbitSample>& samples) {
  const double r3 = std::sqrt(3.0);
  Figure8Residuals res{0.0, 0.0};
  for (const auto& s : samples) {
    for (std::size_t k = 0; k < 3; ++k) {
      const double x = s.triple[k].re();
      const double y = s.triple[k].im();
      res.curve = std::max(res.curve, std::abs(x * x - 3.0 / 16.0 * x * x * x * x - y * y));
    }
    const double c = std::cos(2.0 * std::numbers::pi * s.t);
    const double sn = std::sin(4.0 * std::numbers::pi * s.t);
    const Approx expected(4.0 / 3.0 * r3 * c, 2.0 / 3.0 * r3 * sn);
    res.vertex = std::max(res.vertex, (s.triple[0] - expected).abs());
  }
  return res;
}

std::vector<ShapeSample> shape_trace(const std::vector<OrbitSample>& samples) {
  std::vector<ShapeSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    const ShapePoint<Approx> psi = shape(s.triple);
    out.push_back({s.t, psi, psi.cubed()});
  }
  return out;
}

OrbitFamily single_frequency_family(int m, int n, const Triple<Approx>& base) {
  return {std::nullopt, TrigPoly::monomial(m), TrigPoly::monomial(n), base};
}

OrbitFamily steiner_family(double u, double v) {
  return single_frequency_family(-1, 1, Triple<Approx>{0.0, 1.0, Approx(u, v)});
}

OrbitFamily figure8_family() {
  return {std::nullopt, TrigPoly{{1, -2.0}, {-2, 1.0}}, TrigPoly{{-1, 2.0}, {2, 1.0}},
          Triple<Approx>{0.0, Approx(0.0, 1.0), Approx(0.0, -1.0)}};
}

OrbitFamily median_figure8_family() {
  return {MedianLabel(0, 1, 0, 1), TrigPoly{{1, -2.0}, {-2, 1.0}, {0, omega_pow(1)}},
          TrigPoly{{-1, 2.0}, {2, 1.0}, {0, omega_pow(2)}}, Triple<Approx>{0.0, 4.0, Approx(3.0, 1.0)}};
}

OrbitFamily median_orbit_family(long x, int m, int n) {
  return {MedianLabel(0, x, 0, 1), TrigPoly{{m, 1.0}, {0, omega_pow(x)}}, TrigPoly{{n, 1.0}, {0, omega_pow(-x)}},
          Triple<Approx>{0.0, 1.0, Approx(0.7, 0.5)}};
}

OrbitFamily lift_shape_curve(const TrigPoly& gamma, int eps, const TrigPoly& mu) {
  if (eps != 1 && eps != -1) {
    throw InvalidArgument("eps must be +1 or -1");
  }
  if (!residues_are(gamma, static_cast<long>(mod3(eps)))) {
    throw BadGamma("gamma(t + 1/3) != w^eps gamma(t)");
  }
  const cplx g0 = gamma(0.0);
  if (std::abs(g0) <= 1e-12 * std::max(1.0, max_abs(gamma.coeffs()))) {
    throw BadGamma("gamma(0) = 0");
  }
  for (int k : mu.support()) {
    if (k % 3 != 0) {
      throw BadGauge("gauge has frequency " + std::to_string(k) + ", not divisible by 3");
    }
  }
  if (mu.support().empty()) {
    throw BadGauge("gauge is identically zero");
  }
  constexpr int kGrid = 768;
  const double floor = 1e-12 * std::max(1.0, max_abs(mu.coeffs()));
  for (int j = 0; j < kGrid; ++j) {
    if (std::abs(mu(static_cast<double>(j) / kGrid)) <= floor) {
      throw BadGauge("gauge vanishes on the sample grid");
    }
  }
  const TrigPoly carrier = TrigPoly::monomial(eps);
  const TrigPoly eta = (1.0 / g0) * (carrier * gamma * mu);
  const TrigPoly eta_prime = carrier * mu;
  const Triple<Approx> base = inverse_fourier(FourierTriple<Approx>{0.0, 1.0, Approx(g0)});
  return {std::nullopt, eta, eta_prime, base};
}

SuiteReport tracing_suite(int max_freq, std::size_t grid) {
  SuiteReport report{"tracing", {}};
  auto& law = report.add("classifier matches the residue law");
  auto& numeric = report.add("classifier matches the numeric tracing check");
  const Triple<Approx> base{0.0, 1.0, Approx(0.7, 0.5)};
  constexpr double kTol = 1e-10;
  for (int m = -max_freq; m <= max_freq; ++m) {
    for (int n = -max_freq; n <= max_freq; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const std::string ctx = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
      const OrbitFamily f = single_frequency_family(m, n, base);
      const TracingClass c = tracing_class(f);
      TracingClass expected = TracingClass::NotTracing;
      if (mod3(m + n) == 0) {
        expected = mod3(m) == 2 ? TracingClass::Ascending : TracingClass::Descending;
      }
      law.record(c == expected, ctx);

      const auto samples = sample(f, grid);
      const double up = verify_tracing(samples, TracingClass::Ascending);
      const double down = verify_tracing(samples, TracingClass::Descending);
      bool ok = false;
      switch (c) {
        case TracingClass::Ascending:
          ok = up <= kTol;
          break;
        case TracingClass::Descending:
          ok = down <= kTol;
          break;
        case TracingClass::NotTracing:
          ok = up > kTol && down > kTol;
          break;
      }
      numeric.record(ok, ctx + " (residuals " + std::to_string(up) + ", " + std::to_string(down) + ")");
    }
  }
  return report;
}

}  // namespace cevian
