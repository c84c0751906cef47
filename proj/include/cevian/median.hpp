#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cevian/operator.hpp"
#include "cevian/report.hpp"

namespace cevian {

/// Label wx/yz of a generalized median operator: the vector from a_{w+k}
/// to a'_{x+k} becomes the side from a''_{y+k} to a''_{z+k}. Requires y != z.
class MedianLabel {
 public:
  MedianLabel(long w, long x, long y, long z);

  /// Accepts "wx/yz" with digits 0-2, e.g. "02/01".
  static MedianLabel parse(std::string_view text);

  /// The 54 labels of (Z/3)^4 with y != z.
  static std::vector<MedianLabel> all();
  /// The 18 labels with w = 0 (one per shift class).
  static std::vector<MedianLabel> representatives();

  long w() const { return w_; }
  long x() const { return x_; }
  long y() const { return y_; }
  long z() const { return z_; }

  /// Adds (dw, dx, dy, dz) componentwise mod 3.
  MedianLabel shifted(long dw, long dx, long dy, long dz) const;
  MedianLabel swapped_yz() const { return {w_, x_, z_, y_}; }

  std::string to_string() const;
  friend bool operator==(const MedianLabel&, const MedianLabel&) = default;

 private:
  long w_, x_, y_, z_;
};

/// Fourier parameters of the median operator:
/// eta0 = (eta w^-x - w^-w) / (w^-z - w^-y), eta1 = (eta' w^x - w^w) / (w^z - w^y).
template <Scalar S>
EtaPair<S> median_eta(const MedianLabel& label, const EtaPair<S>& e) {
  auto wp = [](long k) { return scalar_traits<S>::omega_pow(k); };
  const S eta0 = (e.eta * wp(-label.x()) - wp(-label.w())) / (wp(-label.z()) - wp(-label.y()));
  const S eta1 = (e.eta_prime * wp(label.x()) - wp(label.w())) / (wp(label.z()) - wp(label.y()));
  return {eta0, eta1};
}

template <Scalar S>
CircOp<S> median_op(const MedianLabel& label, const EtaPair<S>& e) {
  return from_eta(median_eta(label, e));
}

template <Scalar S>
Triple<S> median_apply(const MedianLabel& label, const EtaPair<S>& e, const Triple<S>& d) {
  return median_op(label, e)(d);
}

namespace detail {

template <Scalar S>
bool negligible(const S& value, double scale) {
  if constexpr (scalar_traits<S>::exact) {
    (void)scale;
    return value.is_zero();
  } else {
    return value.abs() <= 1e-9 * std::max(1.0, scale);
  }
}

template <Scalar S>
double magnitude(const Triple<S>& d) {
  if constexpr (scalar_traits<S>::exact) {
    (void)d;
    return 1.0;
  } else {
    return std::max({d[0].abs(), d[1].abs(), d[2].abs()});
  }
}

}  // namespace detail

/// Solves the median constraints directly as a linear system:
///   a''_0 + a''_1 + a''_2 = a_0 + a_1 + a_2,
///   a''_{z+k} - a''_{y+k} = a'_{x+k} - a_{w+k}   (k in Z/3).
/// Independent of the Fourier reduction; used to cross-check it.
template <Scalar S>
Triple<S> median_oracle(const MedianLabel& label, const Triple<S>& d, const Triple<S>& d_prime) {
  std::array<S, 3> rhs_vec;
  for (long k = 0; k < 3; ++k) {
    rhs_vec[k] = d_prime[mod3(label.x() + k)] - d[mod3(label.w() + k)];
  }
  const S closure = rhs_vec[0] + rhs_vec[1] + rhs_vec[2];
  if (!detail::negligible(closure, std::max(detail::magnitude(d), detail::magnitude(d_prime)))) {
    throw InconsistentSystem();
  }

  // Rows: centroid equation, then the k = 0 and k = 1 side equations.
  const S zero = rational<S>(0);
  const S one = rational<S>(1);
  std::array<std::array<S, 4>, 3> m;
  for (auto& row : m) row.fill(zero);
  m[0] = {one, one, one, d[0] + d[1] + d[2]};
  for (long k = 0; k < 2; ++k) {
    auto& row = m[static_cast<std::size_t>(k + 1)];
    row[mod3(label.z() + k)] = row[mod3(label.z() + k)] + one;
    row[mod3(label.y() + k)] = row[mod3(label.y() + k)] - one;
    row[3] = rhs_vec[static_cast<std::size_t>(k)];
  }

  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    if constexpr (scalar_traits<S>::exact) {
      while (pivot < 3 && is_zero(m[pivot][col])) ++pivot;
    } else {
      for (std::size_t r = col + 1; r < 3; ++r) {
        if (m[r][col].abs() > m[pivot][col].abs()) pivot = r;
      }
    }
    if (pivot == 3 || is_zero(m[pivot][col])) {
      throw InconsistentSystem("median constraint matrix is singular");
    }
    std::swap(m[pivot], m[col]);
    const S inv = one / m[col][col];
    for (std::size_t k = col; k < 4; ++k) m[col][k] = m[col][k] * inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col) continue;
      const S f = m[r][col];
      for (std::size_t k = col; k < 4; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  return {m[0][3], m[1][3], m[2][3]};
}

/// How a label reduces to one of 00/01, 01/01, 02/01:
///   M^{label} = M^{canonical} J^{j_power}             (point_symmetric = false)
///   M^{label} = 2N - M^{canonical} J^{j_power}        (point_symmetric = true)
/// with N = (I + J + J^2)/3, valid for every (eta, eta').
struct CanonicalForm {
  MedianLabel canonical;
  long label_shift;  // subtracted from every index of the label
  long j_power;
  bool point_symmetric;
  std::vector<std::string> steps;
};

CanonicalForm canonical_label(const MedianLabel& label);

/// Rebuilds M^{label}[e] from its canonical form (for checking reductions).
template <Scalar S>
CircOp<S> from_canonical(const CanonicalForm& form, const EtaPair<S>& e) {
  Circulant<S> m = median_op(form.canonical, e).circulant() * Circulant<S>::j_power(form.j_power);
  if (form.point_symmetric) {
    const S two_thirds = rational<S>(2, 3);
    const Circulant<S> two_n{two_thirds, two_thirds, two_thirds};
    m = two_n - m;
  }
  return CircOp<S>(m);
}

/// (p1, q1) with M^{label}_{p,q} = S_{p1,q1}.
template <Scalar S>
PQPair<S> table1_pq(const MedianLabel& label, const PQPair<S>& pq) {
  return pq_from_eta(median_eta(label, eta_from_pq(pq)));
}

/// The five published closed-form rows (labels 00/01, 01/01, 02/01, 00/12,
/// 00/20). Returns nullopt for other labels; throws DivisionByZero at poles.
template <Scalar S>
std::optional<PQPair<S>> published_table1_row(const MedianLabel& label, const PQPair<S>& pq) {
  const S& p = pq.p;
  const S& q = pq.q;
  auto n = [](long v) { return rational<S>(v); };
  const std::string key = label.to_string();
  if (key == "00/01") {
    return PQPair<S>{(n(2) * p * q + p - q - n(2)) / (n(4) * p * q - p - n(2) * q - n(1)),
                     -(p - n(2)) / (n(1) + p)};
  }
  if (key == "01/01") {
    return PQPair<S>{(n(4) * p * q - n(2) * p - q - n(1)) / (n(2) * p * q - p + q - n(2)),
                     -(q + n(1)) / (q - n(2))};
  }
  if (key == "02/01") {
    return PQPair<S>{(p + n(2) * q - n(3)) / (n(2) * p + q - n(3)),
                     (n(3) * p * q - n(2) * p - q) / (n(3) * p * q - p - n(2) * q)};
  }
  if (key == "00/12") {
    return PQPair<S>{-(p - n(2)) * (q - n(1)) / (p * q + n(2) * p + q - n(4)),
                     (n(2) * p - n(1)) * (q - n(1)) / (n(4) * p * q - p - n(2) * q - n(1))};
  }
  if (key == "00/20") {
    return PQPair<S>{(n(2) * p - n(1)) / (p + n(1)),
                     (n(2) * p * q + p - q - n(2)) / (p * q + n(2) * p + q - n(4))};
  }
  return std::nullopt;
}

/// The operator solving M^{label}[eta,eta'] = S[eta,eta']:
/// (J^x + J^y - J^z)^{-1} J^w.
template <Scalar S>
CircOp<S> fixed_point_op(const MedianLabel& label) {
  const Circulant<S> base = Circulant<S>::j_power(label.x()) + Circulant<S>::j_power(label.y()) -
                            Circulant<S>::j_power(label.z());
  return compose(inverse(CircOp<S>(base)), CircOp<S>::j_power(label.w()));
}

enum class FixedPointKind { Permutation, Midpoint, Routh };

/// Solutions (p, q), pq != 1, of from_pq(p, q) = target.
struct PQSolutions {
  enum class Family { None, PEqualsOne, QEqualsOne };
  std::vector<PQPair<Cyc12>> points;  // explicit solutions or family representatives
  Family family = Family::None;       // p = 1 with q free, or q = 1 with p free
  bool empty() const { return points.empty(); }
};

/// Inverts from_pq exactly: p = alpha/(1 - beta), q = beta/(1 - alpha) off
/// the lines alpha = 1, beta = 1, which carry one-parameter families.
PQSolutions solve_pq(const CircOp<Cyc12>& target);

struct FixedPointSolutions {
  FixedPointKind kind;
  CircOp<Cyc12> target;
  PQSolutions solutions;  // empty means no valid (p, q)
};

FixedPointSolutions fixed_point_pq_solutions(const MedianLabel& label);

/// Exact check of the reduction identities over `count` random (eta, eta')
/// in Q(zeta12)^2 and all 54 labels.
SuiteReport identity_suite(std::uint64_t seed, std::size_t count);

/// Published Table 1 rows against the composite chart map at `count` random
/// rational (p, q) per row.
SuiteReport table1_suite(std::uint64_t seed, std::size_t count);

/// Fixed-point operators of all 18 representative labels against the
/// published table, plus the Routh pairs.
SuiteReport fixed_point_suite();

}  // namespace cevian
