#pragma once

#include <cmath>

#include "cevian/errors.hpp"
#include "cevian/scalar.hpp"
#include "cevian/triangle.hpp"

namespace cevian {

/// Element c0 I + c1 J + c2 J^2 of the circulant algebra; closed under
/// +, -, scalar multiples and products. Products are 3-term cyclic
/// convolutions.
template <Scalar S>
struct Circulant {
  std::array<S, 3> c{};

  Circulant() = default;
  Circulant(S c0, S c1, S c2) : c{std::move(c0), std::move(c1), std::move(c2)} {}

  static Circulant identity() { return {rational<S>(1), rational<S>(0), rational<S>(0)}; }

  /// J^k
  static Circulant j_power(long k) {
    Circulant r{rational<S>(0), rational<S>(0), rational<S>(0)};
    r.c[mod3(k)] = rational<S>(1);
    return r;
  }

  S trace_sum() const { return c[0] + c[1] + c[2]; }

  Circulant& operator+=(const Circulant& o) {
    for (std::size_t k = 0; k < 3; ++k) c[k] = c[k] + o.c[k];
    return *this;
  }
  Circulant& operator-=(const Circulant& o) {
    for (std::size_t k = 0; k < 3; ++k) c[k] = c[k] - o.c[k];
    return *this;
  }
  friend Circulant operator+(Circulant a, const Circulant& b) { return a += b; }
  friend Circulant operator-(Circulant a, const Circulant& b) { return a -= b; }
  friend Circulant operator*(const S& s, const Circulant& a) { return {s * a.c[0], s * a.c[1], s * a.c[2]}; }
  friend Circulant operator*(const Circulant& a, const Circulant& b) {
    return {a.c[0] * b.c[0] + a.c[1] * b.c[2] + a.c[2] * b.c[1],
            a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[2],
            a.c[0] * b.c[2] + a.c[2] * b.c[0] + a.c[1] * b.c[1]};
  }
  friend bool operator==(const Circulant& a, const Circulant& b) { return a.c == b.c; }

  /// a'_k = c0 a_k + c1 a_{k+1} + c2 a_{k+2}
  Triple<S> apply(const Triple<S>& d) const {
    Triple<S> out;
    for (std::size_t k = 0; k < 3; ++k) {
      out[k] = c[0] * d[k] + c[1] * d[(k + 1) % 3] + c[2] * d[(k + 2) % 3];
    }
    return out;
  }
};

/// Fourier multipliers: eta scales psi2, eta_prime scales psi1.
template <Scalar S>
struct EtaPair {
  S eta;
  S eta_prime;
  friend bool operator==(const EtaPair&, const EtaPair&) = default;
};

template <Scalar S>
struct PQPair {
  S p;
  S q;
  friend bool operator==(const PQPair&, const PQPair&) = default;
};

/// A centroid-preserving circulant operator alpha I + beta J + gamma J^2
/// with alpha + beta + gamma = 1 (exactly on Q(zeta12), to 1e-12 in double).
template <Scalar S>
class CircOp {
 public:
  /// Throws InvalidOperator unless the coefficients sum to 1.
  CircOp(S alpha, S beta, S gamma) : m_{std::move(alpha), std::move(beta), std::move(gamma)} {
    validate();
  }
  explicit CircOp(Circulant<S> m) : m_(std::move(m)) { validate(); }

  static CircOp identity() { return CircOp(Circulant<S>::identity()); }
  static CircOp j_power(long k) { return CircOp(Circulant<S>::j_power(k)); }

  const S& alpha() const { return m_.c[0]; }
  const S& beta() const { return m_.c[1]; }
  const S& gamma() const { return m_.c[2]; }
  const Circulant<S>& circulant() const { return m_; }

  Triple<S> operator()(const Triple<S>& d) const { return m_.apply(d); }

  friend bool operator==(const CircOp& a, const CircOp& b) { return a.m_ == b.m_; }

 private:
  void validate() const {
    const S sum = m_.trace_sum();
    if constexpr (scalar_traits<S>::exact) {
      if (!(sum == rational<S>(1))) {
        throw InvalidOperator();
      }
    } else {
      const double scale = 1.0 + m_.c[0].abs() + m_.c[1].abs() + m_.c[2].abs();
      if ((sum - Approx(1.0)).abs() > 1e-12 * scale) {
        throw InvalidOperator();
      }
    }
  }

  Circulant<S> m_;
};

/// (alpha, beta, gamma) = (p(1-q), q(1-p), (1-p)(1-q)) / (1 - pq)
template <Scalar S>
CircOp<S> from_pq(const PQPair<S>& pq) {
  const S one = rational<S>(1);
  const S den = one - pq.p * pq.q;
  if (is_zero(den)) {
    throw InvalidPQ();
  }
  return CircOp<S>(pq.p * (one - pq.q) / den, pq.q * (one - pq.p) / den,
                   (one - pq.p) * (one - pq.q) / den);
}

/// alpha = (1+eta+eta')/3, beta = (1+eta w+eta' w^2)/3, gamma = (1+eta w^2+eta' w)/3
template <Scalar S>
CircOp<S> from_eta(const EtaPair<S>& e) {
  const S one = rational<S>(1);
  const S third = rational<S>(1, 3);
  const S w = scalar_traits<S>::omega();
  const S w2 = w * w;
  const S alpha = third * (one + e.eta + e.eta_prime);
  const S beta = third * (one + e.eta * w + e.eta_prime * w2);
  if constexpr (scalar_traits<S>::exact) {
    return CircOp<S>(alpha, beta, one - alpha - beta);
  } else {
    return CircOp<S>(alpha, beta, third * (one + e.eta * w2 + e.eta_prime * w));
  }
}

/// eta = alpha + beta w^2 + gamma w, eta' = alpha + beta w + gamma w^2
template <Scalar S>
EtaPair<S> to_eta(const CircOp<S>& op) {
  const S w = scalar_traits<S>::omega();
  const S w2 = w * w;
  return {op.alpha() + op.beta() * w2 + op.gamma() * w, op.alpha() + op.beta() * w + op.gamma() * w2};
}

template <Scalar S>
EtaPair<S> eta_from_pq(const PQPair<S>& pq) {
  const S one = rational<S>(1);
  const S den = one - pq.p * pq.q;
  if (is_zero(den)) {
    throw InvalidPQ();
  }
  const S w = scalar_traits<S>::omega();
  const S a = (pq.p - pq.q) / den;
  const S b = (pq.p - one) * (rational<S>(2) * pq.q - one) / den;
  return {a + b * w, a + b * w * w};
}

/// Inverse chart p = (1+eta+eta')/(2 - w eta - w^2 eta'),
/// q = (1 + w eta + w^2 eta')/(2 - eta - eta').
template <Scalar S>
PQPair<S> pq_from_eta(const EtaPair<S>& e) {
  const S one = rational<S>(1);
  const S two = rational<S>(2);
  const S w = scalar_traits<S>::omega();
  const S w2 = w * w;
  const S p_den = two - w * e.eta - w2 * e.eta_prime;
  const S q_den = two - e.eta - e.eta_prime;
  if (is_zero(p_den) || is_zero(q_den)) {
    throw SingularParameter();
  }
  PQPair<S> pq{(one + e.eta + e.eta_prime) / p_den, (one + w * e.eta + w2 * e.eta_prime) / q_den};
  if (is_zero(one - pq.p * pq.q)) {
    throw InvalidPQ("(eta,eta') maps to p*q = 1");
  }
  return pq;
}

template <Scalar S>
CircOp<S> compose(const CircOp<S>& a, const CircOp<S>& b) {
  return CircOp<S>(a.circulant() * b.circulant());
}

template <Scalar S>
Triple<S> apply(const CircOp<S>& op, const Triple<S>& d) {
  return op(d);
}

template <Scalar S>
CircOp<S> inverse(const CircOp<S>& op) {
  const EtaPair<S> e = to_eta(op);
  if (is_zero(e.eta) || is_zero(e.eta_prime)) {
    throw NotInvertible();
  }
  const S one = rational<S>(1);
  return from_eta(EtaPair<S>{one / e.eta, one / e.eta_prime});
}

/// |eta| = |eta'| = 1
inline bool is_area_preserving(const CircOp<Cyc12>& op) {
  const EtaPair<Cyc12> e = to_eta(op);
  return e.eta.norm_sq() == Cyc12(1) && e.eta_prime.norm_sq() == Cyc12(1);
}

inline bool is_area_preserving(const CircOp<Approx>& op, double tol = 1e-12) {
  const EtaPair<Approx> e = to_eta(op);
  return std::abs(e.eta.abs() - 1.0) <= tol && std::abs(e.eta_prime.abs() - 1.0) <= tol;
}

/// conj(eta) = eta', i.e. the operator matrix is real.
inline bool commutes_with_real_affine(const CircOp<Cyc12>& op) {
  const EtaPair<Cyc12> e = to_eta(op);
  return e.eta.conj() == e.eta_prime;
}

inline bool commutes_with_real_affine(const CircOp<Approx>& op, double tol = 1e-12) {
  const EtaPair<Approx> e = to_eta(op);
  return approx_equal(e.eta.conj(), e.eta_prime, tol);
}

}  // namespace cevian
