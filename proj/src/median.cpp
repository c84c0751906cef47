#include "cevian/median.hpp"

#include "cevian/random.hpp"

namespace cevian {

MedianLabel::MedianLabel(long w, long x, long y, long z)
    : w_(mod3(w)), x_(mod3(x)), y_(mod3(y)), z_(mod3(z)) {
  if (y_ == z_) {
    throw InvalidLabel("label requires y != z");
  }
}

MedianLabel MedianLabel::parse(std::string_view text) {
  if (text.size() != 5 || text[2] != '/') {
    throw InvalidLabel("expected label of the form wx/yz, got '" + std::string(text) + "'");
  }
  long d[4];
  const std::size_t pos[4] = {0, 1, 3, 4};
  for (std::size_t k = 0; k < 4; ++k) {
    const char c = text[pos[k]];
    if (c < '0' || c > '2') {
      throw InvalidLabel("label digits must be 0, 1 or 2, got '" + std::string(text) + "'");
    }
    d[k] = c - '0';
  }
  return {d[0], d[1], d[2], d[3]};
}

std::vector<MedianLabel> MedianLabel::all() {
  std::vector<MedianLabel> out;
  for (long w = 0; w < 3; ++w) {
    for (long x = 0; x < 3; ++x) {
      for (long y = 0; y < 3; ++y) {
        for (long z = 0; z < 3; ++z) {
          if (y != z) out.emplace_back(w, x, y, z);
        }
      }
    }
  }
  return out;
}

std::vector<MedianLabel> MedianLabel::representatives() {
  std::vector<MedianLabel> out;
  for (const auto& l : all()) {
    if (l.w() == 0) out.push_back(l);
  }
  return out;
}

MedianLabel MedianLabel::shifted(long dw, long dx, long dy, long dz) const {
  return {w_ + dw, x_ + dx, y_ + dy, z_ + dz};
}

std::string MedianLabel::to_string() const {
  std::string s;
  s += static_cast<char>('0' + w_);
  s += static_cast<char>('0' + x_);
  s += '/';
  s += static_cast<char>('0' + y_);
  s += static_cast<char>('0' + z_);
  return s;
}

CanonicalForm canonical_label(const MedianLabel& label) {
  const long shift = label.w();
  const MedianLabel base = label.shifted(-shift, -shift, -shift, -shift);
  std::vector<std::string> steps;
  if (shift != 0) {
    steps.push_back("label shift by -" + std::to_string(shift) + ": " + label.to_string() + " = " +
                    base.to_string());
  }
  const MedianLabel canonical(0, base.x(), 0, 1);
  const bool flip = mod3(base.z() - base.y()) == 2;
  if (flip) {
    steps.push_back("point symmetry: " + base.to_string() + " = 2N - " + base.swapped_yz().to_string());
  }
  // after the optional swap the (y, z) pair is (t, t + 1); each unit of t is one right factor J^2
  const long t = flip ? base.z() : base.y();
  const long j_power = mod3(2 * t);
  if (j_power != 0) {
    steps.push_back("right J power " + std::to_string(j_power) + ": " +
                    (flip ? base.swapped_yz() : base).to_string() + " = " + canonical.to_string() +
                    " J^" + std::to_string(j_power));
  }
  return CanonicalForm{canonical, shift, j_power, flip, std::move(steps)};
}

PQSolutions solve_pq(const CircOp<Cyc12>& target) {
  const Cyc12 one(1);
  PQSolutions out;
  const Cyc12& a = target.alpha();
  const Cyc12& b = target.beta();
  if (a == one || b == one) {
    // alpha = 1 forces p = 1 (only the identity); beta = 1 forces q = 1 (only J)
    if (target == CircOp<Cyc12>::identity()) {
      out.family = PQSolutions::Family::PEqualsOne;
      out.points.push_back({one, Cyc12(0)});
    } else if (target == CircOp<Cyc12>::j_power(1)) {
      out.family = PQSolutions::Family::QEqualsOne;
      out.points.push_back({Cyc12(0), one});
    }
    return out;
  }
  const PQPair<Cyc12> pq{a / (one - b), b / (one - a)};
  if ((one - pq.p * pq.q).is_zero()) {
    return out;
  }
  if (from_pq(pq) == target) {
    out.points.push_back(pq);
  }
  return out;
}

namespace {

FixedPointKind kind_of(const CircOp<Cyc12>& op) {
  for (long k = 0; k < 3; ++k) {
    if (op == CircOp<Cyc12>::j_power(k)) return FixedPointKind::Permutation;
  }
  std::size_t halves = 0;
  for (const auto& c : op.circulant().c) {
    if (c == Cyc12(Rational(1, 2))) ++halves;
  }
  return halves == 2 ? FixedPointKind::Midpoint : FixedPointKind::Routh;
}

std::string describe(const EtaPair<Cyc12>& e) {
  return "eta=" + e.eta.to_string() + ", eta'=" + e.eta_prime.to_string();
}

}  // namespace

FixedPointSolutions fixed_point_pq_solutions(const MedianLabel& label) {
  const CircOp<Cyc12> target = fixed_point_op<Cyc12>(label);
  return {kind_of(target), target, solve_pq(target)};
}

SuiteReport identity_suite(std::uint64_t seed, std::size_t count) {
  SuiteReport report{"identities", {}};
  auto& shift_j = report.add("right and left J factor");
  auto& label_shift = report.add("uniform label shift");
  auto& right_j = report.add("right J shifts w and x");
  auto& right_j2 = report.add("right J^2 shifts y and z");
  auto& x_shift = report.add("x shift absorbed by parameter rotation");
  auto& x_average = report.add("average over x");
  auto& point_symmetry = report.add("point symmetry under y/z swap");
  auto& translation = report.add("parameter translation to 00/yz");
  auto& defining = report.add("defining relation");
  auto& canonical = report.add("canonical reduction");

  const auto labels = MedianLabel::all();
  const Cyc12 one(1);
  const Cyc12 w = Cyc12::omega();
  const Cyc12 w2 = w * w;
  const Cyc12 third(Rational(1, 3));
  const Circulant<Cyc12> n_op{third, third, third};
  using Circ = Circulant<Cyc12>;
  using Op = CircOp<Cyc12>;

  ExactSampler rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Cyc12 eta = rng.cyc12();
    const Cyc12 eta_prime = rng.cyc12();
    const EtaPair<Cyc12> e{eta, eta_prime};
    const std::string where = describe(e);

    const Op s = from_eta(e);
    const Op s_rot = from_eta(EtaPair<Cyc12>{eta * w, eta_prime * w2});
    shift_j.record(s == compose(s_rot, Op::j_power(1)) && s == compose(Op::j_power(1), s_rot), where);

    for (const auto& l : labels) {
      const std::string ctx = "label " + l.to_string() + ", " + where;
      const Op m = median_op(l, e);

      label_shift.record(m == median_op(l.shifted(1, 1, 1, 1), e), ctx);
      right_j.record(compose(m, Op::j_power(1)) == median_op(l.shifted(1, 1, 0, 0), e), ctx);
      right_j2.record(compose(m, Op::j_power(2)) == median_op(l.shifted(0, 0, 1, 1), e), ctx);

      const Op up = median_op(l.shifted(0, 1, 0, 0), EtaPair<Cyc12>{eta * w, eta_prime * w2});
      const Op down = median_op(l.shifted(0, -1, 0, 0), EtaPair<Cyc12>{eta * w2, eta_prime * w});
      x_shift.record((m == up) && (m == down), ctx);

      if (l.x() == 0) {
        Circ sum = median_op(l, e).circulant() + median_op(l.shifted(0, 1, 0, 0), e).circulant() +
                   median_op(l.shifted(0, 2, 0, 0), e).circulant();
        const Circ lhs = third * sum;
        const Circ rhs = third * Circ::j_power(l.w() + l.y() + l.z()) +
                         Cyc12(Rational(2, 3)) * Circ::j_power(l.w() - l.y());
        x_average.record(lhs == rhs, ctx);
      }

      const Circ half_sum = Cyc12(Rational(1, 2)) * (m.circulant() + median_op(l.swapped_yz(), e).circulant());
      point_symmetry.record(half_sum == n_op, ctx);

      const EtaPair<Cyc12> moved{Cyc12::omega_pow(l.x() - l.w()) + eta, Cyc12::omega_pow(l.w() - l.x()) + eta_prime};
      const Op base = median_op(MedianLabel(0, 0, l.y(), l.z()), EtaPair<Cyc12>{one + eta, one + eta_prime});
      translation.record(median_op(l, moved) == compose(Op::j_power(l.x()), base), ctx);

      const Circ lhs = (Circ::j_power(l.z()) - Circ::j_power(l.y())) * m.circulant();
      const Circ rhs = Circ::j_power(l.x()) * s.circulant() - Circ::j_power(l.w());
      defining.record(lhs == rhs, ctx);

      canonical.record(from_canonical(canonical_label(l), e) == m, ctx);
    }
  }
  return report;
}

SuiteReport table1_suite(std::uint64_t seed, std::size_t count) {
  SuiteReport report{"table1", {}};
  ExactSampler rng(seed);
  for (const char* key : {"00/01", "01/01", "02/01", "00/12", "00/20"}) {
    const MedianLabel label = MedianLabel::parse(key);
    auto& result = report.add("row " + std::string(key));
    std::size_t attempts = 0;
    while (result.checks < count && attempts < 100 * count) {
      ++attempts;
      const PQPair<Cyc12> pq{Cyc12(rng.rational()), Cyc12(rng.rational())};
      std::optional<PQPair<Cyc12>> published;
      PQPair<Cyc12> composite{Cyc12(0), Cyc12(0)};
      try {
        published = published_table1_row(label, pq);
        composite = table1_pq(label, pq);
      } catch (const Error&) {
        continue;  // pole of either side; draw again
      }
      // both sides are reduced field elements, so equality is exact equality of the rational functions
      const bool ok = published->p == composite.p && published->q == composite.q;
      result.record(ok, "p=" + pq.p.to_string() + ", q=" + pq.q.to_string());
    }
  }
  return report;
}

namespace {

struct PublishedRow {
  const char* label;
  Rational alpha, beta, gamma;
};

std::vector<PublishedRow> published_fixed_points() {
  auto r = [](long n, long d) { return Rational(n, d); };
  return {
      {"00/01", r(4, 7), r(2, 7), r(1, 7)}, {"01/01", r(1, 1), r(0, 1), r(0, 1)},
      {"02/01", r(1, 2), r(1, 2), r(0, 1)}, {"00/10", r(0, 1), r(0, 1), r(1, 1)},
      {"01/10", r(1, 7), r(2, 7), r(4, 7)}, {"02/10", r(0, 1), r(1, 2), r(1, 2)},
      {"00/02", r(4, 7), r(1, 7), r(2, 7)}, {"01/02", r(1, 2), r(0, 1), r(1, 2)},
      {"02/02", r(1, 1), r(0, 1), r(0, 1)}, {"00/20", r(0, 1), r(1, 1), r(0, 1)},
      {"01/20", r(0, 1), r(1, 2), r(1, 2)}, {"02/20", r(1, 7), r(4, 7), r(2, 7)},
      {"00/12", r(1, 2), r(0, 1), r(1, 2)}, {"01/12", r(2, 7), r(1, 7), r(4, 7)},
      {"02/12", r(0, 1), r(0, 1), r(1, 1)}, {"00/21", r(1, 2), r(1, 2), r(0, 1)},
      {"01/21", r(0, 1), r(1, 1), r(0, 1)}, {"02/21", r(2, 7), r(4, 7), r(1, 7)},
  };
}

}  // namespace

SuiteReport fixed_point_suite() {
  SuiteReport report{"fixedpoints", {}};
  auto& rows = report.add("fixed-point operator table");
  auto& kinds = report.add("fixed-point kinds");
  auto& conversion = report.add("(4/5, 2/3) coefficients");
  auto& routh = report.add("Routh pairs satisfy M = S");
  auto& half_ij = report.add("(I + J)/2 has no valid (p, q)");

  for (const auto& row : published_fixed_points()) {
    const MedianLabel label = MedianLabel::parse(row.label);
    const CircOp<Cyc12> expected(Cyc12(row.alpha), Cyc12(row.beta), Cyc12(row.gamma));
    rows.record(fixed_point_op<Cyc12>(label) == expected, row.label);

    const FixedPointSolutions sol = fixed_point_pq_solutions(label);
    bool ok = !sol.solutions.empty();
    for (const auto& pq : sol.solutions.points) {
      if (sol.solutions.family == PQSolutions::Family::None) {
        ok = ok && from_pq(pq) == expected && median_op(label, eta_from_pq(pq)) == from_pq(pq);
      } else {
        ok = ok && from_pq(pq) == expected;
      }
    }
    if (expected == CircOp<Cyc12>(Cyc12(Rational(1, 2)), Cyc12(Rational(1, 2)), Cyc12(0))) {
      half_ij.record(sol.solutions.empty(), row.label);
      ok = sol.kind == FixedPointKind::Midpoint;
    }
    kinds.record(ok, row.label);
  }

  conversion.record(from_pq(PQPair<Cyc12>{Cyc12(Rational(4, 5)), Cyc12(Rational(2, 3))}) ==
                        CircOp<Cyc12>(Cyc12(Rational(4, 7)), Cyc12(Rational(2, 7)), Cyc12(Rational(1, 7))),
                    "from_pq(4/5, 2/3)");

  const struct {
    const char* label;
    Rational p, q;
  } pairs[] = {{"00/01", Rational(4, 5), Rational(2, 3)}, {"00/02", Rational(2, 3), Rational(1, 3)},
               {"01/10", Rational(1, 5), Rational(1, 3)}, {"02/21", Rational(2, 3), Rational(4, 5)},
               {"02/20", Rational(1, 3), Rational(2, 3)}, {"01/12", Rational(1, 3), Rational(1, 5)}};
  for (const auto& pr : pairs) {
    const MedianLabel label = MedianLabel::parse(pr.label);
    const PQPair<Cyc12> pq{Cyc12(pr.p), Cyc12(pr.q)};
    const FixedPointSolutions sol = fixed_point_pq_solutions(label);
    const bool unique = sol.kind == FixedPointKind::Routh && sol.solutions.points.size() == 1 &&
                        sol.solutions.points.front() == pq;
    routh.record(unique && median_op(label, eta_from_pq(pq)) == from_pq(pq), pr.label);
  }
  return report;
}

}  // namespace cevian
