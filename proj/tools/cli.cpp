#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cevian/export.hpp"
#include "cevian/figures.hpp"
#include "cevian/median.hpp"
#include "cevian/orbit.hpp"
#include "cevian/parse.hpp"
#include "cevian/shape.hpp"

namespace cevian {

namespace {

using json = nlohmann::json;

/// Signals a failed verification suite (exit code 1).
struct VerificationFailed {};

std::string text(const Cyc12& a) { return a.to_pretty_string(); }
std::string text(const Approx& a) { return a.to_string(); }

template <Scalar S>
std::string triple_text(const Triple<S>& d) {
  return "(" + text(d[0]) + ", " + text(d[1]) + ", " + text(d[2]) + ")";
}

json triple_json(const Triple<Cyc12>& d) { return json::array({text(d[0]), text(d[1]), text(d[2])}); }

json triple_json(const Triple<Approx>& d) {
  json out = json::array();
  for (std::size_t k = 0; k < 3; ++k) out.push_back({d[k].re(), d[k].im()});
  return out;
}

const char* class_name(TriangleClass c) {
  switch (c) {
    case TriangleClass::TripleCollision:
      return "triple-collision";
    case TriangleClass::DoubleCollision:
      return "double-collision";
    case TriangleClass::DegenerateDistinct:
      return "degenerate-distinct";
    case TriangleClass::NonDegenerate:
      break;
  }
  return "non-degenerate";
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path.string());
  f << contents;
}

// ---------------------------------------------------------------- apply

struct ApplyArgs {
  std::string op;
  std::string triple;
  bool approx = false;
  std::string format = "text";
};

void run_apply(const ApplyArgs& a, std::ostream& out) {
  const OperatorLiteral lit = parse_operator(a.op);
  const Triple<Cyc12> d = parse_triple(a.triple);
  json j{{"operator", lit.description}, {"backend", a.approx ? "approx" : "exact"}};
  std::string line;
  if (a.approx) {
    const Triple<Approx> r = downcast(lit.op)(downcast(d));
    j["triple"] = triple_json(r);
    line = triple_text(r);
  } else {
    const Triple<Cyc12> r = lit.op(d);
    j["triple"] = triple_json(r);
    line = triple_text(r);
  }
  if (a.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << line << '\n';
  }
}

// ---------------------------------------------------------------- convert

struct ConvertArgs {
  std::string op;
  bool approx = false;
  std::string format = "text";
};

template <Scalar S>
json describe_operator(const ExtOp<S>& op) {
  json j;
  j["pre_swap"] = op.pre_swap;
  j["alpha"] = text(op.circ.alpha());
  j["beta"] = text(op.circ.beta());
  j["gamma"] = text(op.circ.gamma());
  const EtaPair<S> e = to_eta(op.circ);
  j["eta"] = text(e.eta);
  j["eta_prime"] = text(e.eta_prime);
  try {
    const PQPair<S> pq = pq_from_eta(e);
    j["p"] = text(pq.p);
    j["q"] = text(pq.q);
  } catch (const Error& err) {
    j["pq_error"] = err.what();
  }
  j["area_preserving"] = is_area_preserving(op.circ);
  j["commutes_with_real_affine"] = commutes_with_real_affine(op.circ);
  return j;
}

void run_convert(const ConvertArgs& a, std::ostream& out) {
  const OperatorLiteral lit = parse_operator(a.op);
  json j = a.approx ? describe_operator(downcast(lit.op)) : describe_operator(lit.op);
  j["operator"] = lit.description;
  if (a.format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  out << lit.description << '\n';
  for (const char* key : {"pre_swap", "alpha", "beta", "gamma", "eta", "eta_prime", "p", "q", "pq_error",
                          "area_preserving", "commutes_with_real_affine"}) {
    if (!j.contains(key)) continue;
    const json& v = j[key];
    out << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

// ---------------------------------------------------------------- median

struct MedianArgs {
  std::string label;
  std::string p, q, eta, eta_prime, triple;
  std::string format = "text";
};

void run_median(const MedianArgs& a, std::ostream& out) {
  MedianLabel label(0, 0, 0, 1);
  try {
    label = MedianLabel::parse(a.label);
  } catch (const InvalidLabel& e) {
    throw ParseError(e.what(), 0);
  }
  json j{{"label", label.to_string()}};

  const CanonicalForm form = canonical_label(label);
  j["canonical"] = {{"label", form.canonical.to_string()},
                    {"label_shift", form.label_shift},
                    {"right_j_power", form.j_power},
                    {"point_symmetric", form.point_symmetric},
                    {"steps", form.steps}};

  const FixedPointSolutions fp = fixed_point_pq_solutions(label);
  const char* kinds[] = {"permutation", "midpoint", "routh"};
  json sols = json::array();
  for (const auto& pq : fp.solutions.points) sols.push_back({text(pq.p), text(pq.q)});
  const char* families[] = {"none", "p=1, q free", "q=1, p free"};
  j["fixed_point"] = {{"alpha", text(fp.target.alpha())},
                      {"beta", text(fp.target.beta())},
                      {"gamma", text(fp.target.gamma())},
                      {"kind", kinds[static_cast<int>(fp.kind)]},
                      {"pq", sols},
                      {"family", families[static_cast<int>(fp.solutions.family)]}};

  std::optional<EtaPair<Cyc12>> e;
  if (!a.p.empty() || !a.q.empty()) {
    if (a.p.empty() || a.q.empty()) throw InvalidArgument("--p and --q go together");
    const PQPair<Cyc12> pq{parse_cyc12(a.p), parse_cyc12(a.q)};
    e = eta_from_pq(pq);
    try {
      const PQPair<Cyc12> pq1 = table1_pq(label, pq);
      j["table1"] = {{"p1", text(pq1.p)}, {"q1", text(pq1.q)}};
    } catch (const Error& err) {
      j["table1"] = {{"error", err.what()}};
    }
  } else if (!a.eta.empty() || !a.eta_prime.empty()) {
    if (a.eta.empty() || a.eta_prime.empty()) throw InvalidArgument("--eta and --eta-prime go together");
    e = EtaPair<Cyc12>{parse_cyc12(a.eta), parse_cyc12(a.eta_prime)};
  }
  if (e) {
    const CircOp<Cyc12> m = median_op(label, *e);
    j["operator"] = {{"alpha", text(m.alpha())}, {"beta", text(m.beta())}, {"gamma", text(m.gamma())}};
    if (!a.triple.empty()) {
      const Triple<Cyc12> d = parse_triple(a.triple);
      j["triple"] = triple_json(m(d));
    }
  } else if (!a.triple.empty()) {
    throw InvalidArgument("--triple needs --p/--q or --eta/--eta-prime");
  }

  if (a.format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  out << "label " << label.to_string() << '\n';
  out << "canonical " << form.canonical.to_string() << (form.point_symmetric ? " (point symmetric)" : "")
      << ", right J power " << form.j_power << '\n';
  for (const auto& s : form.steps) out << "  " << s << '\n';
  const json& f = j["fixed_point"];
  out << "fixed point (" << f["alpha"].get<std::string>() << ", " << f["beta"].get<std::string>() << ", "
      << f["gamma"].get<std::string>() << "), kind " << f["kind"].get<std::string>() << '\n';
  if (fp.solutions.empty()) {
    out << "  no valid (p, q)\n";
  }
  for (const auto& pq : fp.solutions.points) {
    out << "  (p, q) = (" << text(pq.p) << ", " << text(pq.q) << ")";
    if (fp.solutions.family != PQSolutions::Family::None) out << " representing " << f["family"].get<std::string>();
    out << '\n';
  }
  if (j.contains("table1")) {
    const json& t = j["table1"];
    if (t.contains("error")) {
      out << "(p1, q1): " << t["error"].get<std::string>() << '\n';
    } else {
      out << "(p1, q1) = (" << t["p1"].get<std::string>() << ", " << t["q1"].get<std::string>() << ")\n";
    }
  }
  if (j.contains("operator")) {
    const json& o = j["operator"];
    out << "operator (" << o["alpha"].get<std::string>() << ", " << o["beta"].get<std::string>() << ", "
        << o["gamma"].get<std::string>() << ")\n";
  }
  if (j.contains("triple")) {
    const json& t = j["triple"];
    out << "triple (" << t[0].get<std::string>() << ", " << t[1].get<std::string>() << ", "
        << t[2].get<std::string>() << ")\n";
  }
}

// ---------------------------------------------------------------- shape

struct ShapeArgs {
  std::string triple;
  bool approx = false;
  std::string format = "text";
};

template <Scalar S>
json shape_json(const Triple<S>& d) {
  json j;
  const TriangleClass c = classify(d);
  j["class"] = class_name(c);
  const FourierTriple<S> f = fourier(d);
  j["psi"] = {text(f.psi0), text(f.psi1), text(f.psi2)};
  if (c != TriangleClass::TripleCollision) {
    j["shape"] = to_string(shape(d));
    j["shape_cubed"] = to_string(shape_cubed(d));
  }
  if (c == TriangleClass::NonDegenerate) j["orientation_positive"] = orientation_positive(d);
  return j;
}

void run_shape(const ShapeArgs& a, std::ostream& out) {
  const Triple<Cyc12> d = parse_triple(a.triple);
  const json j = a.approx ? shape_json(downcast(d)) : shape_json(d);
  if (a.format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, v] : j.items()) {
    out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

// ---------------------------------------------------------------- orbit

struct OrbitArgs {
  std::string family;
  std::size_t samples = 300;
  int m = -1, n = 1;
  long x = 0;
  double u = 0.7, v = 0.5;
  std::string eta, eta_prime, base, label, gamma, mu;
  int eps = 1;
  bool shape = false;
  std::string format = "csv";
  std::string out;
};

OrbitFamily build_family(const OrbitArgs& a) {
  if (a.family == "steiner") return steiner_family(a.u, a.v);
  if (a.family == "figure8") return figure8_family();
  if (a.family == "median-figure8") return median_figure8_family();
  if (a.family == "median-orbit") return median_orbit_family(a.x, a.m, a.n);
  const Triple<Approx> base =
      a.base.empty() ? Triple<Approx>{0.0, 1.0, Approx(0.7, 0.5)} : downcast(parse_triple(a.base));
  if (a.family == "smn") return single_frequency_family(a.m, a.n, base);
  if (a.family == "custom") {
    if (a.eta.empty() || a.eta_prime.empty()) throw InvalidArgument("custom family needs --eta and --eta-prime");
    OrbitFamily f{std::nullopt, parse_trig_poly(a.eta), parse_trig_poly(a.eta_prime), base};
    if (!a.label.empty()) f.median = MedianLabel::parse(a.label);
    return f;
  }
  if (a.family == "lift") {
    if (a.gamma.empty()) throw InvalidArgument("lift needs --gamma");
    return lift_shape_curve(parse_trig_poly(a.gamma), a.eps,
                            a.mu.empty() ? TrigPoly::constant(1.0) : parse_trig_poly(a.mu));
  }
  throw InvalidArgument("unknown family '" + a.family + "'");
}

void run_orbit(const OrbitArgs& a, std::ostream& out) {
  const OrbitFamily f = build_family(a);
  const auto samples = sample(f, a.samples);
  std::string body;
  if (a.format == "svg") {
    body = render_svg(orbit_scene(samples, std::max<std::size_t>(1, a.samples / 12)));
  } else if (a.format == "json") {
    const TracingClass c = tracing_class(f);
    json j{{"family", a.family}, {"samples", a.samples}, {"class", to_string(c)}};
    if (c != TracingClass::NotTracing && a.samples % 3 == 0) j["tracing_residual"] = verify_tracing(samples, c);
    j["min_vertex_distance"] = collision_report(samples);
    json rows = json::array();
    for (const auto& s : samples) rows.push_back({{"t", s.t}, {"triple", triple_json(s.triple)}});
    j["orbit"] = rows;
    body = j.dump(2) + "\n";
  } else if (a.shape) {
    body = shape_csv(shape_trace(samples));
  } else {
    body = orbit_csv(samples);
  }
  if (a.out.empty()) {
    out << body;
  } else {
    write_file(a.out, body);
  }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 0;  // 0: suite default
  std::string format = "json";
};

SuiteReport run_suite(const VerifyArgs& a) {
  auto count = [&](std::size_t fallback) { return a.count == 0 ? fallback : a.count; };
  if (a.suite == "identities") return identity_suite(a.seed, count(100));
  if (a.suite == "table1") return table1_suite(a.seed, count(20));
  if (a.suite == "fixedpoints") return fixed_point_suite();
  if (a.suite == "bclift") return bclift_suite(a.seed, count(50));
  if (a.suite == "hajja") return hajja_suite(a.seed, count(50));
  if (a.suite == "tracing") return tracing_suite(10, count(300));
  throw InvalidArgument("unknown suite '" + a.suite + "'");
}

void run_verify(const VerifyArgs& a, std::ostream& out) {
  const SuiteReport report = run_suite(a);
  json checks = json::array();
  for (const auto& r : report.results) {
    json c{{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}};
    if (r.failures > 0) c["first_failure"] = r.first_failure;
    checks.push_back(c);
  }
  const json j{{"suite", report.suite}, {"seed", a.seed}, {"passed", report.passed()}, {"results", checks}};
  if (a.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
      if (r.failures > 0) out << ", " << r.failures << " failed; first: " << r.first_failure;
      out << ")\n";
    }
  }
  if (!report.passed()) throw VerificationFailed{};
}

// ---------------------------------------------------------------- figure

struct FigureArgs {
  std::string name;
  std::string out = ".";
  std::size_t samples = 360;
};

void run_figure(const FigureArgs& a, std::ostream& out) {
  const std::vector<std::string> names = a.name == "all" ? figure_names() : std::vector<std::string>{a.name};
  std::vector<std::vector<FigurePanel>> rendered;
  for (const auto& name : names) rendered.push_back(render_figure(name, a.samples));
  std::filesystem::create_directories(a.out);
  for (const auto& panels : rendered) {
    for (const auto& p : panels) {
      const std::filesystem::path base = std::filesystem::path(a.out) / p.name;
      write_file(base.string() + ".csv", p.csv);
      write_file(base.string() + ".svg", p.svg);
      out << base.string() << ".csv\n" << base.string() << ".svg\n";
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric circulant triangle operators"};
  app.require_subcommand(1);

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Apply an operator literal to a triangle");
  apply->add_option("operator", apply_args.op, "e.g. S[p=4/5,q=(2+4i)/3]")->required();
  apply->add_option("triple", apply_args.triple, "e.g. (0,1,(7+8i)/10)")->required();
  auto* apply_exact = apply->add_flag("--exact", "Exact Q(zeta12) arithmetic (default)");
  apply->add_flag("--approx", apply_args.approx, "Double precision")->excludes(apply_exact);
  apply->add_option("--format", apply_args.format)->check(CLI::IsMember({"text", "json"}));

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Show an operator in (alpha,beta,gamma), (eta,eta') and (p,q)");
  convert->add_option("operator", convert_args.op)->required();
  auto* convert_exact = convert->add_flag("--exact");
  convert->add_flag("--approx", convert_args.approx)->excludes(convert_exact);
  convert->add_option("--format", convert_args.format)->check(CLI::IsMember({"text", "json"}));

  MedianArgs median_args;
  auto* median = app.add_subcommand("median", "Median operator: canonical form, fixed point, evaluation");
  median->add_option("label", median_args.label, "wx/yz, e.g. 02/01")->required();
  median->add_option("--p", median_args.p);
  median->add_option("--q", median_args.q);
  median->add_option("--eta", median_args.eta);
  median->add_option("--eta-prime", median_args.eta_prime);
  median->add_option("--triple", median_args.triple);
  median->add_option("--format", median_args.format)->check(CLI::IsMember({"text", "json"}));

  ShapeArgs shape_args;
  auto* shape_cmd = app.add_subcommand("shape", "Fourier components, shape and class of a triangle");
  shape_cmd->add_option("triple", shape_args.triple)->required();
  auto* shape_exact = shape_cmd->add_flag("--exact");
  shape_cmd->add_flag("--approx", shape_args.approx)->excludes(shape_exact);
  shape_cmd->add_option("--format", shape_args.format)->check(CLI::IsMember({"text", "json"}));

  OrbitArgs orbit_args;
  auto* orbit = app.add_subcommand("orbit", "Sample a periodic operator family");
  orbit
      ->add_option("family", orbit_args.family,
                   "steiner, figure8, median-figure8, median-orbit, smn, custom or lift")
      ->required()
      ->check(CLI::IsMember({"steiner", "figure8", "median-figure8", "median-orbit", "smn", "custom", "lift"}));
  orbit->add_option("--samples", orbit_args.samples)->check(CLI::Range(std::size_t{3}, std::size_t{10000000}));
  orbit->add_option("--m", orbit_args.m);
  orbit->add_option("--n", orbit_args.n);
  orbit->add_option("--x", orbit_args.x);
  orbit->add_option("--u", orbit_args.u);
  orbit->add_option("--v", orbit_args.v);
  orbit->add_option("--eta", orbit_args.eta, "trig polynomial, e.g. \"1:-2, -2:1\"");
  orbit->add_option("--eta-prime", orbit_args.eta_prime);
  orbit->add_option("--base", orbit_args.base);
  orbit->add_option("--label", orbit_args.label, "median label for custom families");
  orbit->add_option("--gamma", orbit_args.gamma, "shape curve for lift");
  orbit->add_option("--eps", orbit_args.eps)->check(CLI::IsMember({-1, 1}));
  orbit->add_option("--mu", orbit_args.mu, "gauge for lift");
  orbit->add_flag("--shape", orbit_args.shape, "CSV of the psi^3 trace instead of the vertices");
  orbit->add_option("--format", orbit_args.format)->check(CLI::IsMember({"csv", "svg", "json"}));
  orbit->add_option("--out", orbit_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", verify_args.suite)
      ->required()
      ->check(CLI::IsMember({"identities", "table1", "fixedpoints", "bclift", "hajja", "tracing"}));
  verify->add_option("--seed", verify_args.seed);
  verify->add_option("--count", verify_args.count);
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "text"}));

  FigureArgs figure_args;
  auto* figure = app.add_subcommand("figure", "Write CSV and SVG data for a figure");
  figure->add_option("name", figure_args.name, "fig1 ... fig11 or all")->required();
  figure->add_option("--out", figure_args.out);
  figure->add_option("--samples", figure_args.samples)->check(CLI::Range(std::size_t{3}, std::size_t{10000000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*apply) run_apply(apply_args, out);
    if (*convert) run_convert(convert_args, out);
    if (*median) run_median(median_args, out);
    if (*shape_cmd) run_shape(shape_args, out);
    if (*orbit) run_orbit(orbit_args, out);
    if (*verify) run_verify(verify_args, out);
    if (*figure) run_figure(figure_args, out);
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cevian
