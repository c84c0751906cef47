#include "cevian/figures.hpp"

#include "cevian/export.hpp"
#include "cevian/parse.hpp"

namespace cevian {

namespace {

const Triple<Approx> kRouthBase{0.0, 1.0, Approx(0.7, 0.5)};

FigurePanel static_panel(const std::string& name, const std::vector<NamedTriangle>& triangles) {
  SvgScene scene;
  scene.highlighted = triangles;
  return {name, triangles_csv(triangles), render_svg(scene)};
}

/// Base triangle, its cevian image and the median triangle for `label`, all
/// at (p, q) = (4/5, (2+4i)/3).
FigurePanel cevian_and_median(const std::string& name, const char* label) {
  const Triple<Cyc12> base = parse_triple("(0, 1, (7+8i)/10)");
  const PQPair<Cyc12> pq{Cyc12(Rational(4, 5)), parse_cyc12("(2+4i)/3")};
  const Triple<Cyc12> cevian = from_pq(pq)(base);
  const Triple<Cyc12> median = median_apply(MedianLabel::parse(label), eta_from_pq(pq), base);
  return static_panel(name, {{"base", downcast(base)},
                             {"cevian", downcast(cevian)},
                             {std::string("median") + label, downcast(median)}});
}

FigurePanel orbit_panel(const std::string& name, const OrbitFamily& family, std::size_t samples,
                        bool show_base) {
  const auto data = sample(family, samples);
  SvgScene scene = orbit_scene(data, std::max<std::size_t>(1, samples / 12));
  if (show_base) scene.highlighted.push_back({"base", family.base});
  return {name, orbit_csv(data), render_svg(scene)};
}

std::string suffixed(const std::string& name, std::size_t k) { return name + static_cast<char>('a' + k); }

}  // namespace

std::vector<std::string> figure_names() {
  std::vector<std::string> out;
  for (int k = 1; k <= 11; ++k) out.push_back("fig" + std::to_string(k));
  return out;
}

std::vector<FigurePanel> render_figure(const std::string& name, std::size_t samples) {
  if (name == "fig1") return {cevian_and_median(name, "00/01")};
  if (name == "fig2") return {cevian_and_median(name, "01/01")};
  if (name == "fig3") return {cevian_and_median(name, "02/01")};
  if (name == "fig4") {
    const struct {
      const char* label;
      long p_num, p_den, q_num, q_den;
    } panels[] = {{"00/01", 4, 5, 2, 3}, {"00/02", 2, 3, 1, 3}, {"01/10", 1, 5, 1, 3},
                  {"02/21", 2, 3, 4, 5}, {"02/20", 1, 3, 2, 3}, {"01/12", 1, 3, 1, 5}};
    std::vector<FigurePanel> out;
    const Triple<Cyc12> base = parse_triple("(0, 1, 7/10 + 1/2 i)");
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& pn = panels[k];
      const PQPair<Cyc12> pq{Cyc12(Rational(pn.p_num, pn.p_den)), Cyc12(Rational(pn.q_num, pn.q_den))};
      const Triple<Cyc12> image = median_apply(MedianLabel::parse(pn.label), eta_from_pq(pq), base);
      out.push_back(static_panel(suffixed(name, k), {{"base", downcast(base)}, {"routh", downcast(image)}}));
    }
    return out;
  }
  if (name == "fig5") {
    const auto data = sample(steiner_family(), 17);
    return {{name, orbit_csv(data), render_svg(orbit_scene(data, 1))}};
  }
  const struct {
    const char* fig;
    int m[2];
    int n[2];
  } pairs[] = {{"fig6", {1, 1}, {2, -4}}, {"fig7", {8, -7}, {1, 1}}, {"fig8", {7, -5}, {2, 2}}};
  for (const auto& pr : pairs) {
    if (name != pr.fig) continue;
    std::vector<FigurePanel> out;
    for (std::size_t k = 0; k < 2; ++k) {
      out.push_back(orbit_panel(suffixed(name, k), single_frequency_family(pr.m[k], pr.n[k], kRouthBase), samples,
                                false));
    }
    return out;
  }
  if (name == "fig9") return {orbit_panel(name, median_orbit_family(0), samples, true)};
  if (name == "fig10") return {orbit_panel(name, figure8_family(), samples, false)};
  if (name == "fig11") return {orbit_panel(name, median_figure8_family(), samples, true)};
  throw InvalidArgument("unknown figure '" + name + "' (expected fig1 ... fig11)");
}

}  // namespace cevian
