#include "cevian/export.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

namespace cevian {

std::string format_number(double x, int digits) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string orbit_csv(const std::vector<OrbitSample>& samples) {
  std::ostringstream out;
  out << "t,vertex,re,im\n";
  for (const auto& s : samples) {
    for (std::size_t k = 0; k < 3; ++k) {
      out << format_number(s.t) << ',' << k << ',' << format_number(s.triple[k].re()) << ','
          << format_number(s.triple[k].im()) << '\n';
    }
  }
  return out.str();
}

std::string triangles_csv(const std::vector<NamedTriangle>& triangles) {
  std::ostringstream out;
  out << "triangle,vertex,re,im\n";
  for (const auto& [name, d] : triangles) {
    for (std::size_t k = 0; k < 3; ++k) {
      out << name << ',' << k << ',' << format_number(d[k].re()) << ',' << format_number(d[k].im()) << '\n';
    }
  }
  return out.str();
}

std::string shape_csv(const std::vector<ShapeSample>& trace) {
  std::ostringstream out;
  out << "t,re,im\n";
  for (const auto& s : trace) {
    out << format_number(s.t) << ',';
    if (s.psi_cubed.is_infinity()) {
      out << "inf,inf\n";
    } else {
      const Approx v = s.psi_cubed.value();
      out << format_number(v.re()) << ',' << format_number(v.im()) << '\n';
    }
  }
  return out.str();
}

namespace {

constexpr const char* kVertexColours[3] = {"#d62728", "#2ca02c", "#1f77b4"};
constexpr const char* kHighlightColours[4] = {"#000000", "#d62728", "#1f77b4", "#2ca02c"};

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Approx& z) {
    min_x = std::min(min_x, z.re());
    max_x = std::max(max_x, z.re());
    // SVG y grows downwards
    min_y = std::min(min_y, -z.im());
    max_y = std::max(max_y, -z.im());
  }
};

std::string point(const Approx& z) { return format_number(z.re(), 6) + "," + format_number(-z.im(), 6); }

std::string polygon(const Triple<Approx>& d) { return point(d[0]) + " " + point(d[1]) + " " + point(d[2]); }

}  // namespace

std::string render_svg(const SvgScene& scene) {
  Bounds b;
  for (const auto& path : scene.trajectories) {
    for (const auto& z : path) b.add(z);
  }
  for (const auto& d : scene.snapshots) {
    for (std::size_t k = 0; k < 3; ++k) b.add(d[k]);
  }
  for (const auto& [name, d] : scene.highlighted) {
    for (std::size_t k = 0; k < 3; ++k) b.add(d[k]);
  }
  if (b.min_x > b.max_x) {
    b = Bounds{-1.0, -1.0, 1.0, 1.0};
  }
  const double span = std::max({b.max_x - b.min_x, b.max_y - b.min_y, 1e-9});
  const double margin = 0.05 * span;
  const double x0 = b.min_x - margin;
  const double y0 = b.min_y - margin;
  const double w = b.max_x - b.min_x + 2.0 * margin;
  const double h = b.max_y - b.min_y + 2.0 * margin;
  const std::string stroke = format_number(span / 400.0, 6);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(x0, 6) << ' '
      << format_number(y0, 6) << ' ' << format_number(w, 6) << ' ' << format_number(h, 6)
      << "\" width=\"600\" height=\"" << format_number(600.0 * h / w, 6) << "\">\n";
  out << "<rect x=\"" << format_number(x0, 6) << "\" y=\"" << format_number(y0, 6) << "\" width=\""
      << format_number(w, 6) << "\" height=\"" << format_number(h, 6) << "\" fill=\"#ffffff\"/>\n";
  for (const auto& d : scene.snapshots) {
    out << "<polygon points=\"" << polygon(d) << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" << stroke
        << "\"/>\n";
  }
  for (std::size_t k = 0; k < scene.trajectories.size(); ++k) {
    out << "<polyline points=\"";
    const auto& path = scene.trajectories[k];
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (j > 0) out << ' ';
      out << point(path[j]);
    }
    out << "\" fill=\"none\" stroke=\"" << kVertexColours[k % 3] << "\" stroke-width=\"" << stroke << "\"/>\n";
  }
  for (std::size_t k = 0; k < scene.highlighted.size(); ++k) {
    const auto& [name, d] = scene.highlighted[k];
    out << "<polygon points=\"" << polygon(d) << "\" fill=\"none\" stroke=\"" << kHighlightColours[k % 4]
        << "\" stroke-width=\"" << format_number(span / 200.0, 6) << "\"><title>" << name << "</title></polygon>\n";
  }
  out << "</svg>\n";
  return out.str();
}

SvgScene orbit_scene(const std::vector<OrbitSample>& samples, std::size_t snapshot_every) {
  SvgScene scene;
  scene.trajectories.resize(3);
  for (const auto& s : samples) {
    for (std::size_t k = 0; k < 3; ++k) scene.trajectories[k].push_back(s.triple[k]);
  }
  // close the loops: the families have period 1
  if (!samples.empty()) {
    for (std::size_t k = 0; k < 3; ++k) scene.trajectories[k].push_back(samples.front().triple[k]);
  }
  if (snapshot_every > 0) {
    for (std::size_t j = 0; j < samples.size(); j += snapshot_every) scene.snapshots.push_back(samples[j].triple);
  }
  return scene;
}

}  // namespace cevian
