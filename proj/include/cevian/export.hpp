#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cevian/orbit.hpp"

namespace cevian {

/// Fixed-precision number formatting shared by the CSV and SVG writers;
/// negative zero prints as 0.
std::string format_number(double x, int digits = 10);

/// Header "t,vertex,re,im", one row per vertex per sample.
std::string orbit_csv(const std::vector<OrbitSample>& samples);

using NamedTriangle = std::pair<std::string, Triple<Approx>>;

/// Header "triangle,vertex,re,im" for static pictures.
std::string triangles_csv(const std::vector<NamedTriangle>& triangles);

/// Header "t,re,im": the psi^3 trace ("inf" rows for infinite values).
std::string shape_csv(const std::vector<ShapeSample>& trace);

/// Picture contents: vertex trajectories and triangle outlines.
struct SvgScene {
  std::vector<std::vector<Approx>> trajectories;  // one polyline per vertex
  std::vector<Triple<Approx>> snapshots;          // thin grey triangles
  std::vector<NamedTriangle> highlighted;         // drawn on top, one colour each
};

/// Deterministic SVG; viewBox is the data bounds plus a 5% margin, with the
/// imaginary axis pointing up.
std::string render_svg(const SvgScene& scene);

/// Trajectories of all samples plus a snapshot every `snapshot_every` samples
/// (0 disables snapshots).
SvgScene orbit_scene(const std::vector<OrbitSample>& samples, std::size_t snapshot_every);

}  // namespace cevian
