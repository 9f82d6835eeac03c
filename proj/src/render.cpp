// Copyright 2026 The Toric Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toric_atlas/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "toric_atlas/errors.hpp"
#include "toric_atlas/entangle.hpp"
#include "toric_atlas/gates.hpp"

namespace toric_atlas {
namespace {

constexpr double kMarkRadius = 4.0;
constexpr double kFiberCircleRadius = 16.0;
constexpr double kMargin = 48.0;
constexpr double kTitleBand = 24.0;

// Regular tetrahedron, viewed orthographically along kViewDirection with
// the z axis kept vertical. The edge midpoints (0,0,±1) of the |00⟩-|11⟩
// and |01⟩-|10⟩ edges therefore sit on one vertical line.
constexpr std::array<std::array<double, 3>, 4> kTetrahedron = {{
    {1.0, 1.0, 1.0}, {1.0, -1.0, -1.0}, {-1.0, 1.0, -1.0}, {-1.0, -1.0, 1.0}}};
constexpr std::array<double, 3> kViewDirection = {1.0, 0.35, 0.3};

struct ViewBasis {
  std::array<double, 3> right;
  std::array<double, 3> up;
};

ViewBasis view_basis() {
  auto normalize = [](std::array<double, 3> v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return std::array<double, 3>{v[0] / n, v[1] / n, v[2] / n};
  };
  auto cross = [](const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  const auto d = normalize(kViewDirection);
  const auto right = normalize(cross({0.0, 0.0, 1.0}, d));
  return {right, cross(d, right)};
}

Point2 simplex_vertex(int radix, std::size_t i) {
  switch (radix) {
    case 2: return {static_cast<double>(i), 0.0};
    case 3: {
      constexpr std::array<Point2, 3> tri = {{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::numbers::sqrt3 / 2.0}}};
      return tri[i];
    }
    case 4: {
      static const ViewBasis basis = view_basis();
      const auto &v = kTetrahedron[i];
      return {v[0] * basis.right[0] + v[1] * basis.right[1] + v[2] * basis.right[2],
              v[0] * basis.up[0] + v[1] * basis.up[1] + v[2] * basis.up[2]};
    }
    default: throw AtlasError("scene", "radix must be 2, 3 or 4");
  }
}

std::string vertex_label(int radix, std::size_t i) {
  if (radix == 4) return fmt::format("|{}{}⟩", i >> 1, i & 1);
  return fmt::format("|{}⟩", i);
}

void require_style(const std::string &style) {
  const bool ok = !style.empty() && std::all_of(style.begin(), style.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  });
  if (!ok) throw AtlasError("scene", "style must be a non-empty [A-Za-z0-9_-] token");
}

void require_barycentric(int radix, const std::vector<double> &p, const Tolerances &tol) {
  if (p.size() != static_cast<std::size_t>(radix)) {
    throw AtlasError("simplex", fmt::format("expected {} barycentric coordinates, got {}", radix, p.size()));
  }
  SimplexPoint{p}.validate(tol);
}

void require_phases(int radix, const std::vector<double> &p) {
  if (p.size() != static_cast<std::size_t>(radix - 1)) {
    throw AtlasError("scene", fmt::format("expected {} fiber phases, got {}", radix - 1, p.size()));
  }
  for (double t : p)
    if (!std::isfinite(t) || t < 0.0 || t >= kTwoPi) throw AtlasError("scene", "fiber phase outside [0, 2pi)");
}

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  return fmt::format("{:.6f}", v);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Maps drawing coordinates (y up) to SVG pixels (y down), fitting the box.
class Viewport {
 public:
  Viewport(const std::vector<Point2> &content, int width, int height) : height_(height) {
    double minx = std::numeric_limits<double>::infinity(), maxx = -minx, miny = minx, maxy = -minx;
    for (const auto &p : content) {
      minx = std::min(minx, p[0]);
      maxx = std::max(maxx, p[0]);
      miny = std::min(miny, p[1]);
      maxy = std::max(maxy, p[1]);
    }
    const double bw = std::max(maxx - minx, 1e-12), bh = std::max(maxy - miny, 1e-12);
    const double avail_w = std::max(width - 2.0 * kMargin, 1.0);
    const double avail_h = std::max(height - 2.0 * kMargin - kTitleBand, 1.0);
    scale_ = std::min(avail_w / bw, avail_h / bh);
    if (maxx - minx < 1e-9 && maxy - miny < 1e-9) scale_ = 1.0;
    offset_x_ = width / 2.0 - scale_ * (minx + maxx) / 2.0;
    offset_y_ = (height + kTitleBand) / 2.0 + scale_ * (miny + maxy) / 2.0;
  }

  Point2 operator()(const Point2 &p) const { return {offset_x_ + scale_ * p[0], offset_y_ - scale_ * p[1]}; }
  int height() const { return height_; }

 private:
  int height_;
  double scale_ = 1.0;
  double offset_x_ = 0.0;
  double offset_y_ = 0.0;
};

Point2 fiber_point(const FiberFrame &frame, const std::vector<double> &phases) {
  Point2 p{0.0, 0.0};
  for (std::size_t k = 0; k < frame.axes.size(); ++k) {
    const double t = phases[frame.axes[k]] / kTwoPi;
    p[0] += t * frame.edges[k][0];
    p[1] += t * frame.edges[k][1];
  }
  return p;
}

std::vector<Point2> domain_corners(const FiberFrame &frame) {
  const std::size_t n = frame.edges.size();
  std::vector<Point2> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point2 p{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) {
        p[0] += frame.edges[k][0];
        p[1] += frame.edges[k][1];
      }
    corners.push_back(p);
  }
  return corners;
}

void line(std::string &out, const Point2 &a, const Point2 &b, std::string_view cls) {
  out += fmt::format("<line class=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", cls, num(a[0]), num(a[1]),
                     num(b[0]), num(b[1]));
}

void text(std::string &out, const Point2 &at, std::string_view cls, std::string_view body,
          std::string_view anchor = "middle") {
  out += fmt::format("<text class=\"{}\" x=\"{}\" y=\"{}\" text-anchor=\"{}\">{}</text>\n", cls, num(at[0]),
                     num(at[1]), anchor, xml_escape(body));
}

void mark(std::string &out, const Point2 &at, const Mark &m) {
  out += fmt::format("<circle class=\"mark {}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", m.style, num(at[0]), num(at[1]),
                     num(kMarkRadius));
  if (!m.label.empty()) text(out, {at[0] + 7.0, at[1] - 7.0}, "mark-label", m.label, "start");
}

constexpr std::string_view kStyleSheet =
    "<style>\n"
    "line{stroke:#000000;stroke-width:1}\n"
    ".outline{stroke:#333333;stroke-width:1.5}\n"
    ".tick{stroke:#333333;stroke-width:1.5}\n"
    ".segment{stroke:#1f77b4;stroke-width:2}\n"
    ".locus{stroke:#d62728;stroke-width:2.5}\n"
    ".surface{fill:none;stroke:#9467bd;stroke-width:0.6}\n"
    ".fiber-circle{fill:none;stroke:#7f7f7f;stroke-dasharray:3,2}\n"
    ".mark{fill:#1f77b4;stroke:#000000;stroke-width:0.5}\n"
    ".bell{fill:#d62728}\n"
    ".identified{fill:#ffffff;stroke:#333333}\n"
    "text{font-family:sans-serif;font-size:12px}\n"
    ".title{font-size:14px}\n"
    "</style>\n";

void render_simplex(std::string &out, const FigureScene &scene, const Viewport &vp) {
  const int radix = scene.radix;
  auto at = [&](const std::vector<double> &bary) { return vp(embed_simplex(radix, bary)); };

  out += "<g class=\"simplex\">\n";
  for (std::size_t i = 0; i < static_cast<std::size_t>(radix); ++i)
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(radix); ++j)
      line(out, vp(simplex_vertex(radix, i)), vp(simplex_vertex(radix, j)), "outline");
  Point2 centroid{0.0, 0.0};
  for (std::size_t i = 0; i < static_cast<std::size_t>(radix); ++i) {
    const auto v = vp(simplex_vertex(radix, i));
    centroid[0] += v[0] / radix;
    centroid[1] += v[1] / radix;
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(radix); ++i) {
    const auto v = vp(simplex_vertex(radix, i));
    double dx = v[0] - centroid[0], dy = v[1] - centroid[1];
    const double n = std::hypot(dx, dy);
    if (n > 0.0) {
      dx /= n;
      dy /= n;
    } else {
      dx = 0.0;
      dy = 1.0;
    }
    if (radix == 2) {
      dx = 0.0;
      dy = 1.0;
    }
    text(out, {v[0] + 18.0 * dx, v[1] + 18.0 * dy + 4.0}, "vertex-label", vertex_label(radix, i));
  }
  out += "</g>\n";

  if (!scene.polylines.empty()) {
    out += "<g class=\"polylines\">\n";
    for (const auto &poly : scene.polylines) {
      std::string pts;
      for (const auto &p : poly) {
        const auto q = at(p);
        if (!pts.empty()) pts += ' ';
        pts += num(q[0]) + "," + num(q[1]);
      }
      out += fmt::format("<polyline class=\"surface\" points=\"{}\"/>\n", pts);
    }
    out += "</g>\n";
  }

  out += "<g class=\"segments\">\n";
  for (const auto &s : scene.segments) line(out, at(s.from), at(s.to), s.style);
  out += "</g>\n<g class=\"marks\">\n";
  std::set<std::pair<std::string, std::string>> circles;
  for (const auto &m : scene.marks) {
    const auto c = at(m.position);
    if (!m.fiber_phase) {
      mark(out, c, m);
      continue;
    }
    if (circles.insert({num(c[0]), num(c[1])}).second) {
      out += fmt::format("<circle class=\"fiber-circle\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(c[0]), num(c[1]),
                         num(kFiberCircleRadius));
    }
    const double phi = *m.fiber_phase;
    mark(out, {c[0] + kFiberCircleRadius * std::cos(phi), c[1] - kFiberCircleRadius * std::sin(phi)}, m);
  }
  out += "</g>\n";
}

void render_fiber(std::string &out, const FigureScene &scene, const FiberFrame &frame, const Viewport &vp) {
  const std::size_t n = frame.edges.size();
  out += "<g class=\"fiber-domain\">\n";
  const auto corners = domain_corners(frame);
  if (n == 0) {
    out += fmt::format("<circle class=\"identified\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(vp(corners[0])[0]),
                       num(vp(corners[0])[1]), num(kMarkRadius + 3.0));
  }
  // Edges of the cut-open box, with k+1 ticks on every edge parallel to
  // axis k: equally ticked edges are identified.
  for (std::size_t mask = 0; mask < corners.size(); ++mask) {
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) continue;
      const auto a = vp(corners[mask]);
      const auto b = vp(corners[mask | (std::size_t{1} << k)]);
      line(out, a, b, "outline");
      const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
      if (len <= 0.0) continue;
      const double ux = (b[0] - a[0]) / len, uy = (b[1] - a[1]) / len;
      for (std::size_t t = 0; t <= k; ++t) {
        const double shift = (static_cast<double>(t) - static_cast<double>(k) / 2.0) * 5.0;
        const Point2 mid{(a[0] + b[0]) / 2.0 + ux * shift, (a[1] + b[1]) / 2.0 + uy * shift};
        line(out, {mid[0] - 5.0 * uy, mid[1] + 5.0 * ux}, {mid[0] + 5.0 * uy, mid[1] - 5.0 * ux}, "tick");
      }
    }
  }
  if (n == 1) {
    for (const auto &c : corners)
      out += fmt::format("<circle class=\"identified\" cx=\"{}\" cy=\"{}\" r=\"3.000000\"/>\n", num(vp(c)[0]),
                         num(vp(c)[1]));
  }
  out += "</g>\n<g class=\"segments\">\n";
  for (const auto &s : scene.segments) line(out, vp(fiber_point(frame, s.from)), vp(fiber_point(frame, s.to)), s.style);
  out += "</g>\n<g class=\"marks\">\n";
  for (const auto &m : scene.marks) mark(out, vp(fiber_point(frame, m.position)), m);
  out += "</g>\n";
}

}  // namespace

std::string_view to_string(SceneKind k) { return k == SceneKind::simplex ? "simplex" : "torus_fiber"; }
std::string_view to_string(GeometryMode m) { return m == GeometryMode::unit ? "unit" : "affine"; }

SceneKind parse_scene_kind(std::string_view s) {
  if (s == "simplex") return SceneKind::simplex;
  if (s == "torus_fiber" || s == "fiber") return SceneKind::torus_fiber;
  throw AtlasError("scene", "unknown scene kind '" + std::string(s) + "'");
}

GeometryMode parse_geometry_mode(std::string_view s) {
  if (s == "unit") return GeometryMode::unit;
  if (s == "affine") return GeometryMode::affine;
  throw AtlasError("scene", "unknown geometry mode '" + std::string(s) + "'");
}

void FigureScene::validate(const Tolerances &tol) const {
  if (radix < 2 || radix > 4) throw AtlasError("scene", "radix must be 2, 3 or 4");
  for (const auto &m : marks) require_style(m.style);
  for (const auto &s : segments) require_style(s.style);

  if (kind == SceneKind::simplex) {
    for (const auto &m : marks) {
      require_barycentric(radix, m.position, tol);
      if (m.fiber_phase && !std::isfinite(*m.fiber_phase)) throw AtlasError("scene", "non-finite fiber phase");
    }
    for (const auto &s : segments) {
      require_barycentric(radix, s.from, tol);
      require_barycentric(radix, s.to, tol);
    }
    for (const auto &poly : polylines)
      for (const auto &p : poly) require_barycentric(radix, p, tol);
    return;
  }

  if (!fiber_base) throw AtlasError("scene", "torus_fiber scene needs fiber_base");
  require_barycentric(radix, fiber_base->coords, tol);
  if (fiber_pivot >= static_cast<std::size_t>(radix)) throw AtlasError("scene", "fiber_pivot out of range");
  if (!(std::sqrt(std::max(fiber_base->coords[fiber_pivot], 0.0)) > tol.zero)) {
    throw AtlasError("scene", "fiber_pivot must index a non-vanishing coordinate");
  }
  if (!polylines.empty()) throw AtlasError("scene", "polylines are only drawn in simplex scenes");
  for (const auto &m : marks) {
    require_phases(radix, m.position);
    if (m.fiber_phase) throw AtlasError("scene", "fiber_phase is only meaningful in simplex scenes");
  }
  for (const auto &s : segments) {
    require_phases(radix, s.from);
    require_phases(radix, s.to);
  }
  if (mode == GeometryMode::affine && radix == 4) {
    throw AtlasError("unsupported", "affine fiber geometry is drawn for radix 2 and 3 only");
  }
}

Point2 embed_simplex(int radix, std::span<const double> barycentric) {
  if (barycentric.size() != static_cast<std::size_t>(radix)) throw AtlasError("simplex", "coordinate count != radix");
  Point2 p{0.0, 0.0};
  for (std::size_t i = 0; i < barycentric.size(); ++i) {
    const auto v = simplex_vertex(radix, i);
    p[0] += barycentric[i] * v[0];
    p[1] += barycentric[i] * v[1];
  }
  return p;
}

FiberFrame fiber_frame(const FigureScene &scene, const Tolerances &tol) {
  if (scene.kind != SceneKind::torus_fiber || !scene.fiber_base) throw AtlasError("scene", "not a torus_fiber scene");
  if (scene.mode == GeometryMode::affine && scene.radix == 4) {
    throw AtlasError("unsupported", "affine fiber geometry is drawn for radix 2 and 3 only");
  }
  const auto &base = scene.fiber_base->coords;
  FiberFrame frame;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i == scene.fiber_pivot) continue;
    if (std::sqrt(std::max(base[i], 0.0)) > tol.zero) frame.axes.push_back(pos);
    ++pos;
  }

  if (scene.mode == GeometryMode::unit) {
    constexpr std::array<Point2, 3> unit = {{{1.0, 0.0}, {0.0, 1.0}, {0.45, 0.3}}};
    for (std::size_t k = 0; k < frame.axes.size(); ++k) frame.edges.push_back(unit[k]);
    return frame;
  }

  const OrbitGram og = orbit_gram(*scene.fiber_base, scene.fiber_pivot, tol);
  if (frame.axes.size() == 1) {
    frame.edges.push_back({og.edge_lengths[frame.axes[0]], 0.0});
  } else if (frame.axes.size() == 2) {
    const double g11 = og.gram[frame.axes[0]][frame.axes[0]];
    const double g12 = og.gram[frame.axes[0]][frame.axes[1]];
    const double g22 = og.gram[frame.axes[1]][frame.axes[1]];
    const double l11 = std::sqrt(g11);
    frame.edges.push_back({kTwoPi * l11, 0.0});
    frame.edges.push_back({kTwoPi * g12 / l11, kTwoPi * std::sqrt(std::max(g22 - g12 * g12 / g11, 0.0))});
  }
  return frame;
}

FigureScene scene_simplex(int radix, std::vector<Mark> marks, std::vector<Segment> segments, const Tolerances &tol) {
  FigureScene scene;
  scene.kind = SceneKind::simplex;
  scene.radix = radix;
  scene.marks = std::move(marks);
  scene.segments = std::move(segments);
  scene.validate(tol);
  return scene;
}

FigureScene scene_torus_fiber(std::span<const ToricPoint> points, GeometryMode mode,
                              std::span<const std::string> labels, const Tolerances &tol) {
  if (points.empty()) throw AtlasError("scene", "at least one toric point is required");
  for (const auto &p : points) p.validate(tol);
  const auto &first = points.front();
  for (const auto &p : points) {
    if (p.dim() != first.dim() || p.pivot != first.pivot) {
      throw AtlasError("scene", "all points must share dimension and pivot");
    }
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (std::abs(p.convex[i] - first.convex[i]) > tol.geom) {
        throw AtlasError("scene", "all points must lie above the same convex point");
      }
  }

  FigureScene scene;
  scene.kind = SceneKind::torus_fiber;
  scene.radix = static_cast<int>(first.dim());
  scene.fiber_base = first.convex_point();
  scene.fiber_pivot = first.pivot;
  scene.mode = mode;
  for (std::size_t k = 0; k < points.size(); ++k) {
    Mark m;
    for (std::size_t i = 0; i < points[k].dim(); ++i)
      if (i != first.pivot) m.position.push_back(points[k].defined[i] ? points[k].phases[i] : 0.0);
    if (k < labels.size()) {
      m.label = labels[k];
    } else {
      m.label = points.size() == 1 ? "ψ" : fmt::format("ψ{}", k + 1);
    }
    scene.marks.push_back(std::move(m));
  }
  scene.validate(tol);
  return scene;
}

std::string to_svg(const FigureScene &scene, int width_px, int height_px) {
  if (width_px <= 0 || height_px <= 0) throw AtlasError("shape", "image dimensions must be positive");
  scene.validate();

  std::vector<Point2> content;
  FiberFrame frame;
  if (scene.kind == SceneKind::simplex) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(scene.radix); ++i)
      content.push_back(simplex_vertex(scene.radix, i));
  } else {
    frame = fiber_frame(scene);
    content = domain_corners(frame);
  }
  const Viewport vp(content, width_px, height_px);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      width_px, height_px);
  out += kStyleSheet;
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", width_px, height_px);
  if (!scene.title.empty()) text(out, {width_px / 2.0, 20.0}, "title", scene.title);

  if (scene.kind == SceneKind::simplex) {
    render_simplex(out, scene, vp);
  } else {
    render_fiber(out, scene, frame, vp);
  }
  out += "</svg>\n";
  return out;
}

FigureScene qft_fiber_scene() {
  const auto qft = find_gate(3, "QFT3");
  const std::vector<GateMatrix> gates = {*qft};
  const auto images = barycenter_image(gates);
  const std::vector<std::string> labels = {"A", "B", "C"};
  FigureScene scene = scene_torus_fiber(images, GeometryMode::unit, labels);
  scene.title = "QFT3 basis images in the torus above the barycenter";
  for (std::size_t k = 0; k < 3; ++k) {
    scene.segments.push_back({scene.marks[k].position, scene.marks[(k + 1) % 3].position, "segment"});
  }
  return scene;
}

FigureScene max_entangled_scene() {
  const std::vector<double> outer = {0.5, 0.0, 0.0, 0.5}, inner = {0.0, 0.5, 0.5, 0.0};
  FigureScene scene = scene_simplex(4,
                                    {Mark{outer, "(|00⟩,|11⟩) uniform", "point", std::nullopt},
                                     Mark{inner, "(|01⟩,|10⟩) uniform", "point", std::nullopt}},
                                    {Segment{outer, inner, "locus"}});
  scene.title = "Maximally entangled states lie above this segment";
  return scene;
}

FigureScene separable_surface_scene() {
  constexpr int kGrid = 17;
  FigureScene scene;
  scene.kind = SceneKind::simplex;
  scene.radix = 4;
  scene.title = "Separable states lie above the surface p00 p11 = p01 p10";
  auto point = [](double a, double b) {
    return std::vector<double>{a * b, a * (1.0 - b), (1.0 - a) * b, (1.0 - a) * (1.0 - b)};
  };
  for (int family = 0; family < 2; ++family) {
    for (int i = 0; i < kGrid; ++i) {
      std::vector<std::vector<double>> poly;
      const double fixed = static_cast<double>(i) / (kGrid - 1);
      for (int j = 0; j < kGrid; ++j) {
        const double moving = static_cast<double>(j) / (kGrid - 1);
        poly.push_back(family == 0 ? point(fixed, moving) : point(moving, fixed));
      }
      scene.polylines.push_back(std::move(poly));
    }
  }
  scene.validate();
  return scene;
}

FigureScene bell_basis_scene() {
  const std::vector<std::string> names = {"Φ+", "Φ-", "Ψ+", "Ψ-"};
  const auto bells = bell_basis(Notation::math);
  std::vector<Mark> marks;
  for (std::size_t k = 0; k < bells.size(); ++k) {
    const ToricPoint tp = decompose(bells[k]);
    std::optional<double> phase;
    for (std::size_t i = tp.pivot + 1; i < tp.dim(); ++i)
      if (tp.defined[i]) phase = tp.phases[i];
    marks.push_back(Mark{tp.convex, names[k], "bell", phase});
  }
  FigureScene scene = scene_simplex(4, std::move(marks));
  scene.title = "The Bell basis on the phase circles above two edge midpoints";
  return scene;
}

}  // namespace toric_atlas
