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

/**
 * @file render.hpp
 * Renderer-neutral figure scenes and their SVG serialization.
 *
 * Simplex scenes carry barycentric positions; the simplex is drawn as a unit
 * segment (radix 2), an equilateral triangle (radix 3) or a fixed
 * orthographic view of the regular tetrahedron (radix 4). Torus-fiber scenes
 * carry the phase coordinates of the non-pivot amplitudes and are drawn as
 * the cut-open fundamental domain of the orbit above `fiber_base`.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric_atlas/linalg.hpp"
#include "toric_atlas/toric.hpp"

namespace toric_atlas {

enum class SceneKind { simplex, torus_fiber };
enum class GeometryMode { unit, affine };

std::string_view to_string(SceneKind k);
std::string_view to_string(GeometryMode m);
SceneKind parse_scene_kind(std::string_view s);
GeometryMode parse_geometry_mode(std::string_view s);

struct Mark {
  std::vector<double> position;
  std::string label;
  std::string style = "point";
  /// Simplex scenes only: draw the mark on a small circle around `position`
  /// at this angle, standing for a point of the phase circle above it.
  std::optional<double> fiber_phase;

  friend bool operator==(const Mark &, const Mark &) = default;
};

struct Segment {
  std::vector<double> from;
  std::vector<double> to;
  std::string style = "segment";

  friend bool operator==(const Segment &, const Segment &) = default;
};

struct FigureScene {
  SceneKind kind = SceneKind::simplex;
  int radix = 3;
  std::string title;
  std::vector<Mark> marks;
  std::vector<Segment> segments;
  /// Simplex scenes: sampled curves in barycentric coordinates.
  std::vector<std::vector<std::vector<double>>> polylines;
  std::optional<SimplexPoint> fiber_base;
  std::size_t fiber_pivot = 0;
  GeometryMode mode = GeometryMode::unit;

  /// Throws AtlasError("simplex") for bad barycentric data and
  /// AtlasError("scene") for any other malformed field.
  void validate(const Tolerances &tol = {}) const;

  friend bool operator==(const FigureScene &, const FigureScene &) = default;
};

using Point2 = std::array<double, 2>;

/// Linear embedding of the standard simplex of the given radix in the plane.
Point2 embed_simplex(int radix, std::span<const double> barycentric);

/**
 * Drawing frame of a torus fiber: which non-pivot phases span the orbit and
 * one edge vector per spanning phase. Unit mode uses unit edges (a cube in
 * oblique view for three phases); affine mode factors the orbit Gram matrix
 * so that edge k has length 2π·sqrt(gram_kk) and the true angles.
 */
struct FiberFrame {
  std::vector<std::size_t> axes;  ///< positions in the non-pivot phase list
  std::vector<Point2> edges;
};

/// Throws AtlasError("unsupported") for affine mode at radix 4.
FiberFrame fiber_frame(const FigureScene &scene, const Tolerances &tol = {});

FigureScene scene_simplex(int radix, std::vector<Mark> marks, std::vector<Segment> segments = {},
                          const Tolerances &tol = {});

/// One mark per point (labels default to ψ1, ψ2, ...). All points must lie
/// above the same convex point with the same pivot.
FigureScene scene_torus_fiber(std::span<const ToricPoint> points, GeometryMode mode = GeometryMode::unit,
                              std::span<const std::string> labels = {}, const Tolerances &tol = {});

/// Standalone SVG 1.1 document; identical scenes give identical bytes.
std::string to_svg(const FigureScene &scene, int width_px = 480, int height_px = 480);

// Prepared scenes for the standard atlas figures.

/// Basis images of QFT3 in the torus above the barycenter, marked A, B, C.
FigureScene qft_fiber_scene();
/// The segment of maximally entangled convex points in the 3-simplex.
FigureScene max_entangled_scene();
/// Wireframe of the separable surface p00·p11 = p01·p10 on a 17×17 grid.
FigureScene separable_surface_scene();
/// The Bell basis on the phase circles above the two edge midpoints.
FigureScene bell_basis_scene();

}  // namespace toric_atlas
