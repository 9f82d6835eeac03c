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
 * @file toric.hpp
 * Toric coordinates on CP^1, CP^2 and CP^3.
 *
 * A pure state (z_0, ..., z_n) is split into a convex part, the measurement
 * probabilities p_i = |z_i|^2 on the standard simplex, and a periodic part,
 * the phases of the z_i relative to the first non-vanishing ("pivot")
 * coordinate. The phases live on the torus orbit above the convex point.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric_atlas/linalg.hpp"

namespace toric_atlas {

/// Barycentric coordinates on the standard simplex.
struct SimplexPoint {
  std::vector<double> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  /// Throws AtlasError("simplex") unless coords are non-negative and sum to 1
  /// within tol.geom.
  void validate(const Tolerances &tol = {}) const;

  friend bool operator==(const SimplexPoint &, const SimplexPoint &) = default;
};

struct ToricPoint {
  std::vector<double> convex;  ///< p_i = |z_i|^2
  std::vector<double> phases;  ///< radians in [0, 2π), relative to the pivot
  std::vector<bool> defined;   ///< false where the amplitude vanishes
  std::size_t pivot = 0;

  std::size_t dim() const noexcept { return convex.size(); }
  SimplexPoint convex_point() const { return {convex}; }
  /// Throws AtlasError("invalid toric point") on any invariant violation.
  void validate(const Tolerances &tol = {}) const;

  friend bool operator==(const ToricPoint &, const ToricPoint &) = default;
};

/**
 * Metric data of the torus orbit above a convex point.
 *
 * Rows and columns of `gram` follow `indices` (the non-pivot coordinates);
 * gram_ii = p_i - p_i^2 and gram_ij = -p_i p_j. Each phase circle has
 * length 2π·sqrt(gram_ii).
 */
struct OrbitGram {
  struct EdgeAngle {
    std::size_t first = 0;   ///< position in `indices`
    std::size_t second = 0;  ///< position in `indices`
    std::optional<double> radians;  ///< absent when either edge is degenerate
  };

  std::vector<std::size_t> indices;
  std::vector<std::vector<double>> gram;
  std::vector<double> edge_lengths;
  std::vector<EdgeAngle> angles;
};

/// A point of C ∪ {∞}.
struct RiemannPoint {
  bool at_infinity = false;
  Complex value{};
};

/// Wraps an angle into [0, 2π).
double wrap_phase(double theta);
/// Distance between two angles on the circle, in [0, π].
double circular_gap(double a, double b);

/**
 * Toric decomposition of a unit state of dimension 2, 3 or 4.
 *
 * The pivot is the first coordinate with modulus above tol.zero. Throws
 * AtlasError("norm") for non-unit input and AtlasError("shape") for an
 * unsupported dimension.
 */
ToricPoint decompose(const CVec &state, const Tolerances &tol = {});

/// Inverse of decompose up to global phase: entries sqrt(p_i)·e^{iθ_i}.
CVec reconstruct(const ToricPoint &point, const Tolerances &tol = {});

/// (x_0, ..., x_n) -> (x_0^2, ..., x_n^2).
SimplexPoint squared_map(std::span<const double> x, const Tolerances &tol = {});

/// Central projection from the origin onto the hyperplane sum t = 1.
SimplexPoint gnomonic(std::span<const double> x, const Tolerances &tol = {});

/**
 * Projection from -e_k onto the tangent hyperplane at +e_k:
 * y_i = 2 x_i / (1 + x_k) for i != k, y_k = 1.
 */
std::vector<double> stereographic(std::span<const double> x, std::size_t pole_axis,
                                  const Tolerances &tol = {});

OrbitGram orbit_gram(const SimplexPoint &convex, std::size_t pivot, const Tolerances &tol = {});

/// (z0, z1) -> z0 / z1, with z1 = 0 sent to ∞. Throws AtlasError("norm") at (0, 0).
RiemannPoint hopf(Complex z0, Complex z1);

}  // namespace toric_atlas
