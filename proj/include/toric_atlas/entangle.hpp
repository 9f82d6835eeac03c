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
 * @file entangle.hpp
 * Two-qubit entanglement: concurrence, Schmidt coefficients, the separable
 * and maximally entangled loci in toric coordinates, and the distance from
 * a state to the nearest product state.
 *
 * Amplitudes are indexed (z00, z01, z10, z11) in math notation. Every
 * quantity here is symmetric under exchanging the two qubits, so states
 * given in engineering notation are first bit-reversed and then treated
 * identically.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "toric_atlas/gates.hpp"
#include "toric_atlas/linalg.hpp"
#include "toric_atlas/toric.hpp"

namespace toric_atlas {

enum class EntanglementClass { separable, partial, maximal };

std::string_view to_string(EntanglementClass c);

inline constexpr double kDefaultClassTolerance = 1e-9;

struct EntanglementReport {
  double concurrence = 0.0;
  std::pair<double, double> schmidt{1.0, 0.0};
  EntanglementClass cls = EntanglementClass::separable;
  bool simplex_on_me_segment = false;   ///< p00 = p11 and p01 = p10
  bool simplex_on_sep_surface = false;  ///< p00·p11 = p01·p10
  /// For maximal states with all amplitudes non-zero:
  /// arg(z00 z11) - arg(z01 z10) ≡ π, to within sqrt(8·tol_class).
  std::optional<bool> phase_condition;
};

/// 2·|z00 z11 - z01 z10|. Throws AtlasError("norm") / AtlasError("shape").
double concurrence(const CVec &s, const Tolerances &tol = {});

/// Singular values of [[z00, z01], [z10, z11]], descending.
std::pair<double, double> schmidt(const CVec &s, const Tolerances &tol = {});

EntanglementReport classify(const CVec &s, double tol_class = kDefaultClassTolerance,
                            const Tolerances &tol = {}, Notation n = Notation::math);

/// Convex part on the segment from (½,0,0,½) to (0,½,½,0) and, away from its
/// endpoints, θ00 + θ11 - θ01 - θ10 ≡ π.
bool me_locus_contains(const ToricPoint &tp, const Tolerances &tol = {});

/// p00·p11 = p01·p10 and, when all p > 0, θ00 + θ11 ≡ θ01 + θ10.
bool sep_locus_contains(const ToricPoint &tp, const Tolerances &tol = {});

/// arccos λ1 (evaluated as atan2(λ2, λ1)), in [0, π/4].
double min_distance_to_separable(const CVec &s, const Tolerances &tol = {});

/// Nearest product state found by direct search, independent of the Schmidt route.
struct SeparableSearch {
  double distance = 0.0;
  CVec product;
  std::array<double, 4> angles{};  ///< (polar, azimuth) of each qubit
};

/**
 * A fixed pool of product states a⊗b, drawn uniformly on S²×S² from a
 * seed. `minimize` scans the pool for the best overlap with a state and
 * refines the winner by a shrinking pattern search over the four angles.
 * The pool is immutable, so one sampler may serve concurrent callers.
 */
class ProductStateSampler {
 public:
  ProductStateSampler(std::size_t samples, std::uint64_t seed);

  std::size_t size() const noexcept { return angles_.size(); }
  SeparableSearch minimize(const CVec &s, const Tolerances &tol = {}) const;

 private:
  std::vector<std::array<double, 4>> angles_;
  std::vector<std::array<Complex, 4>> states_;
};

/// Product state (cos(α/2), e^{iφ} sin(α/2)) ⊗ (cos(β/2), e^{iψ} sin(β/2)).
CVec product_state(const std::array<double, 4> &angles);

/// The four Bell states ordered Φ+, Φ-, Ψ+, Ψ-.
std::vector<CVec> bell_basis(Notation n = Notation::math);

}  // namespace toric_atlas
