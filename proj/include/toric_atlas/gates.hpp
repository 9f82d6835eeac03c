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
 * @file gates.hpp
 * Named gates for radix 2, 3 and 4 and gate-level predicates.
 *
 * Matrices are stored unitary; `printed()` recovers the customary
 * unnormalized form by dividing out `printed_scalar` (1/√2 for H and the
 * EPR transform, 1/√3 for the radix-3 uniformizers).
 *
 * Two-qubit matrices are written in math notation (basis string read left
 * to right, index 2·q0 + q1) and converted to engineering notation by
 * conjugating with the bit-reversal permutation.
 */
#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric_atlas/linalg.hpp"
#include "toric_atlas/toric.hpp"

namespace toric_atlas {

enum class Notation { math, engineering };

std::string_view to_string(Notation n);
/// Accepts "math" / "engineering" (also "eng"). Throws AtlasError("notation").
Notation parse_notation(std::string_view s);

enum class GateTag { pauli, rotation, diagonal, shift, chrestenson, uniformizer, controlled, composite };

std::string_view to_string(GateTag t);
std::optional<GateTag> parse_gate_tag(std::string_view s);

struct GateMatrix {
  std::string name;
  int radix = 2;
  CMat matrix;
  double printed_scalar = 1.0;
  std::set<GateTag> tags;

  bool has_tag(GateTag t) const { return tags.contains(t); }
  CMat printed() const { return Complex(1.0 / printed_scalar) * matrix; }
};

/// 4×4 permutation swapping |01⟩ and |10⟩.
CMat bit_reversal();
CMat to_notation(const CMat &math_form, Notation n);
CVec to_notation(const CVec &math_form, Notation n);

/**
 * Basis state labelled by a digit string: one digit for radix 2/3, two
 * bits for radix 4 (interpreted in the given notation).
 */
CVec basis_state(int radix, std::string_view label, Notation n = Notation::math);

/**
 * The gate catalog.
 *
 * radix 2: I, X, Y, Z, H, S, T, SqrtX.
 * radix 3: I, SHIFT+1, SHIFT+2, the Chrestenson gates QFT3, QFT3_012,
 *          QFT3_021, six further uniformizers UNIF_W_{0,1,2} and
 *          UNIF_W2_{0,1,2}, and the 36 diagonal gates D(1,a,b).
 * radix 4: I, CNOT_paper, CNOT, IxH, EPR (active notation), EPR_math,
 *          BELL_PHI+, BELL_PHI-, BELL_PSI+, BELL_PSI- (preparations from |00⟩).
 */
std::vector<GateMatrix> catalog(int radix, Notation n = Notation::math);

std::optional<GateMatrix> find_gate(int radix, std::string_view name, Notation n = Notation::math);

/// True when z is 0, a 24th root of unity, or (±1 ± i)/2.
bool is_natural_entry(Complex z, double tol = 1e-12);

/// g.matrix · s. Throws AtlasError("shape") / AtlasError("norm").
CVec apply(const GateMatrix &g, const CVec &s, const Tolerances &tol = {});

/// Every entry has modulus 1/√d. Throws AtlasError("unitary") for non-unitary input.
bool is_uniformizing(const CMat &m, const Tolerances &tol = {});

struct ChrestensonReport {
  int order = 0;
  bool square_is_permutation = false;
  bool square_is_transposition = false;
  std::vector<std::size_t> square_cycle;  ///< image of each basis index under the square
};

/// Order (smallest k <= 8 with c^k = I) and the structure of c². Throws
/// AtlasError("not periodic") when no such k exists.
ChrestensonReport chrestenson_properties(const GateMatrix &c, const Tolerances &tol = {});

/**
 * Toric decompositions of g·|j⟩, j = 0, 1, 2, for each gate in order.
 * Throws AtlasError("not uniformizing") unless every gate is a radix-3
 * uniformizer.
 */
std::vector<ToricPoint> barycenter_image(std::span<const GateMatrix> gates, const Tolerances &tol = {});

/// CNOT_paper · (I ⊗ H) in the requested notation.
GateMatrix epr_compose(Notation n = Notation::math);

struct Eq1Report {
  bool holds = false;
  std::optional<Complex> phase;  ///< S·√X·S = phase·H
  double residual = 0.0;         ///< max |S·√X·S - phase·H|, when phase is present
};

Eq1Report verify_eq1(const Tolerances &tol = {});
/// Same check with a substitute for S.
Eq1Report verify_eq1(const CMat &s_gate, const Tolerances &tol = {});

// Unnormalized matrices exactly as customarily printed.

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix int_matmul(const IntMatrix &a, const IntMatrix &b);

struct EprFactors {
  IntMatrix cnot;
  IntMatrix i_x_h;
  IntMatrix epr;
};
EprFactors epr_printed();

/// The three Chrestenson matrices in their customary unnormalized form. The
/// second, taken verbatim, is not unitary; the catalog uses
/// SHIFT·QFT3·SHIFT⁻¹ in its place.
std::vector<CMat> chrestenson_printed();

}  // namespace toric_atlas
