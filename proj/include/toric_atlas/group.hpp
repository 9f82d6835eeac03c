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
 * @file group.hpp
 * The 36 diagonal qutrit gates diag(1, a, b) with a, b sixth roots of unity,
 * and Cayley graphs over user-chosen generators.
 *
 * Elements are held as exponent pairs (j, k) with a = ζ^j, b = ζ^k and
 * ζ = e^{iπ/3}, so group arithmetic is exact integer arithmetic mod 6.
 * Root names follow the {±1, ±ω, ±ω²} convention with ω = e^{2πi/3}:
 * ζ^0 = 1, ζ^1 = -w2, ζ^2 = w, ζ^3 = -1, ζ^4 = w2, ζ^5 = -w.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric_atlas/linalg.hpp"

namespace toric_atlas {

/// ζ^j with exactly representable real/imaginary parts where possible.
Complex sixth_root(int j);
/// "1", "-w2", "w", "-1", "w2", "-w" for j = 0..5 (mod 6).
std::string_view sixth_root_name(int j);
std::optional<int> parse_sixth_root(std::string_view name);

struct GroupElement {
  int a = 0;  ///< exponent of ζ in the (2,2) entry, in [0, 6)
  int b = 0;  ///< exponent of ζ in the (3,3) entry, in [0, 6)

  static GroupElement identity() { return {}; }
  /// Parses keys such as "1,w,w2". Throws AtlasError("foreign generator").
  static GroupElement from_key(std::string_view key);
  /// The element whose matrix equals m within tol.mat, if any.
  static std::optional<GroupElement> from_matrix(const CMat &m, const Tolerances &tol = {});

  bool valid() const noexcept { return a >= 0 && a < 6 && b >= 0 && b < 6; }
  std::string key() const;
  CMat matrix() const;
  GroupElement inverse() const { return {(6 - a) % 6, (6 - b) % 6}; }

  friend GroupElement operator*(GroupElement g, GroupElement h) {
    return {(g.a + h.a) % 6, (g.b + h.b) % 6};
  }
  friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
};

/**
 * All 36 elements in (a, b) order. Closure, identity, inverses,
 * associativity and commutativity are checked on construction;
 * throws AtlasError("not a group") if any check fails.
 */
std::vector<GroupElement> enumerate_group();

/// diag(1, ω, ω²), diag(1, -1, 1), diag(1, 1, -ω): three generators of the whole group.
std::vector<GroupElement> default_generators();

struct CayleyEdge {
  std::size_t from = 0;       ///< vertex index
  std::size_t generator = 0;  ///< generator index
  std::size_t to = 0;         ///< vertex index
};

struct CayleyGraph {
  std::vector<GroupElement> vertices;  ///< BFS discovery order; identity first
  std::vector<GroupElement> generators;
  std::vector<CayleyEdge> edges;       ///< one per (vertex, generator)
  std::vector<int> distances;          ///< word length from the identity, per vertex
  std::vector<std::size_t> parent;     ///< BFS tree: predecessor vertex
  std::vector<std::size_t> parent_generator;

  bool is_full_group() const noexcept { return vertices.size() == 36; }
  std::optional<std::size_t> index_of(const GroupElement &g) const;
};

/// Throws AtlasError("foreign generator") on an out-of-range element and
/// AtlasError("shape") on an empty generator list.
CayleyGraph build_cayley(std::span<const GroupElement> generators);

/**
 * Minimum-length generator word composing to `target`; among minimum
 * words the lexicographically smallest index sequence. Absent when the
 * target lies outside the generated subgroup.
 */
std::optional<std::vector<std::size_t>> shortest_word(const GroupElement &target,
                                                      const CayleyGraph &graph);

GroupElement compose_word(std::span<const std::size_t> word, std::span<const GroupElement> generators);

/// Graphviz digraph, nodes and edges in sorted-key order.
std::string export_dot(const CayleyGraph &graph);

}  // namespace toric_atlas
