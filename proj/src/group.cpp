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

#include "toric_atlas/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <numbers>
#include <sstream>

#include "toric_atlas/errors.hpp"

namespace toric_atlas {
namespace {

constexpr std::array<std::string_view, 6> kRootNames = {"1", "-w2", "w", "-1", "w2", "-w"};

int mod6(int j) { return ((j % 6) + 6) % 6; }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Complex sixth_root(int j) {
  constexpr double h = std::numbers::sqrt3 / 2.0;
  static const std::array<Complex, 6> roots = {
      Complex(1.0, 0.0), Complex(0.5, h), Complex(-0.5, h),
      Complex(-1.0, 0.0), Complex(-0.5, -h), Complex(0.5, -h)};
  return roots[static_cast<std::size_t>(mod6(j))];
}

std::string_view sixth_root_name(int j) { return kRootNames[static_cast<std::size_t>(mod6(j))]; }

std::optional<int> parse_sixth_root(std::string_view name) {
  name = trim(name);
  if (name == "w1") name = "w";
  if (name == "-w1") name = "-w";
  if (name == "w0") name = "1";
  if (name == "-w0") name = "-1";
  for (int j = 0; j < 6; ++j)
    if (kRootNames[static_cast<std::size_t>(j)] == name) return j;
  return std::nullopt;
}

GroupElement GroupElement::from_key(std::string_view key) {
  const auto parts = split(key, ',');
  if (parts.size() != 3) {
    throw AtlasError("foreign generator", "group key must have three entries, e.g. \"1,w,w2\": " + std::string(key));
  }
  const auto lead = parse_sixth_root(parts[0]);
  const auto a = parse_sixth_root(parts[1]);
  const auto b = parse_sixth_root(parts[2]);
  if (!lead || *lead != 0 || !a || !b) {
    throw AtlasError("foreign generator", "not a diagonal group element: " + std::string(key));
  }
  return {*a, *b};
}

std::optional<GroupElement> GroupElement::from_matrix(const CMat &m, const Tolerances &tol) {
  if (m.rows() != 3 || m.cols() != 3) return std::nullopt;
  for (const auto &g : enumerate_group())
    if (max_abs_diff(m, g.matrix()) <= tol.mat) return g;
  return std::nullopt;
}

std::string GroupElement::key() const {
  std::string k = "1,";
  k += sixth_root_name(a);
  k += ',';
  k += sixth_root_name(b);
  return k;
}

CMat GroupElement::matrix() const {
  const std::array<Complex, 3> d = {Complex(1.0), sixth_root(a), sixth_root(b)};
  return CMat::diagonal(d);
}

std::vector<GroupElement> enumerate_group() {
  std::vector<GroupElement> elements;
  elements.reserve(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) elements.push_back({a, b});

  auto member = [&](const GroupElement &g) { return std::binary_search(elements.begin(), elements.end(), g); };
  auto fail = [](const char *why) { throw AtlasError("not a group", why); };

  if (!member(GroupElement::identity())) fail("identity missing");
  for (const auto &g : elements) {
    if (!member(g.inverse()) || g * g.inverse() != GroupElement::identity()) fail("inverse missing");
    for (const auto &h : elements) {
      if (!member(g * h)) fail("not closed under composition");
      if (g * h != h * g) fail("not abelian");
    }
  }
  // Associativity over a deterministic spread of triples.
  for (std::size_t i = 0; i < elements.size(); i += 5)
    for (std::size_t j = 1; j < elements.size(); j += 7)
      for (std::size_t k = 2; k < elements.size(); k += 11) {
        const auto &f = elements[i], &g = elements[j], &h = elements[k];
        if ((f * g) * h != f * (g * h)) fail("not associative");
      }
  return elements;
}

std::vector<GroupElement> default_generators() {
  return {GroupElement{2, 4}, GroupElement{3, 0}, GroupElement{0, 5}};
}

std::optional<std::size_t> CayleyGraph::index_of(const GroupElement &g) const {
  const auto it = std::find(vertices.begin(), vertices.end(), g);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

CayleyGraph build_cayley(std::span<const GroupElement> generators) {
  if (generators.empty()) throw AtlasError("shape", "build_cayley: at least one generator is required");
  for (const auto &g : generators)
    if (!g.valid()) throw AtlasError("foreign generator", "generator exponents must lie in [0, 6)");

  CayleyGraph graph;
  graph.generators.assign(generators.begin(), generators.end());

  std::array<int, 36> slot;
  slot.fill(-1);
  auto slot_of = [](const GroupElement &g) { return static_cast<std::size_t>(g.a * 6 + g.b); };

  graph.vertices.push_back(GroupElement::identity());
  graph.distances.push_back(0);
  graph.parent.push_back(0);
  graph.parent_generator.push_back(0);
  slot[slot_of(GroupElement::identity())] = 0;

  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      const GroupElement next = graph.vertices[v] * generators[gi];
      int &s = slot[slot_of(next)];
      if (s < 0) {
        s = static_cast<int>(graph.vertices.size());
        graph.vertices.push_back(next);
        graph.distances.push_back(graph.distances[v] + 1);
        graph.parent.push_back(v);
        graph.parent_generator.push_back(gi);
      }
      graph.edges.push_back({v, gi, static_cast<std::size_t>(s)});
    }
  }
  return graph;
}

std::optional<std::vector<std::size_t>> shortest_word(const GroupElement &target, const CayleyGraph &graph) {
  // BFS with generators tried in index order reaches every vertex first
  // through its lexicographically smallest minimum-length word.
  const auto idx = graph.index_of(target);
  if (!idx) return std::nullopt;
  std::vector<std::size_t> word;
  for (std::size_t v = *idx; v != 0; v = graph.parent[v]) word.push_back(graph.parent_generator[v]);
  std::reverse(word.begin(), word.end());
  return word;
}

GroupElement compose_word(std::span<const std::size_t> word, std::span<const GroupElement> generators) {
  GroupElement g = GroupElement::identity();
  for (std::size_t i : word) {
    if (i >= generators.size()) throw AtlasError("shape", "generator index out of range");
    g = g * generators[i];
  }
  return g;
}

std::string export_dot(const CayleyGraph &graph) {
  std::vector<std::size_t> order(graph.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return graph.vertices[x].key() < graph.vertices[y].key(); });

  std::vector<const CayleyEdge *> edges;
  for (const auto &e : graph.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [&](const CayleyEdge *x, const CayleyEdge *y) {
    const auto kx = graph.vertices[x->from].key(), ky = graph.vertices[y->from].key();
    if (kx != ky) return kx < ky;
    return x->generator < y->generator;
  });

  std::ostringstream out;
  out << "digraph cayley {\n";
  for (std::size_t v : order) {
    const auto key = graph.vertices[v].key();
    out << "  \"" << key << "\" [label=\"" << key << "\", dist=" << graph.distances[v] << "];\n";
  }
  for (const auto *e : edges) {
    out << "  \"" << graph.vertices[e->from].key() << "\" -> \"" << graph.vertices[e->to].key()
        << "\" [label=\"" << graph.generators[e->generator].key() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace toric_atlas
