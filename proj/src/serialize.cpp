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

#include "toric_atlas/serialize.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "toric_atlas/errors.hpp"

namespace toric_atlas {
namespace {

Json optional_number(const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); }

std::vector<double> reals_from_json(const Json &j) {
  if (!j.is_array()) throw AtlasError("parse", "expected an array of numbers");
  std::vector<double> out;
  for (const auto &x : j) {
    if (!x.is_number()) throw AtlasError("parse", "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw AtlasError("parse", "complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const CVec &v) {
  Json out = Json::array();
  for (const auto &z : v) out.push_back(complex_to_json(z));
  return out;
}

Json to_json(const CMat &m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const SimplexPoint &p) { return {{"coords", p.coords}}; }

Json to_json(const ToricPoint &p) {
  return {{"convex", p.convex}, {"phases", p.phases}, {"defined", p.defined}, {"pivot", p.pivot}};
}

Json to_json(const OrbitGram &g) {
  Json angles = Json::array();
  for (const auto &a : g.angles)
    angles.push_back({{"first", a.first}, {"second", a.second}, {"radians", optional_number(a.radians)}});
  return {{"indices", g.indices}, {"gram", g.gram}, {"edge_lengths", g.edge_lengths}, {"angles", angles}};
}

Json to_json(const RiemannPoint &p) {
  return {{"infinite", p.at_infinity}, {"value", p.at_infinity ? Json(nullptr) : complex_to_json(p.value)}};
}

Json to_json(const GateMatrix &g) {
  Json tags = Json::array();
  for (auto t : g.tags) tags.push_back(std::string(to_string(t)));
  return {{"name", g.name},
          {"radix", g.radix},
          {"tags", tags},
          {"printed_scalar", g.printed_scalar},
          {"entries", to_json(g.matrix)}};
}

Json to_json(const ChrestensonReport &r) {
  return {{"order", r.order},
          {"square_is_permutation", r.square_is_permutation},
          {"square_is_transposition", r.square_is_transposition},
          {"square_cycle", r.square_cycle}};
}

Json to_json(const Eq1Report &r) {
  return {{"holds", r.holds},
          {"phase", r.phase ? complex_to_json(*r.phase) : Json(nullptr)},
          {"residual", r.phase ? Json(r.residual) : Json(nullptr)}};
}

Json to_json(const EntanglementReport &r) {
  return {{"concurrence", r.concurrence},
          {"schmidt", {r.schmidt.first, r.schmidt.second}},
          {"class", std::string(to_string(r.cls))},
          {"simplex_on_me_segment", r.simplex_on_me_segment},
          {"simplex_on_sep_surface", r.simplex_on_sep_surface},
          {"phase_condition", r.phase_condition ? Json(*r.phase_condition) : Json(nullptr)}};
}

Json to_json(const CayleyGraph &g) {
  Json vertices = Json::array(), generators = Json::array(), edges = Json::array();
  Json distances = Json::object();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    vertices.push_back(g.vertices[v].key());
    distances[g.vertices[v].key()] = g.distances[v];
  }
  for (const auto &gen : g.generators) generators.push_back(gen.key());
  for (const auto &e : g.edges)
    edges.push_back({{"from", g.vertices[e.from].key()}, {"generator", e.generator}, {"to", g.vertices[e.to].key()}});
  return {{"vertices", vertices},
          {"generators", generators},
          {"edges", edges},
          {"distances", distances},
          {"full_group", g.is_full_group()}};
}

Json to_json(const SeparableSearch &s) {
  return {{"distance", s.distance}, {"product", to_json(s.product)}, {"angles", s.angles}};
}

Json to_json(const IntMatrix &m) { return m; }

Json to_json(const FigureScene &s) {
  Json marks = Json::array(), segments = Json::array();
  for (const auto &m : s.marks) {
    marks.push_back({{"position", m.position},
                     {"label", m.label},
                     {"style", m.style},
                     {"fiber_phase", optional_number(m.fiber_phase)}});
  }
  for (const auto &seg : s.segments) segments.push_back({{"from", seg.from}, {"to", seg.to}, {"style", seg.style}});
  return {{"kind", std::string(to_string(s.kind))},
          {"radix", s.radix},
          {"title", s.title},
          {"marks", marks},
          {"segments", segments},
          {"polylines", s.polylines},
          {"fiber_base", s.fiber_base ? Json(s.fiber_base->coords) : Json(nullptr)},
          {"fiber_pivot", s.fiber_pivot},
          {"geometry_mode", std::string(to_string(s.mode))}};
}

CVec cvec_from_json(const Json &j) {
  if (!j.is_array() || j.empty()) throw AtlasError("parse", "a state is a non-empty array of [re, im] pairs");
  std::vector<Complex> entries;
  for (const auto &z : j) entries.push_back(complex_from_json(z));
  return CVec(std::move(entries));
}

CMat cmat_from_json(const Json &j) {
  if (!j.is_array() || j.empty()) throw AtlasError("parse", "a matrix is a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> data;
  for (const auto &row : j) {
    if (!row.is_array() || row.empty()) throw AtlasError("parse", "matrix rows must be arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols) throw AtlasError("shape", "ragged matrix");
    for (const auto &z : row) data.push_back(complex_from_json(z));
  }
  return CMat(rows, cols, std::move(data));
}

SimplexPoint simplex_point_from_json(const Json &j) {
  return parse_guard([&] { return SimplexPoint{reals_from_json(j.is_object() ? j.at("coords") : j)}; });
}

ToricPoint toric_point_from_json(const Json &j) {
  return parse_guard([&] {
    if (!j.is_object()) throw AtlasError("parse", "a toric point is an object");
    ToricPoint tp;
    tp.convex = reals_from_json(j.at("convex"));
    tp.phases = reals_from_json(j.at("phases"));
    for (const auto &b : j.at("defined")) tp.defined.push_back(b.get<bool>());
    tp.pivot = j.at("pivot").get<std::size_t>();
    return tp;
  });
}

FigureScene scene_from_json(const Json &j) {
  return parse_guard([&] {
    if (!j.is_object()) throw AtlasError("parse", "a scene is an object");
    FigureScene s;
    s.kind = parse_scene_kind(j.at("kind").get<std::string>());
    s.radix = j.at("radix").get<int>();
    s.title = j.value("title", std::string());
    if (j.contains("marks")) {
      for (const auto &m : j.at("marks")) {
        Mark mark;
        mark.position = reals_from_json(m.at("position"));
        mark.label = m.value("label", std::string());
        mark.style = m.value("style", std::string("point"));
        if (m.contains("fiber_phase") && !m.at("fiber_phase").is_null())
          mark.fiber_phase = m.at("fiber_phase").get<double>();
        s.marks.push_back(std::move(mark));
      }
    }
    if (j.contains("segments")) {
      for (const auto &seg : j.at("segments")) {
        s.segments.push_back(
            {reals_from_json(seg.at("from")), reals_from_json(seg.at("to")), seg.value("style", std::string("segment"))});
      }
    }
    if (j.contains("polylines")) {
      for (const auto &poly : j.at("polylines")) {
        std::vector<std::vector<double>> pts;
        for (const auto &p : poly) pts.push_back(reals_from_json(p));
        s.polylines.push_back(std::move(pts));
      }
    }
    if (j.contains("fiber_base") && !j.at("fiber_base").is_null()) {
      s.fiber_base = simplex_point_from_json(j.at("fiber_base"));
    }
    s.fiber_pivot = j.value("fiber_pivot", std::size_t{0});
    s.mode = parse_geometry_mode(j.value("geometry_mode", std::string("unit")));
    return s;
  });
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw AtlasError("parse", "not a number: '" + std::string(tok) + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

CVec parse_state(std::string_view text) {
  const auto reals = parse_reals(text);
  if (reals.size() < 2 || reals.size() % 2 != 0) {
    throw AtlasError("parse", "a state is an even-length list of interleaved re,im values");
  }
  std::vector<Complex> entries;
  for (std::size_t i = 0; i < reals.size(); i += 2) entries.emplace_back(reals[i], reals[i + 1]);
  return CVec(std::move(entries));
}

CVec normalize_input(const CVec &state, double slack) {
  const double n = state.norm();
  if (!(std::abs(n - 1.0) <= slack)) {
    throw AtlasError("norm", fmt::format("state norm {} is not 1", n));
  }
  return Complex(1.0 / n, 0.0) * state;
}

}  // namespace toric_atlas
