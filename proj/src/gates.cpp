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

#include "toric_atlas/gates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "toric_atlas/errors.hpp"
#include "toric_atlas/group.hpp"

namespace toric_atlas {
namespace {

using enum GateTag;

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
const double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

GateMatrix make(std::string name, int radix, CMat printed, double scalar, std::set<GateTag> tags) {
  return {std::move(name), radix, Complex(scalar) * printed, scalar, std::move(tags)};
}

CMat from_ints(const IntMatrix &m) {
  CMat out(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out(r, c) = static_cast<double>(m[r][c]);
  return out;
}

CMat pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

CMat hadamard_printed() { return {{1.0, 1.0}, {1.0, -1.0}}; }

std::vector<GateMatrix> radix2_catalog() {
  const Complex i(0.0, 1.0);
  const Complex half_p(0.5, 0.5), half_m(0.5, -0.5);
  return {
      make("I", 2, CMat::identity(2), 1.0, {}),
      make("X", 2, pauli_x(), 1.0, {pauli}),
      make("Y", 2, {{0.0, -i}, {i, 0.0}}, 1.0, {pauli}),
      make("Z", 2, {{1.0, 0.0}, {0.0, -1.0}}, 1.0, {pauli, rotation, diagonal}),
      make("H", 2, hadamard_printed(), kInvSqrt2, {uniformizer}),
      make("S", 2, {{1.0, 0.0}, {0.0, i}}, 1.0, {rotation, diagonal}),
      make("T", 2, {{1.0, 0.0}, {0.0, Complex(kInvSqrt2, kInvSqrt2)}}, 1.0, {rotation, diagonal}),
      make("SqrtX", 2, {{half_p, half_m}, {half_m, half_p}}, 1.0, {rotation}),
  };
}

std::vector<GateMatrix> radix3_catalog() {
  const Complex w = omega(), w2 = omega2();
  const std::array<std::size_t, 3> shift1 = {1, 2, 0}, shift2 = {2, 0, 1};

  std::vector<GateMatrix> gates = {
      make("I", 3, CMat::identity(3), 1.0, {}),
      make("SHIFT+1", 3, CMat::permutation(shift1), 1.0, {shift}),
      make("SHIFT+2", 3, CMat::permutation(shift2), 1.0, {shift}),
      make("QFT3", 3, {{1.0, 1.0, 1.0}, {1.0, w, w2}, {1.0, w2, w}}, kInvSqrt3, {chrestenson, uniformizer}),
      make("QFT3_012", 3, {{w, 1.0, w2}, {1.0, 1.0, 1.0}, {w2, 1.0, w}}, kInvSqrt3, {chrestenson, uniformizer}),
      make("QFT3_021", 3, {{w, w2, 1.0}, {w2, w, 1.0}, {1.0, 1.0, 1.0}}, kInvSqrt3, {chrestenson, uniformizer}),
  };
  for (const auto &[suffix, r] : {std::pair{"W", w}, std::pair{"W2", w2}}) {
    const std::string base = std::string("UNIF_") + suffix + "_";
    gates.push_back(make(base + "0", 3, {{1.0, 1.0, r}, {1.0, r, 1.0}, {r, 1.0, 1.0}}, kInvSqrt3, {uniformizer}));
    gates.push_back(make(base + "1", 3, {{1.0, r, 1.0}, {r, 1.0, 1.0}, {1.0, 1.0, r}}, kInvSqrt3, {uniformizer}));
    gates.push_back(make(base + "2", 3, {{r, 1.0, 1.0}, {1.0, 1.0, r}, {1.0, r, 1.0}}, kInvSqrt3, {uniformizer}));
  }
  for (const auto &g : enumerate_group()) {
    gates.push_back(make("D(" + g.key() + ")", 3, g.matrix(), 1.0, {diagonal}));
  }
  return gates;
}

GateMatrix renamed(GateMatrix g, std::string name) {
  g.name = std::move(name);
  return g;
}

std::vector<GateMatrix> radix4_catalog(Notation n) {
  const CMat x = pauli_x(), id = CMat::identity(2);
  const GateMatrix epr = epr_compose(Notation::math);
  const auto &e = epr.matrix;

  std::vector<GateMatrix> math_form = {
      make("I", 4, CMat::identity(4), 1.0, {}),
      make("CNOT_paper", 4, from_ints(epr_printed().cnot), 1.0, {controlled}),
      make("CNOT", 4, CMat::permutation(std::array<std::size_t, 4>{0, 1, 3, 2}), 1.0, {controlled}),
      make("IxH", 4, from_ints(epr_printed().i_x_h), kInvSqrt2, {composite}),
      renamed(epr, "EPR"),
      {"BELL_PHI+", 4, e, epr.printed_scalar, {composite}},
      {"BELL_PHI-", 4, e * tensor(id, x), epr.printed_scalar, {composite}},
      {"BELL_PSI+", 4, e * tensor(x, id), epr.printed_scalar, {composite}},
      {"BELL_PSI-", 4, Complex(-1.0) * (e * tensor(x, x)), epr.printed_scalar, {composite}},
  };
  for (auto &g : math_form) g.matrix = to_notation(g.matrix, n);
  math_form.insert(math_form.begin() + 5, renamed(epr, "EPR_math"));
  return math_form;
}

}  // namespace

std::string_view to_string(Notation n) { return n == Notation::math ? "math" : "engineering"; }

Notation parse_notation(std::string_view s) {
  if (s == "math" || s == "mathematics") return Notation::math;
  if (s == "engineering" || s == "eng") return Notation::engineering;
  throw AtlasError("notation", "unknown notation '" + std::string(s) + "' (expected math or engineering)");
}

std::string_view to_string(GateTag t) {
  switch (t) {
    case pauli: return "pauli";
    case rotation: return "rotation";
    case diagonal: return "diagonal";
    case shift: return "shift";
    case chrestenson: return "chrestenson";
    case uniformizer: return "uniformizer";
    case controlled: return "controlled";
    case composite: return "composite";
  }
  return "unknown";
}

std::optional<GateTag> parse_gate_tag(std::string_view s) {
  for (GateTag t : {pauli, rotation, diagonal, shift, chrestenson, uniformizer, controlled, composite})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

CMat bit_reversal() { return CMat::permutation(std::array<std::size_t, 4>{0, 2, 1, 3}); }

CMat to_notation(const CMat &math_form, Notation n) {
  if (n == Notation::math || math_form.rows() != 4) return math_form;
  const CMat b = bit_reversal();
  return b * math_form * b;
}

CVec to_notation(const CVec &math_form, Notation n) {
  if (n == Notation::math || math_form.dim() != 4) return math_form;
  return bit_reversal() * math_form;
}

CVec basis_state(int radix, std::string_view label, Notation n) {
  auto digit = [&](char c, int base) {
    if (c < '0' || c >= '0' + base) throw AtlasError("shape", "bad basis label '" + std::string(label) + "'");
    return static_cast<std::size_t>(c - '0');
  };
  if (radix == 2 || radix == 3) {
    if (label.size() != 1) throw AtlasError("shape", "basis label must be a single digit");
    return CVec::basis(static_cast<std::size_t>(radix), digit(label[0], radix));
  }
  if (radix == 4) {
    if (label.size() != 2) throw AtlasError("shape", "radix-4 basis label must be two bits, e.g. \"01\"");
    const std::size_t q0 = digit(label[0], 2), q1 = digit(label[1], 2);
    return CVec::basis(4, n == Notation::math ? 2 * q0 + q1 : q0 + 2 * q1);
  }
  throw AtlasError("shape", "radix must be 2, 3 or 4");
}

std::vector<GateMatrix> catalog(int radix, Notation n) {
  switch (radix) {
    case 2: return radix2_catalog();
    case 3: return radix3_catalog();
    case 4: return radix4_catalog(n);
    default: throw AtlasError("shape", "radix must be 2, 3 or 4");
  }
}

std::optional<GateMatrix> find_gate(int radix, std::string_view name, Notation n) {
  for (auto &g : catalog(radix, n))
    if (g.name == name) return std::move(g);
  return std::nullopt;
}

bool is_natural_entry(Complex z, double tol) {
  if (std::abs(z) <= tol) return true;
  if (std::abs(std::abs(z) - 1.0) <= tol) {
    const double k = std::arg(z) * 24.0 / kTwoPi;
    return std::abs(k - std::round(k)) * kTwoPi / 24.0 <= tol;
  }
  for (double re : {0.5, -0.5})
    for (double im : {0.5, -0.5})
      if (std::abs(z - Complex(re, im)) <= tol) return true;
  return false;
}

CVec apply(const GateMatrix &g, const CVec &s, const Tolerances &tol) {
  if (static_cast<std::size_t>(g.radix) != s.dim()) {
    throw AtlasError("shape", "gate " + g.name + " has radix " + std::to_string(g.radix) +
                                  " but the state has dimension " + std::to_string(s.dim()));
  }
  if (!s.is_unit(tol)) throw AtlasError("norm", "apply: state must be a unit vector");
  return g.matrix * s;
}

bool is_uniformizing(const CMat &m, const Tolerances &tol) {
  if (!is_unitary(m, tol)) throw AtlasError("unitary", "uniformization test requires a unitary matrix");
  const double target = 1.0 / std::sqrt(static_cast<double>(m.rows()));
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [&](Complex z) { return std::abs(std::abs(z) - target) <= tol.mat; });
}

ChrestensonReport chrestenson_properties(const GateMatrix &c, const Tolerances &tol) {
  const CMat &m = c.matrix;
  if (!m.is_square()) throw AtlasError("shape", "gate matrix must be square");
  const std::size_t d = m.rows();
  const CMat id = CMat::identity(d);

  ChrestensonReport report;
  CMat power = m;
  for (int k = 1; k <= 8; ++k, power = power * m) {
    if (max_abs_diff(power, id) <= tol.mat) {
      report.order = k;
      break;
    }
  }
  if (report.order == 0) throw AtlasError("not periodic", c.name + " has no order up to 8");

  const CMat sq = m * m;
  report.square_is_permutation = true;
  report.square_cycle.assign(d, d);
  for (std::size_t col = 0; col < d && report.square_is_permutation; ++col) {
    for (std::size_t row = 0; row < d; ++row) {
      const Complex z = sq(row, col);
      if (std::abs(z - 1.0) <= tol.mat) {
        if (report.square_cycle[col] != d) report.square_is_permutation = false;
        report.square_cycle[col] = row;
      } else if (std::abs(z) > tol.mat) {
        report.square_is_permutation = false;
      }
    }
  }
  if (report.square_is_permutation) {
    auto image = report.square_cycle;
    std::sort(image.begin(), image.end());
    for (std::size_t j = 0; j < d; ++j)
      if (image[j] != j) report.square_is_permutation = false;
  }
  if (!report.square_is_permutation) {
    report.square_cycle.clear();
  } else {
    std::size_t moved = 0;
    for (std::size_t j = 0; j < d; ++j) moved += report.square_cycle[j] != j;
    report.square_is_transposition = moved == 2;
  }
  return report;
}

std::vector<ToricPoint> barycenter_image(std::span<const GateMatrix> gates, const Tolerances &tol) {
  std::vector<ToricPoint> images;
  for (const auto &g : gates) {
    if (g.radix != 3 || !is_unitary(g.matrix, tol) || !is_uniformizing(g.matrix, tol)) {
      throw AtlasError("not uniformizing", g.name + " is not a radix-3 uniformizing gate");
    }
    for (std::size_t j = 0; j < 3; ++j) images.push_back(decompose(g.matrix.column(j), tol));
  }
  return images;
}

GateMatrix epr_compose(Notation n) {
  const auto printed = epr_printed();
  GateMatrix g{"EPR", 4, Complex(kInvSqrt2) * from_ints(int_matmul(printed.cnot, printed.i_x_h)), kInvSqrt2,
               {composite}};
  g.matrix = to_notation(g.matrix, n);
  return g;
}

Eq1Report verify_eq1(const Tolerances &tol) { return verify_eq1(find_gate(2, "S")->matrix, tol); }

Eq1Report verify_eq1(const CMat &s_gate, const Tolerances &tol) {
  const CMat product = s_gate * find_gate(2, "SqrtX")->matrix * s_gate;
  const CMat h = find_gate(2, "H")->matrix;
  Eq1Report report;
  report.phase = phase_equivalent(product, h, tol);
  report.holds = report.phase.has_value();
  if (report.phase) report.residual = max_abs_diff(product, *report.phase * h);
  return report;
}

IntMatrix int_matmul(const IntMatrix &a, const IntMatrix &b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) throw AtlasError("shape", "int_matmul shape mismatch");
  IntMatrix out(a.size(), std::vector<int>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

EprFactors epr_printed() {
  return {
      {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}},
      {{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}},
      {{1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}, {1, -1, 0, 0}},
  };
}

std::vector<CMat> chrestenson_printed() {
  const Complex w = omega(), w2 = omega2();
  return {
      {{1.0, 1.0, 1.0}, {1.0, w, w2}, {1.0, w2, w}},
      {{w, 1.0, 1.0}, {1.0, 1.0, w2}, {w2, 1.0, w}},
      {{w, w2, 1.0}, {w2, w, 1.0}, {1.0, 1.0, 1.0}},
  };
}

}  // namespace toric_atlas
