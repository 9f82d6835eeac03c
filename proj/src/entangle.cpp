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

#include "toric_atlas/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "toric_atlas/errors.hpp"

namespace toric_atlas {
namespace {

void require_two_qubit_state(const CVec &s, const Tolerances &tol) {
  if (s.dim() != 4) throw AtlasError("shape", "two-qubit state must have dimension 4");
  if (!s.is_unit(tol)) throw AtlasError("norm", "two-qubit state must be a unit vector");
}

void require_two_qubit_point(const ToricPoint &tp, const Tolerances &tol) {
  if (tp.dim() != 4) throw AtlasError("shape", "locus tests need a point of CP^3");
  tp.validate(tol);
}

Complex amplitude_det(const CVec &s) { return s[0] * s[3] - s[1] * s[2]; }

double phase_of(const ToricPoint &tp, std::size_t i) { return tp.phases[i]; }

}  // namespace

std::string_view to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::separable: return "separable";
    case EntanglementClass::partial: return "partial";
    case EntanglementClass::maximal: return "maximal";
  }
  return "unknown";
}

double concurrence(const CVec &s, const Tolerances &tol) {
  require_two_qubit_state(s, tol);
  return std::min(1.0, 2.0 * std::abs(amplitude_det(s)));
}

std::pair<double, double> schmidt(const CVec &s, const Tolerances &tol) {
  require_two_qubit_state(s, tol);
  // Eigenvalues of G = M†M are 1/2 ± r with r² = ((G00 - G11)/2)² + |G01|²,
  // a sum of squares formed from the entries; the smaller singular value
  // then follows from λ1·λ2 = |det M|.
  const double g00 = std::norm(s[0]) + std::norm(s[2]);
  const double g11 = std::norm(s[1]) + std::norm(s[3]);
  const Complex g01 = std::conj(s[0]) * s[1] + std::conj(s[2]) * s[3];
  const double r = std::hypot((g00 - g11) / 2.0, std::abs(g01));
  const double l1 = std::sqrt((g00 + g11) / 2.0 + r);
  const double l2 = std::min(l1, std::abs(amplitude_det(s)) / l1);
  return {l1, l2};
}

EntanglementReport classify(const CVec &input, double tol_class, const Tolerances &tol, Notation n) {
  require_two_qubit_state(input, tol);
  if (!(tol_class > 0.0)) throw AtlasError("tolerance", "tol_class must be positive");
  const CVec s = to_notation(input, n);

  EntanglementReport r;
  r.concurrence = concurrence(s, tol);
  r.schmidt = schmidt(s, tol);
  if (r.concurrence <= tol_class) {
    r.cls = EntanglementClass::separable;
  } else if (r.concurrence >= 1.0 - tol_class) {
    r.cls = EntanglementClass::maximal;
  } else {
    r.cls = EntanglementClass::partial;
  }

  const auto p = decompose(s, tol).convex;
  r.simplex_on_me_segment = std::abs(p[0] - p[3]) <= tol.geom && std::abs(p[1] - p[2]) <= tol.geom;
  r.simplex_on_sep_surface = std::abs(p[0] * p[3] - p[1] * p[2]) <= tol.geom;

  const bool all_nonzero = std::all_of(s.begin(), s.end(), [&](Complex z) { return std::abs(z) > tol.zero; });
  if (r.cls == EntanglementClass::maximal && all_nonzero) {
    const double gap = circular_gap(std::arg(s[0] * s[3]) - std::arg(s[1] * s[2]), kPi);
    r.phase_condition = gap <= std::sqrt(8.0 * tol_class) + tol.geom;
  }
  return r;
}

bool me_locus_contains(const ToricPoint &tp, const Tolerances &tol) {
  require_two_qubit_point(tp, tol);
  const auto &p = tp.convex;
  if (std::abs(p[0] - p[3]) > tol.geom || std::abs(p[1] - p[2]) > tol.geom) return false;

  const bool outer = tp.defined[0] && tp.defined[3];
  const bool inner = tp.defined[1] && tp.defined[2];
  if (outer && inner) {
    const double sum = phase_of(tp, 0) + phase_of(tp, 3) - phase_of(tp, 1) - phase_of(tp, 2);
    return circular_gap(sum, kPi) <= tol.geom;
  }
  // Boundary stratum: masked phases carry nothing, test the amplitudes.
  const CVec s = reconstruct(tp, tol);
  return std::abs(2.0 * std::abs(amplitude_det(s)) - 1.0) <= tol.geom;
}

bool sep_locus_contains(const ToricPoint &tp, const Tolerances &tol) {
  require_two_qubit_point(tp, tol);
  const auto &p = tp.convex;
  if (std::abs(p[0] * p[3] - p[1] * p[2]) > tol.geom) return false;

  if (std::all_of(tp.defined.begin(), tp.defined.end(), [](bool b) { return b; })) {
    const double lhs = phase_of(tp, 0) + phase_of(tp, 3);
    const double rhs = phase_of(tp, 1) + phase_of(tp, 2);
    return circular_gap(lhs, rhs) <= tol.geom;
  }
  const CVec s = reconstruct(tp, tol);
  return 2.0 * std::abs(amplitude_det(s)) <= tol.geom;
}

double min_distance_to_separable(const CVec &s, const Tolerances &tol) {
  const auto [l1, l2] = schmidt(s, tol);
  return std::atan2(l2, l1);
}

CVec product_state(const std::array<double, 4> &angles) {
  const Complex a0 = std::cos(angles[0] / 2.0), a1 = std::polar(std::sin(angles[0] / 2.0), angles[1]);
  const Complex b0 = std::cos(angles[2] / 2.0), b1 = std::polar(std::sin(angles[2] / 2.0), angles[3]);
  return CVec{a0 * b0, a0 * b1, a1 * b0, a1 * b1};
}

ProductStateSampler::ProductStateSampler(std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw AtlasError("shape", "sampler needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cos_polar(-1.0, 1.0), azimuth(0.0, kTwoPi);
  angles_.reserve(samples);
  states_.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    std::array<double, 4> ang{std::acos(cos_polar(rng)), azimuth(rng), std::acos(cos_polar(rng)), azimuth(rng)};
    const CVec v = product_state(ang);
    angles_.push_back(ang);
    states_.push_back({v[0], v[1], v[2], v[3]});
  }
}

SeparableSearch ProductStateSampler::minimize(const CVec &s, const Tolerances &tol) const {
  require_two_qubit_state(s, tol);

  std::size_t best = 0;
  double best_overlap = -1.0;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    const auto &v = states_[k];
    const Complex ov = std::conj(v[0]) * s[0] + std::conj(v[1]) * s[1] + std::conj(v[2]) * s[2] +
                       std::conj(v[3]) * s[3];
    const double o = std::norm(ov);
    if (o > best_overlap) {
      best_overlap = o;
      best = k;
    }
  }

  auto overlap = [&](const std::array<double, 4> &ang) { return std::abs(inner(product_state(ang), s)); };

  std::array<double, 4> x = angles_[best];
  double fx = overlap(x);
  double step = 0.05;
  for (int iter = 0; iter < 20000 && step > 1e-12; ++iter) {
    bool improved = false;
    for (std::size_t i = 0; i < 4; ++i) {
      for (double dir : {1.0, -1.0}) {
        auto y = x;
        y[i] += dir * step;
        const double fy = overlap(y);
        if (fy > fx) {
          x = y;
          fx = fy;
          improved = true;
        }
      }
    }
    if (!improved) step /= 2.0;
  }

  SeparableSearch result;
  result.angles = x;
  result.product = product_state(x);
  result.distance = fs_distance(result.product, s, tol);
  return result;
}

std::vector<CVec> bell_basis(Notation n) {
  const double r = std::numbers::sqrt2 / 2.0;
  std::vector<CVec> states = {
      CVec{r, 0.0, 0.0, r},
      CVec{r, 0.0, 0.0, -r},
      CVec{0.0, r, r, 0.0},
      CVec{0.0, r, -r, 0.0},
  };
  for (auto &v : states) v = to_notation(v, n);
  return states;
}

}  // namespace toric_atlas
