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

#include "toric_atlas/toric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "toric_atlas/errors.hpp"

namespace toric_atlas {
namespace {

void require_octant_unit(std::span<const double> x, const Tolerances &tol) {
  if (x.empty()) throw AtlasError("shape", "empty vector");
  double s = 0.0;
  for (double v : x) {
    if (!std::isfinite(v)) throw AtlasError("norm", "non-finite component");
    if (v < 0.0) throw AtlasError("octant", "component outside the non-negative octant");
    s += v * v;
  }
  if (std::abs(std::sqrt(s) - 1.0) > tol.norm) throw AtlasError("norm", "input must be a unit vector");
}

void require_supported_dim(std::size_t d) {
  if (d < 2 || d > 4) throw AtlasError("shape", "dimension must be 2, 3 or 4");
}

}  // namespace

double wrap_phase(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double circular_gap(double a, double b) {
  const double d = wrap_phase(a - b);
  return std::min(d, kTwoPi - d);
}

void SimplexPoint::validate(const Tolerances &tol) const {
  if (coords.empty()) throw AtlasError("simplex", "empty simplex point");
  double s = 0.0;
  for (double t : coords) {
    if (!std::isfinite(t) || t < -tol.geom) throw AtlasError("simplex", "negative or non-finite barycentric coordinate");
    s += t;
  }
  if (std::abs(s - 1.0) > tol.geom) throw AtlasError("simplex", "barycentric coordinates must sum to 1");
}

void ToricPoint::validate(const Tolerances &tol) const {
  const std::size_t d = convex.size();
  auto fail = [](const char *why) { throw AtlasError("invalid toric point", why); };
  if (d < 2 || d > 4) fail("dimension must be 2, 3 or 4");
  if (phases.size() != d || defined.size() != d) fail("convex, phases and defined must have equal length");
  if (pivot >= d) fail("pivot out of range");

  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (!std::isfinite(convex[i]) || !std::isfinite(phases[i])) fail("non-finite coordinate");
    if (convex[i] < -tol.norm || convex[i] > 1.0 + tol.norm) fail("probability outside [0, 1]");
    s += convex[i];
  }
  if (std::abs(s - 1.0) > tol.norm) fail("probabilities must sum to 1");

  for (std::size_t i = 0; i < d; ++i) {
    const bool nonzero = std::sqrt(std::max(convex[i], 0.0)) > tol.zero;
    if (defined[i] != nonzero) fail("defined mask disagrees with the vanishing coordinates");
    if (i < pivot && defined[i]) fail("pivot must be the first non-vanishing coordinate");
    if (defined[i] && (phases[i] < 0.0 || phases[i] >= kTwoPi)) fail("phase outside [0, 2pi)");
  }
  if (!defined[pivot]) fail("pivot coordinate vanishes");
  if (circular_gap(phases[pivot], 0.0) > tol.geom) fail("pivot phase must be 0");
}

ToricPoint decompose(const CVec &state, const Tolerances &tol) {
  require_supported_dim(state.dim());
  if (!state.is_unit(tol)) throw AtlasError("norm", "decompose: state must be a unit vector");

  const std::size_t d = state.dim();
  ToricPoint tp;
  tp.convex.resize(d);
  tp.phases.assign(d, 0.0);
  tp.defined.assign(d, false);

  std::size_t pivot = d;
  for (std::size_t i = 0; i < d; ++i) {
    tp.convex[i] = std::norm(state[i]);
    tp.defined[i] = std::abs(state[i]) > tol.zero;
    if (tp.defined[i] && pivot == d) pivot = i;
  }
  tp.pivot = pivot;

  const Complex ref = std::conj(state[pivot]);
  for (std::size_t i = pivot + 1; i < d; ++i) {
    if (tp.defined[i]) tp.phases[i] = wrap_phase(std::arg(state[i] * ref));
  }
  return tp;
}

CVec reconstruct(const ToricPoint &point, const Tolerances &tol) {
  point.validate(tol);
  CVec v(point.dim());
  for (std::size_t i = 0; i < point.dim(); ++i) {
    const double r = std::sqrt(std::max(point.convex[i], 0.0));
    v[i] = point.defined[i] ? std::polar(r, point.phases[i]) : Complex(r);
  }
  return v.normalized();
}

SimplexPoint squared_map(std::span<const double> x, const Tolerances &tol) {
  require_octant_unit(x, tol);
  SimplexPoint out;
  out.coords.reserve(x.size());
  for (double v : x) out.coords.push_back(v * v);
  return out;
}

SimplexPoint gnomonic(std::span<const double> x, const Tolerances &tol) {
  require_octant_unit(x, tol);
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  SimplexPoint out;
  out.coords.reserve(x.size());
  for (double v : x) out.coords.push_back(v / s);
  return out;
}

std::vector<double> stereographic(std::span<const double> x, std::size_t pole_axis,
                                  const Tolerances &tol) {
  require_octant_unit(x, tol);
  if (pole_axis >= x.size()) throw AtlasError("shape", "pole axis out of range");
  const double scale = 2.0 / (1.0 + x[pole_axis]);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = i == pole_axis ? 1.0 : scale * x[i];
  return y;
}

OrbitGram orbit_gram(const SimplexPoint &convex, std::size_t pivot, const Tolerances &tol) {
  convex.validate(tol);
  if (pivot >= convex.dim()) throw AtlasError("shape", "pivot out of range");

  OrbitGram og;
  for (std::size_t i = 0; i < convex.dim(); ++i)
    if (i != pivot) og.indices.push_back(i);

  const std::size_t m = og.indices.size();
  og.gram.assign(m, std::vector<double>(m, 0.0));
  for (std::size_t a = 0; a < m; ++a) {
    const double pa = std::max(convex.coords[og.indices[a]], 0.0);
    for (std::size_t b = 0; b < m; ++b) {
      const double pb = std::max(convex.coords[og.indices[b]], 0.0);
      og.gram[a][b] = a == b ? pa - pa * pa : -pa * pb;
    }
    og.edge_lengths.push_back(kTwoPi * std::sqrt(std::max(og.gram[a][a], 0.0)));
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      OrbitGram::EdgeAngle angle{a, b, std::nullopt};
      const double norm2 = og.gram[a][a] * og.gram[b][b];
      if (norm2 > 0.0) {
        const double c = std::clamp(og.gram[a][b] / std::sqrt(norm2), -1.0, 1.0);
        angle.radians = std::acos(c);
      }
      og.angles.push_back(angle);
    }
  }
  return og;
}

RiemannPoint hopf(Complex z0, Complex z1) {
  if (z0 == Complex(0.0) && z1 == Complex(0.0)) throw AtlasError("norm", "hopf: (0, 0) is not a state");
  if (z1 == Complex(0.0)) return {true, {}};
  return {false, z0 / z1};
}

}  // namespace toric_atlas
