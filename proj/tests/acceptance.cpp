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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <fmt/format.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "toric_atlas/entangle.hpp"
#include "toric_atlas/gates.hpp"
#include "toric_atlas/group.hpp"
#include "toric_atlas/render.hpp"
#include "toric_atlas/toric.hpp"

using namespace toric_atlas;
using namespace toric_atlas::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// a + b·ω with integer a, b (ω² = -1 - ω).
struct Eisenstein {
  long a = 0;
  long b = 0;
  friend Eisenstein operator+(Eisenstein x, Eisenstein y) { return {x.a + y.a, x.b + y.b}; }
  friend Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const Eisenstein &, const Eisenstein &) = default;
};
using EMatrix = std::array<std::array<Eisenstein, 3>, 3>;

std::optional<Eisenstein> to_eisenstein(Complex z) {
  const double b = 2.0 * z.imag() / std::sqrt(3.0);
  const double a = z.real() + b / 2.0;
  const Eisenstein e{std::lround(a), std::lround(b)};
  const Complex back = static_cast<double>(e.a) + static_cast<double>(e.b) * omega();
  if (std::abs(back - z) > 1e-9) return std::nullopt;
  return e;
}

EMatrix emul(const EMatrix &x, const EMatrix &y) {
  EMatrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = out[i][j] + x[i][k] * y[k][j];
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, std::string> run_binary(const std::string &args) {
  const std::string cmd = std::string(TORIC_ATLAS_CLI) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double off_line(const std::vector<double> &a, const std::vector<double> &b, const std::vector<double> &c) {
  const Eigen::Map<const Eigen::VectorXd> ea(a.data(), static_cast<Eigen::Index>(a.size()));
  const Eigen::Map<const Eigen::VectorXd> eb(b.data(), static_cast<Eigen::Index>(b.size()));
  const Eigen::Map<const Eigen::VectorXd> ec(c.data(), static_cast<Eigen::Index>(c.size()));
  const Eigen::VectorXd dir = (ec - ea).normalized();
  const Eigen::VectorXd w = eb - ea;
  return (w - w.dot(dir) * dir).norm();
}

std::vector<double> random_octant_point(std::mt19937_64 &rng, std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<double> x(dim);
  double n = 0.0;
  for (auto &v : x) {
    v = std::abs(g(rng)) + 0.05;
    n += v * v;
  }
  for (auto &v : x) v /= std::sqrt(n);
  return x;
}

// 1
Outcome epr_factorization() {
  const IntMatrix cnot{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
  const IntMatrix ixh{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}};
  const IntMatrix epr{{1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}, {1, -1, 0, 0}};
  const auto t0 = Clock::now();
  const EprFactors f = epr_printed();
  const bool equal = int_matmul(f.cnot, f.i_x_h) == f.epr;
  const double ms = ms_since(t0);
  const bool literal = f.cnot == cnot && f.i_x_h == ixh && f.epr == epr;
  const bool catalog_cnot = max_abs_diff(find_gate(4, "CNOT_paper")->matrix, CMat{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}) == 0.0;
  return {equal && literal && catalog_cnot && ms < 1.0,
          fmt::format("integer product equal={}, factors as printed={}, runtime {:.4f} ms", equal, literal, ms)};
}

// 2
Outcome h_equals_s_sqrtx_s() {
  const Eq1Report r = verify_eq1();
  const double phase_err = r.phase ? std::abs(*r.phase - std::polar(1.0, kPi / 4)) : 1.0;
  return {r.holds && r.residual < 1e-12 && phase_err < 1e-12,
          fmt::format("holds={}, residual {:.3e}, |phase - e^(i pi/4)| = {:.3e}", r.holds, r.residual, phase_err)};
}

// 3
Outcome chrestenson_algebra() {
  std::vector<std::string> lines;
  bool ok = true;
  int count = 0;
  for (const auto &g : catalog(3)) {
    if (!g.has_tag(GateTag::chrestenson)) continue;
    ++count;
    EMatrix m{};
    bool integral = true;
    const CMat p = g.printed();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto e = to_eisenstein(p(i, j));
        integral = integral && e.has_value();
        if (e) m[i][j] = *e;
      }
    // Unnormalized: M² = 3·P with P a transposition, M⁴ = 9·I, M^k ≠ c·I for k < 4.
    const EMatrix m2 = emul(m, m), m4 = emul(m2, m2);
    std::vector<int> image(3, -1);
    bool perm = true;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        if (m2[i][j] == Eisenstein{3, 0}) {
          perm = perm && image[j] < 0;
          image[j] = i;
        } else {
          perm = perm && m2[i][j] == Eisenstein{0, 0};
        }
      }
    int fixed = 0;
    for (int j = 0; j < 3; ++j) fixed += image[j] == j;
    const bool transposition = perm && fixed == 1;
    bool m4_scalar = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m4_scalar = m4_scalar && m4[i][j] == Eisenstein{i == j ? 9 : 0, 0};
    const auto rep = chrestenson_properties(g);
    const bool this_ok = integral && transposition && m4_scalar && rep.order == 4 && rep.square_is_transposition;
    ok = ok && this_ok;
    lines.push_back(fmt::format("{}: order {}, square ({} {} {})", g.name, rep.order, image[0], image[1], image[2]));
  }
  ok = ok && count == 3;
  return {ok, fmt::format("{}", fmt::join(lines, "; "))};
}

// 4
Outcome uniformizer_census() {
  int count = 0;
  double worst = 0.0;
  for (const auto &g : catalog(3)) {
    if (!is_uniformizing(g.matrix)) continue;
    ++count;
    for (Complex z : g.matrix.entries()) worst = std::max(worst, std::abs(std::abs(z) - 1 / std::sqrt(3.0)));
  }
  return {count == 9 && worst < 1e-12, fmt::format("{} uniformizers, max | |z| - 1/sqrt3 | = {:.3e}", count, worst)};
}

// 5
Outcome diagonal_group() {
  const auto g = enumerate_group();
  const std::set<GroupElement> set(g.begin(), g.end());
  bool closed = true, inverses = true, abelian = true;
  for (const auto &x : g) {
    inverses = inverses && set.contains(x.inverse()) && x * x.inverse() == GroupElement::identity();
    for (const auto &y : g) {
      closed = closed && set.contains(x * y);
      abelian = abelian && x * y == y * x;
    }
  }
  // Each element's matrix is diag(1, a, b) with a, b sixth roots of unity.
  bool sixth_roots = true;
  for (const auto &x : g) {
    const CMat m = x.matrix();
    for (std::size_t k = 1; k < 3; ++k) {
      const Complex z = m(k, k);
      const Complex z6 = z * z * z * z * z * z;
      sixth_roots = sixth_roots && std::abs(z6 - 1.0) < 1e-12;
    }
  }
  return {g.size() == 36 && set.size() == 36 && closed && inverses && abelian && sixth_roots,
          fmt::format("{} elements, closed={}, inverses={}, abelian={}", g.size(), closed, inverses, abelian)};
}

// 6
Outcome fubini_study_facts() {
  double worst = 0.0;
  for (std::size_t d : {2u, 3u, 4u})
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j) worst = std::max(worst, std::abs(fs_distance(CVec::basis(d, i), CVec::basis(d, j)) - kPi / 2));
  const double gram_len = orbit_gram(SimplexPoint{{0.5, 0.5}}, 0).edge_lengths[0];
  // Walk the equator orbit (1, e^{iθ})/√2 and add up geodesic steps.
  const int n = 4096;
  const double r = 1 / std::sqrt(2.0);
  double walked = 0.0;
  for (int k = 0; k < n; ++k) {
    const CVec a{r, std::polar(r, kTwoPi * k / n)}, b{r, std::polar(r, kTwoPi * (k + 1) / n)};
    walked += fs_distance(a, b);
  }
  const bool ok = worst < 1e-12 && std::abs(gram_len - kPi) < 1e-12 && std::abs(walked - kPi) < 1e-12;
  return {ok, fmt::format("max |d(e_i,e_j) - pi/2| = {:.3e}, circumference {:.15f} (metric), {:.15f} (walked)", worst,
                          gram_len, walked)};
}

// 7
Outcome barycenter_rhombus() {
  const OrbitGram g = orbit_gram(SimplexPoint{{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 0);
  const double de = std::abs(g.edge_lengths[0] - g.edge_lengths[1]);
  const double angle = g.angles.at(0).radians.value_or(0.0);
  const double da = std::abs(angle - 2 * kPi / 3);
  return {de < 1e-12 && da < 1e-9,
          fmt::format("edges {:.12f}, {:.12f}; angle {:.12f} deg", g.edge_lengths[0], g.edge_lengths[1], angle * 180 / kPi)};
}

// 8
Outcome pi_over_four() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8);
  const ProductStateSampler sampler(100000, 88);
  double worst_schmidt = 0.0, worst_search = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const CVec s = random_maximal_state(rng);
    worst_schmidt = std::max(worst_schmidt, std::abs(min_distance_to_separable(s) - kPi / 4));
    worst_search = std::max(worst_search, std::abs(sampler.minimize(s).distance - kPi / 4));
  }
  const double ms = ms_since(t0);
  return {worst_schmidt < 1e-6 && worst_search < 1e-3 && ms < 10000.0,
          fmt::format("max deviation {:.3e} (Schmidt), {:.3e} (product-state search, 1e5 samples); runtime {:.0f} ms",
                      worst_schmidt, worst_search, ms)};
}

// 9
Outcome locus_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(9);
  int disagreements = 0;
  std::map<EntanglementClass, int> counts;
  auto check = [&](const CVec &s) {
    const auto r = classify(s, 1e-9);
    const auto tp = decompose(s);
    disagreements += (r.cls == EntanglementClass::maximal) != me_locus_contains(tp);
    disagreements += (r.cls == EntanglementClass::separable) != sep_locus_contains(tp);
    ++counts[r.cls];
  };
  for (int t = 0; t < 10000; ++t) check(random_state(rng, 4));
  // The same count again drawn from the two loci themselves.
  for (int t = 0; t < 10000; ++t) {
    if (t % 2) {
      check(random_maximal_state(rng));
    } else {
      const CVec a = random_state(rng, 2), b = random_state(rng, 2);
      check(CVec{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]});
    }
  }
  const double ms = ms_since(t0);
  return {disagreements == 0 && ms < 5000.0,
          fmt::format("{} disagreements over 2x10^4 states (separable {}, partial {}, maximal {}); runtime {:.0f} ms",
                      disagreements, counts[EntanglementClass::separable], counts[EntanglementClass::partial],
                      counts[EntanglementClass::maximal], ms)};
}

// 10
Outcome round_trip() {
  std::mt19937_64 rng(10);
  double worst = 0.0, worst_oracle = 0.0;
  for (std::size_t d : {2u, 3u, 4u})
    for (int t = 0; t < 10000; ++t) {
      const CVec s = random_state(rng, d);
      const CVec back = reconstruct(decompose(s));
      worst = std::max(worst, fs_distance(back, s));
      worst_oracle = std::max(worst_oracle, fs_distance_oracle(back, s));
    }
  return {worst <= 1e-9 && worst_oracle <= 1e-9,
          fmt::format("max distance {:.3e} (library), {:.3e} (projector oracle)", worst, worst_oracle)};
}

// 11
Outcome projection_properties() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double collinear = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 3 + static_cast<std::size_t>(t % 2);
    const auto u = random_octant_point(rng, d), v = random_octant_point(rng, d);
    std::vector<std::vector<double>> img;
    for (double s : {0.0, unit(rng), 1.0}) {
      std::vector<double> w(d);
      double n = 0.0;
      for (std::size_t i = 0; i < d; ++i) n += (w[i] = (1 - s) * u[i] + s * v[i]) * w[i];
      for (auto &c : w) c /= std::sqrt(n);
      img.push_back(gnomonic(w).coords);
    }
    collinear = std::max(collinear, off_line(img[0], img[1], img[2]));
  }

  std::normal_distribution<double> g;
  double conformal = 0.0;
  const double h = 1e-5;
  for (int t = 0; t < 1000; ++t) {
    const auto x0 = random_octant_point(rng, 3);
    const Eigen::Vector3d x(x0[0], x0[1], x0[2]);
    Eigen::Vector3d t1(g(rng), g(rng), g(rng)), t2(g(rng), g(rng), g(rng));
    t1 -= t1.dot(x) * x;
    t2 -= t2.dot(x) * x;
    const double on_sphere = std::acos(t1.normalized().dot(t2.normalized()));
    const auto pole = static_cast<std::size_t>(t % 3);
    auto tangent = [&](const Eigen::Vector3d &dir) {
      auto at = [&](double s) {
        const Eigen::Vector3d p = (x + s * dir).normalized();
        const auto y = stereographic(std::vector<double>{p(0), p(1), p(2)}, pole);
        return Eigen::Vector3d(y[0], y[1], y[2]);
      };
      return Eigen::Vector3d((at(h) - at(-h)) / (2 * h));
    };
    const Eigen::Vector3d i1 = tangent(t1), i2 = tangent(t2);
    const double on_plane = std::acos(std::clamp(i1.normalized().dot(i2.normalized()), -1.0, 1.0));
    conformal = std::max(conformal, std::abs(on_plane - on_sphere));
  }

  // (1,1,0)/√2, (1,2,1)/√6, (0,1,1)/√2 lie on one great circle.
  const double a = 1 / std::sqrt(2.0), b = 1 / std::sqrt(6.0);
  const double witness = off_line(squared_map(std::vector<double>{a, a, 0}).coords,
                                  squared_map(std::vector<double>{b, 2 * b, b}).coords,
                                  squared_map(std::vector<double>{0, a, a}).coords);
  return {collinear < 1e-9 && conformal < 1e-6 && witness > 1e-3,
          fmt::format("gnomonic residual {:.3e}, stereographic angle error {:.3e}, squared-map witness {:.4f}", collinear,
                      conformal, witness)};
}

// 12
Outcome figure_goldens() {
  bool ok = true;
  std::vector<std::string> notes;
  for (int fig : {13, 16, 17, 19}) {
    const auto [c1, first] = run_binary(fmt::format("figure paper-fig {}", fig));
    const auto [c2, second] = run_binary(fmt::format("figure paper-fig {}", fig));
    const bool stable = c1 == 0 && c2 == 0 && !first.empty() && first == second;
    const bool golden = first == read_file(fmt::format("{}/fig{}.svg", TORIC_ATLAS_GOLDEN_DIR, fig));
    ok = ok && stable && golden;
    notes.push_back(fmt::format("{}: {} bytes{}{}", fig, first.size(), stable ? "" : " UNSTABLE", golden ? "" : " GOLDEN-MISMATCH"));
  }
  const FigureScene scene = qft_fiber_scene();
  const std::vector<std::array<double, 2>> want{{0, 0}, {2 * kPi / 3, 4 * kPi / 3}, {4 * kPi / 3, 2 * kPi / 3}};
  bool marks = scene.marks.size() == 3;
  for (std::size_t k = 0; marks && k < 3; ++k)
    marks = circular_gap(scene.marks[k].position[0], want[k][0]) < 1e-12 &&
            circular_gap(scene.marks[k].position[1], want[k][1]) < 1e-12;
  ok = ok && marks;
  notes.push_back(fmt::format("QFT3 marks at A, B, C: {}", marks));
  return {ok, fmt::format("{}", fmt::join(notes, "; "))};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"EPR = CNOT (I x H) in integer arithmetic", epr_factorization},
      {"H ~ S sqrt(X) S with phase e^(i pi/4)", h_equals_s_sqrtx_s},
      {"Chrestenson gates: order 4, square a transposition", chrestenson_algebra},
      {"Nine ternary uniformizers", uniformizer_census},
      {"36-element diagonal group", diagonal_group},
      {"Fubini-Study distances and circumference", fubini_study_facts},
      {"Rhombus above the barycenter", barycenter_rhombus},
      {"Maximal entanglement sits pi/4 from the separable states", pi_over_four},
      {"Class agrees with the toric loci", locus_equivalence},
      {"Decompose/reconstruct round trip", round_trip},
      {"Projection properties", projection_properties},
      {"Figure goldens", figure_goldens},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu  %s  [%s] (%.1f ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), ms_since(t0));
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
