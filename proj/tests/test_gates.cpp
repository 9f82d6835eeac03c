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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "toric_atlas/errors.hpp"
#include "toric_atlas/gates.hpp"
#include "toric_atlas/toric.hpp"

using namespace toric_atlas;
using namespace toric_atlas::testing;

namespace {

const Complex I{0.0, 1.0};

std::string error_code(const std::function<void()> &f) {
  try {
    f();
  } catch (const AtlasError &e) {
    return e.code();
  }
  return "";
}

GateMatrix gate(int radix, std::string_view name, Notation n = Notation::math) {
  auto g = find_gate(radix, name, n);
  REQUIRE_MESSAGE(g.has_value(), name);
  return *g;
}

std::size_t count_tag(int radix, GateTag t) {
  const auto gates = catalog(radix);
  return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [&](const GateMatrix &g) { return g.has_tag(t); }));
}

// Brute-force order and square permutation, independent of chrestenson_properties.
std::pair<int, std::vector<std::size_t>> order_and_square(const CMat &m) {
  const Eigen::MatrixXcd e = to_eigen(m);
  Eigen::MatrixXcd p = e;
  int order = 1;
  while ((p - Eigen::MatrixXcd::Identity(e.rows(), e.cols())).cwiseAbs().maxCoeff() > 1e-12 && order < 12) {
    p = p * e;
    ++order;
  }
  const Eigen::MatrixXcd sq = e * e;
  std::vector<std::size_t> image;
  for (Eigen::Index c = 0; c < sq.cols(); ++c) {
    Eigen::Index r = 0;
    sq.col(c).cwiseAbs().maxCoeff(&r);
    image.push_back(static_cast<std::size_t>(r));
  }
  return {order, image};
}

}  // namespace

TEST_SUITE("gatecat") {
  TEST_CASE("catalog census") {
    CHECK(count_tag(3, GateTag::diagonal) == 36);
    CHECK(count_tag(3, GateTag::uniformizer) == 9);
    CHECK(count_tag(3, GateTag::chrestenson) == 3);
    const auto h = gate(2, "H");
    CHECK(std::abs(h.printed_scalar - 1 / std::sqrt(2.0)) < 1e-15);
    for (const char *name : {"H", "S", "T", "SqrtX", "X", "Y", "Z", "I"}) CHECK(find_gate(2, name).has_value());
    for (const char *name : {"CNOT_paper", "CNOT", "EPR", "EPR_math", "IxH"}) CHECK(find_gate(4, name).has_value());
    CHECK_FALSE(find_gate(3, "H").has_value());
  }

  TEST_CASE("catalog names are unique and ordering is stable") {
    for (int radix : {2, 3, 4}) {
      const auto a = catalog(radix), b = catalog(radix);
      std::set<std::string> names;
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        names.insert(a[i].name);
      }
      CHECK(names.size() == a.size());
    }
  }

  TEST_CASE("catalog integrity: unitary, radix, natural printed entries") {
    for (Notation n : {Notation::math, Notation::engineering}) {
      for (int radix : {2, 3, 4}) {
        for (const auto &g : catalog(radix, n)) {
          INFO(g.name);
          CHECK(g.radix == radix);
          CHECK(g.matrix.rows() == static_cast<std::size_t>(radix == 4 ? 4 : radix));
          CHECK(is_unitary(g.matrix));
          const CMat p = g.printed();
          for (Complex z : p.entries()) CHECK(is_natural_entry(z, 1e-12));
        }
      }
    }
  }

  TEST_CASE("is_natural_entry") {
    CHECK(is_natural_entry(0.0));
    CHECK(is_natural_entry(-I));
    CHECK(is_natural_entry(omega2()));
    CHECK(is_natural_entry(-omega()));
    CHECK(is_natural_entry(Complex(1, -1) / 2.0));
    CHECK(is_natural_entry(std::polar(1.0, kPi / 4)));
    CHECK_FALSE(is_natural_entry(0.5));
    CHECK_FALSE(is_natural_entry(std::polar(1.0, 0.3)));
  }

  TEST_CASE("apply examples") {
    CHECK(apply(gate(3, "SHIFT+1"), CVec::basis(3, 0)) == CVec::basis(3, 1));
    const double r = 1 / std::sqrt(3.0);
    CHECK(max_abs_diff(apply(gate(3, "QFT3"), CVec::basis(3, 0)), CVec{r, r, r}) < 1e-15);
    std::mt19937_64 rng(1);
    const CVec s = random_state(rng, 4);
    CHECK(apply(gate(4, "I"), s) == s);
    CHECK(error_code([&] { (void)apply(gate(2, "H"), s); }) == "shape");
    CHECK(error_code([&] { (void)apply(gate(2, "H"), CVec{1, 1}); }) == "norm");
  }

  TEST_CASE("shift gates") {
    const CMat s1 = gate(3, "SHIFT+1").matrix, s2 = gate(3, "SHIFT+2").matrix;
    CHECK(matrix_power(s1, 3) == CMat::identity(3));
    CHECK(s1 * s1 == s2);
    CHECK(apply(gate(3, "SHIFT+2"), CVec::basis(3, 0)) == CVec::basis(3, 2));
  }

  TEST_CASE("uniformizers") {
    for (const auto &g : catalog(3)) {
      INFO(g.name);
      CHECK(is_uniformizing(g.matrix) == g.has_tag(GateTag::uniformizer));
      if (!g.has_tag(GateTag::uniformizer)) continue;
      for (Complex z : g.matrix.entries()) CHECK(std::abs(std::abs(z) - 1 / std::sqrt(3.0)) < 1e-12);
      for (std::size_t j = 0; j < 3; ++j) {
        const ToricPoint tp = decompose(apply(g, CVec::basis(3, j)));
        for (double p : tp.convex) CHECK(std::abs(p - 1.0 / 3) < 1e-9);
      }
    }
    CHECK_FALSE(is_uniformizing(CMat::identity(3)));
    const std::vector<Complex> d{1.0, omega(), omega2()};
    CHECK_FALSE(is_uniformizing(CMat::diagonal(d)));
    CHECK(error_code([] { (void)is_uniformizing(gate(3, "QFT3").printed()); }) == "unitary");
  }

  TEST_CASE("Chrestenson gates: order 4, squares are transpositions") {
    const std::vector<std::pair<const char *, std::vector<std::size_t>>> expected = {
        {"QFT3", {0, 2, 1}}, {"QFT3_012", {2, 1, 0}}, {"QFT3_021", {1, 0, 2}}};
    for (const auto &[name, square] : expected) {
      INFO(name);
      const auto g = gate(3, name);
      const auto report = chrestenson_properties(g);
      CHECK(report.order == 4);
      CHECK(report.square_is_permutation);
      CHECK(report.square_is_transposition);
      CHECK(report.square_cycle == square);
      const auto [order, image] = order_and_square(g.matrix);
      CHECK(order == 4);
      CHECK(image == square);
      // The square is exactly a permutation matrix.
      CHECK(max_abs_diff(g.matrix * g.matrix, CMat::permutation(square)) < 1e-15);
    }
    const auto id = chrestenson_properties(gate(3, "I"));
    CHECK(id.order == 1);
    CHECK_FALSE(id.square_is_transposition);
  }

  TEST_CASE("Chrestenson gates are shift conjugates of QFT3") {
    const CMat q = gate(3, "QFT3").matrix, s = gate(3, "SHIFT+1").matrix;
    CHECK(max_abs_diff(gate(3, "QFT3_012").matrix, s * q * s.adjoint()) < 1e-15);
    CHECK(max_abs_diff(gate(3, "QFT3_021").matrix, s.adjoint() * q * s) < 1e-15);
  }

  TEST_CASE("printed Chrestenson matrices") {
    const auto printed = chrestenson_printed();
    REQUIRE(printed.size() == 3);
    const double k = 1 / std::sqrt(3.0);
    CHECK(is_unitary(Complex(k) * printed[0]));
    CHECK_FALSE(is_unitary(Complex(k) * printed[1]));
    CHECK(is_unitary(Complex(k) * printed[2]));
    CHECK(max_abs_diff(Complex(k) * printed[2], gate(3, "QFT3_021").matrix) < 1e-15);
  }

  TEST_CASE("not periodic") {
    GateMatrix g;
    g.name = "irrational";
    g.radix = 2;
    g.matrix = CMat{{1, 0}, {0, std::polar(1.0, 1.0)}};
    CHECK(error_code([&] { (void)chrestenson_properties(g); }) == "not periodic");
  }

  TEST_CASE("QFT3 barycenter images form the triangle A, B, C") {
    const std::vector<GateMatrix> gs{gate(3, "QFT3")};
    const auto images = barycenter_image(gs);
    REQUIRE(images.size() == 3);
    const std::vector<std::array<double, 2>> abc{{0, 0}, {2 * kPi / 3, 4 * kPi / 3}, {4 * kPi / 3, 2 * kPi / 3}};
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(images[j].pivot == 0);
      CHECK(circular_gap(images[j].phases[1], abc[j][0]) < 1e-12);
      CHECK(circular_gap(images[j].phases[2], abc[j][1]) < 1e-12);
      for (double p : images[j].convex) CHECK(std::abs(p - 1.0 / 3) < 1e-12);
    }
  }

  TEST_CASE("shift-conjugated Chrestenson gates rotate the triangle") {
    auto phase_pairs = [](const char *name) {
      const std::vector<GateMatrix> gs{gate(3, name)};
      std::vector<std::array<double, 2>> out;
      for (const auto &tp : barycenter_image(gs)) out.push_back({tp.phases[1], tp.phases[2]});
      return out;
    };
    const auto base = phase_pairs("QFT3");
    for (const char *name : {"QFT3_012", "QFT3_021"}) {
      const auto img = phase_pairs(name);
      // Same vertex set, labels moved along the cycle A -> B -> C.
      bool cyclic = false;
      for (std::size_t shift = 1; shift < 3; ++shift) {
        bool all = true;
        for (std::size_t j = 0; j < 3; ++j) {
          const auto &p = img[j], &q = base[(j + shift) % 3];
          all = all && circular_gap(p[0], q[0]) < 1e-12 && circular_gap(p[1], q[1]) < 1e-12;
        }
        cyclic = cyclic || all;
      }
      CHECK_MESSAGE(cyclic, name);
    }
  }

  TEST_CASE("barycenter_image rejects non-uniformizers") {
    const std::vector<GateMatrix> gs{gate(3, "SHIFT+1")};
    CHECK(error_code([&] { (void)barycenter_image(gs); }) == "not uniformizing");
  }

  TEST_CASE("EPR gate") {
    const double r = 1 / std::sqrt(2.0);
    const CMat expected = Complex(r) * CMat{{1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}, {1, -1, 0, 0}};
    const GateMatrix epr = epr_compose(Notation::math);
    CHECK(max_abs_diff(epr.matrix, expected) < 1e-15);
    CHECK(max_abs_diff(epr.matrix, gate(4, "EPR_math").matrix) == 0.0);
    CHECK(max_abs_diff(apply(epr, CVec::basis(4, 0)), CVec{r, 0, 0, r}) < 1e-15);

    const CMat b = CMat::permutation(std::vector<std::size_t>{0, 2, 1, 3});
    CHECK(max_abs_diff(epr_compose(Notation::engineering).matrix, b * epr.matrix * b) < 1e-15);
    CHECK(max_abs_diff(gate(4, "EPR", Notation::engineering).matrix, b * epr.matrix * b) < 1e-15);
  }

  TEST_CASE("EPR maps the standard basis onto the Bell basis") {
    const double r = 1 / std::sqrt(2.0);
    const std::vector<CVec> bell{CVec{r, 0, 0, r}, CVec{r, 0, 0, -r}, CVec{0, r, r, 0}, CVec{0, -r, r, 0}};
    const GateMatrix epr = epr_compose();
    for (std::size_t k = 0; k < 4; ++k) CHECK(max_abs_diff(apply(epr, CVec::basis(4, k)), bell[k]) < 1e-15);
  }

  TEST_CASE("printed EPR identity in integer arithmetic") {
    const EprFactors f = epr_printed();
    CHECK(int_matmul(f.cnot, f.i_x_h) == f.epr);
    CHECK(f.epr == IntMatrix{{1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}, {1, -1, 0, 0}});
  }

  TEST_CASE("Bell preparations") {
    const auto bell = gate(4, "BELL_PSI-");
    const double r = 1 / std::sqrt(2.0);
    CHECK(max_abs_diff(apply(bell, CVec::basis(4, 0)), CVec{0, r, -r, 0}) < 1e-15);
  }

  TEST_CASE("H equals S sqrt(X) S up to phase") {
    const Eq1Report rep = verify_eq1();
    CHECK(rep.holds);
    REQUIRE(rep.phase);
    CHECK(std::abs(*rep.phase - std::polar(1.0, kPi / 4)) < 1e-12);
    CHECK(rep.residual < 1e-12);
    CHECK_FALSE(verify_eq1(gate(2, "Z").matrix).holds);

    const CMat s = gate(2, "S").matrix, sx = gate(2, "SqrtX").matrix;
    const CMat w = s * sx * s;
    CHECK(phase_equivalent(w * w, CMat::identity(2)).has_value());
    // Independent complex arithmetic on the printed factors.
    const Eigen::Matrix2cd es{{1, 0}, {0, I}};
    const Eigen::Matrix2cd esx{{Complex(1, 1) / 2.0, Complex(1, -1) / 2.0}, {Complex(1, -1) / 2.0, Complex(1, 1) / 2.0}};
    const Eigen::Matrix2cd eh = Eigen::Matrix2cd{{1, 1}, {1, -1}} / std::sqrt(2.0);
    CHECK((es * esx * es - std::polar(1.0, kPi / 4) * eh).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("diagonal gates fix the convex coordinate") {
    std::mt19937_64 rng(12);
    const CVec s = random_state(rng, 3);
    const auto before = decompose(s).convex;
    for (const auto &g : catalog(3)) {
      if (!g.has_tag(GateTag::diagonal)) continue;
      const auto after = decompose(apply(g, s)).convex;
      for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(after[i] - before[i]) < 1e-12);
    }
  }

  TEST_CASE("notation") {
    CHECK(basis_state(4, "01", Notation::math) == CVec::basis(4, 1));
    CHECK(basis_state(4, "01", Notation::engineering) == CVec::basis(4, 2));
    CHECK(basis_state(3, "2") == CVec::basis(3, 2));
    CHECK(error_code([] { (void)basis_state(4, "3"); }) != "");
    CHECK(parse_notation("engineering") == Notation::engineering);
    CHECK(error_code([] { (void)parse_notation("physics"); }) == "notation");
    const CMat b = bit_reversal();
    CHECK(b * b == CMat::identity(4));
    const CMat c = gate(4, "CNOT").matrix;
    CHECK(to_notation(c, Notation::engineering) == b * c * b);
    CHECK(to_notation(c, Notation::math) == c);
  }
}
