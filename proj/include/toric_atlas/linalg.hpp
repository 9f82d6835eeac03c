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
 * @file linalg.hpp
 * Small dense complex linear algebra for state vectors and gate matrices of
 * dimension 2, 3 and 4.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace toric_atlas {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Principal cube root of unity e^{2πi/3}, with exact real part.
inline Complex omega() { return {-0.5, std::numbers::sqrt3 / 2.0}; }
inline Complex omega2() { return {-0.5, -std::numbers::sqrt3 / 2.0}; }

/**
 * Absolute tolerances shared by every module.
 *
 * `zero` is the amplitude modulus at or below which a coordinate counts as
 * vanishing (its phase is then meaningless).
 */
struct Tolerances {
  double norm = 1e-12;
  double mat = 1e-12;
  double geom = 1e-9;
  double zero = 1e-9;

  /// Throws AtlasError("tolerance") unless every field is strictly positive.
  void validate() const;
};

class CVec {
 public:
  CVec() = default;
  explicit CVec(std::size_t dim) : entries_(dim) {}
  CVec(std::initializer_list<Complex> entries) : entries_(entries) {}
  explicit CVec(std::vector<Complex> entries) : entries_(std::move(entries)) {}

  static CVec basis(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return entries_.size(); }
  Complex &operator[](std::size_t i) { return entries_[i]; }
  const Complex &operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  double norm() const;
  bool is_unit(const Tolerances &tol = {}) const;
  /// Throws AtlasError("norm") for the zero vector.
  CVec normalized() const;

  friend CVec operator*(Complex s, const CVec &v);
  friend bool operator==(const CVec &, const CVec &) = default;

 private:
  std::vector<Complex> entries_;
};

/// Conjugate-linear in the first argument: sum conj(u_i) v_i.
Complex inner(const CVec &u, const CVec &v);

/// Row-major dense complex matrix.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMat(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);
  CMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMat identity(std::size_t n);
  static CMat diagonal(std::span<const Complex> diag);
  /// Permutation matrix sending basis state j to basis state image[j].
  static CMat permutation(std::span<const std::size_t> image);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Complex> entries() const noexcept { return data_; }

  CMat adjoint() const;
  CVec column(std::size_t c) const;

  friend CMat operator*(Complex s, const CMat &m);
  friend bool operator==(const CMat &, const CMat &) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Throws AtlasError("shape") when a.cols != b.rows.
CMat matmul(const CMat &a, const CMat &b);
/// Throws AtlasError("shape") when m.cols != v.dim.
CVec matvec(const CMat &m, const CVec &v);
/// Kronecker product; (a ⊗ b) acts with `a` on the leading tensor factor.
CMat tensor(const CMat &a, const CMat &b);
CMat matrix_power(const CMat &m, unsigned k);

inline CMat operator*(const CMat &a, const CMat &b) { return matmul(a, b); }
inline CVec operator*(const CMat &m, const CVec &v) { return matvec(m, v); }

/// Largest entrywise modulus of a - b; shapes must agree.
double max_abs_diff(const CMat &a, const CMat &b);
double max_abs_diff(const CVec &a, const CVec &b);

/// True iff max |M†M - I| <= tol.mat. Throws AtlasError("shape") if not square.
bool is_unitary(const CMat &m, const Tolerances &tol = {});

/**
 * Finds a unit scalar λ with a = λ·b (entrywise within tol.mat).
 *
 * The candidate is tr(b†a)/|tr(b†a)|; when that trace vanishes the largest
 * entry of b is matched instead. The candidate is always verified.
 */
std::optional<Complex> phase_equivalent(const CMat &a, const CMat &b,
                                        const Tolerances &tol = {});

/**
 * Fubini-Study distance arccos |<u, v>| in radians, in [0, π/2].
 *
 * Evaluated as 2·asin(|u - λv| / 2) with λ the aligning phase, which keeps
 * full precision for nearby states. Throws AtlasError("norm") unless both
 * inputs are unit vectors and AtlasError("shape") on a dimension mismatch.
 */
double fs_distance(const CVec &u, const CVec &v, const Tolerances &tol = {});

}  // namespace toric_atlas
