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

#include "toric_atlas/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "toric_atlas/errors.hpp"

namespace toric_atlas {

void Tolerances::validate() const {
  for (double t : {norm, mat, geom, zero}) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw AtlasError("tolerance", "tolerances must be finite and strictly positive");
    }
  }
}

CVec CVec::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw AtlasError("shape", "basis index out of range");
  CVec v(dim);
  v[k] = 1.0;
  return v;
}

double CVec::norm() const {
  double s = 0.0;
  for (const auto &z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool CVec::is_unit(const Tolerances &tol) const {
  return !entries_.empty() && std::abs(norm() - 1.0) <= tol.norm;
}

CVec CVec::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw AtlasError("norm", "cannot normalize a zero vector");
  return Complex(1.0 / n) * *this;
}

CVec operator*(Complex s, const CVec &v) {
  CVec out = v;
  for (auto &z : out.entries_) z *= s;
  return out;
}

Complex inner(const CVec &u, const CVec &v) {
  if (u.dim() != v.dim()) throw AtlasError("shape", "inner product of vectors of different dimension");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_) throw AtlasError("shape", "entry count does not match shape");
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) throw AtlasError("shape", "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const Complex> diag) {
  CMat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMat CMat::permutation(std::span<const std::size_t> image) {
  const std::size_t n = image.size();
  CMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (image[j] >= n) throw AtlasError("shape", "permutation image out of range");
    m(image[j], j) = 1.0;
  }
  return m;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CVec CMat::column(std::size_t c) const {
  CVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

CMat operator*(Complex s, const CMat &m) {
  CMat out = m;
  for (auto &z : out.data_) z *= s;
  return out;
}

CMat matmul(const CMat &a, const CMat &b) {
  if (a.cols() != b.rows()) {
    throw AtlasError("shape", "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                  " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CVec matvec(const CMat &m, const CVec &v) {
  if (m.cols() != v.dim()) throw AtlasError("shape", "matrix/vector dimension mismatch");
  CVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

CMat tensor(const CMat &a, const CMat &b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

CMat matrix_power(const CMat &m, unsigned k) {
  if (!m.is_square()) throw AtlasError("shape", "matrix power of a non-square matrix");
  CMat out = CMat::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = matmul(out, m);
  return out;
}

double max_abs_diff(const CMat &a, const CMat &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw AtlasError("shape", "shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double max_abs_diff(const CVec &a, const CVec &b) {
  if (a.dim() != b.dim()) throw AtlasError("shape", "dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool is_unitary(const CMat &m, const Tolerances &tol) {
  if (!m.is_square()) throw AtlasError("shape", "unitarity test on a non-square matrix");
  return max_abs_diff(matmul(m.adjoint(), m), CMat::identity(m.rows())) <= tol.mat;
}

std::optional<Complex> phase_equivalent(const CMat &a, const CMat &b, const Tolerances &tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw AtlasError("shape", "shape mismatch");

  Complex trace = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) trace += std::conj(b.entries()[i]) * a.entries()[i];

  Complex lambda;
  if (std::abs(trace) > tol.mat) {
    lambda = trace / std::abs(trace);
  } else {
    auto it = std::max_element(b.entries().begin(), b.entries().end(),
                               [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
    if (it == b.entries().end() || std::abs(*it) <= tol.mat) return std::nullopt;
    lambda = a.entries()[static_cast<std::size_t>(it - b.entries().begin())] / *it;
    if (std::abs(std::abs(lambda) - 1.0) > tol.mat) return std::nullopt;
    lambda /= std::abs(lambda);
  }
  if (max_abs_diff(a, lambda * b) > tol.mat) return std::nullopt;
  return lambda;
}

double fs_distance(const CVec &u, const CVec &v, const Tolerances &tol) {
  if (u.dim() != v.dim()) throw AtlasError("shape", "fs_distance: dimension mismatch");
  if (!u.is_unit(tol) || !v.is_unit(tol)) throw AtlasError("norm", "fs_distance: inputs must be unit vectors");
  const Complex c = inner(v, u);
  if (std::abs(c) == 0.0) return kPi / 2.0;
  const Complex lambda = c / std::abs(c);
  double gap = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) gap += std::norm(u[i] - lambda * v[i]);
  return std::min(kPi / 2.0, 2.0 * std::asin(std::min(1.0, std::sqrt(gap) / 2.0)));
}

}  // namespace toric_atlas
