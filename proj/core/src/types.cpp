// Copyright 2026 The qcut authors
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

#include "qcut/types.hpp"

#include <cmath>

namespace qcut {

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) r[i * 2 + j] += a[i * 2 + k] * b[k * 2 + j];
  return r;
}

Mat2 mat2_adjoint(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i * 2 + j] = std::conj(a[j * 2 + i]);
  return r;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return r;
}

Mat4 mat4_adjoint(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i * 4 + j] = std::conj(a[j * 4 + i]);
  return r;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r[(i * 2 + k) * 4 + (j * 2 + l)] = a[i * 2 + j] * b[k * 2 + l];
  return r;
}

cx trace(std::span<const cx> m, int dim) {
  cx t = 0;
  for (int i = 0; i < dim; ++i) t += m[i * dim + i];
  return t;
}

bool is_unitary(std::span<const cx> u, int dim, double tol) {
  if (static_cast<int>(u.size()) != dim * dim) return false;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      cx s = 0;
      for (int k = 0; k < dim; ++k) s += std::conj(u[k * dim + i]) * u[k * dim + j];
      const cx want = (i == j) ? cx{1} : cx{0};
      if (std::abs(s - want) > tol) return false;
    }
  }
  return true;
}

bool is_hermitian(const Mat2& m, double tol) {
  return std::abs(m[0] - std::conj(m[0])) <= tol &&
         std::abs(m[3] - std::conj(m[3])) <= tol &&
         std::abs(m[1] - std::conj(m[2])) <= tol;
}

bool is_psd(const Mat2& m, double tol) {
  // Eigenvalues of a 2x2 Hermitian matrix.
  const double tr = m[0].real() + m[3].real();
  const double det = (m[0] * m[3] - m[1] * m[2]).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double lo = 0.5 * (tr - disc);
  return lo >= -tol;
}

bool is_density_operator(const Mat2& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (!is_psd(m, tol)) return false;
  return std::abs(m[0] + m[3] - cx{1}) <= tol;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace qcut
