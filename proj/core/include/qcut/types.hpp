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

#ifndef QCUT_TYPES_HPP_
#define QCUT_TYPES_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qcut {

using cx = std::complex<double>;

// Small dense complex matrices, row-major. Mat2 holds single-qubit
// operators (gates, density operators, POVM elements), Mat4 two-qubit
// gates.
using Mat2 = std::array<cx, 4>;
using Mat4 = std::array<cx, 16>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_adjoint(const Mat2& a);
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat4 mat4_adjoint(const Mat4& a);

// Kronecker product a (x) b, 2x2 inputs.
Mat4 kron2(const Mat2& a, const Mat2& b);

cx trace(std::span<const cx> m, int dim);

// U^dag U == I entrywise within tol, for dim in {2, 4}.
bool is_unitary(std::span<const cx> u, int dim, double tol = 1e-12);
bool is_hermitian(const Mat2& m, double tol = 1e-12);
// Hermitian part assumed checked by the caller; tests eigenvalues >= -tol.
bool is_psd(const Mat2& m, double tol = 1e-12);
// Hermitian, PSD, unit trace within tol.
bool is_density_operator(const Mat2& m, double tol = 1e-12);

constexpr Mat2 kId2{cx{1}, cx{0}, cx{0}, cx{1}};
// Projectors |0><0| and |1><1|.
constexpr Mat2 kProj0{cx{1}, cx{0}, cx{0}, cx{0}};
constexpr Mat2 kProj1{cx{0}, cx{0}, cx{0}, cx{1}};

// Seed mixing for derived deterministic RNG streams (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace qcut

#endif  // QCUT_TYPES_HPP_
