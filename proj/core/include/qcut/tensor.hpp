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

#ifndef QCUT_TENSOR_HPP_
#define QCUT_TENSOR_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qcut/types.hpp"

namespace qcut {

// Dense rank-k tensor over the 4-element density-operator basis: 4^k
// complex values in row-major order, leg 0 most significant. Legs are
// positional (0..rank-1); the surrounding network names them via edge
// records.
struct Tensor {
  int rank = 0;
  std::vector<cx> data;  // size 4^rank

  static Tensor scalar(cx v) { return Tensor{0, {v}}; }
  static Tensor zeros(int rank);

  std::size_t size() const { return data.size(); }
  bool operator==(const Tensor&) const = default;
};

inline std::size_t pow4(int k) { return std::size_t{1} << (2 * k); }

// Reorder legs: perm[i] is the source leg that becomes output leg i.
Tensor permute_legs(const Tensor& t, std::span<const int> perm);

// Fix the given (leg, digit) pairs; result rank drops by the number of
// fixed legs. Legs must be distinct and digits in 0..3.
Tensor slice_legs(const Tensor& t, std::span<const std::pair<int, int>> fixed);

// Remaining-leg positions after slicing: old leg -> new leg, or -1 if fixed.
std::vector<int> slice_leg_map(int rank, std::span<const std::pair<int, int>> fixed);

}  // namespace qcut

#endif  // QCUT_TENSOR_HPP_
