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

#include "qcut/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcut {

Tensor Tensor::zeros(int rank) {
  if (rank < 0) throw std::invalid_argument("negative tensor rank");
  Tensor t;
  t.rank = rank;
  t.data.assign(pow4(rank), cx{0});
  return t;
}

Tensor permute_legs(const Tensor& t, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != t.rank)
    throw std::invalid_argument("permutation length != tensor rank");

  // Stride (in the input) of the digit that lands at each output position.
  std::vector<std::size_t> in_stride(t.rank);
  std::vector<bool> seen(t.rank, false);
  for (int out_pos = 0; out_pos < t.rank; ++out_pos) {
    const int src = perm[out_pos];
    if (src < 0 || src >= t.rank)
      throw std::invalid_argument("permutation entry out of range");
    if (seen[src]) throw std::invalid_argument("permutation entry repeated");
    seen[src] = true;
    in_stride[out_pos] = pow4(t.rank - 1 - src);
  }
  if (t.rank <= 1) return t;

  Tensor out = Tensor::zeros(t.rank);
  std::vector<int> digit(t.rank, 0);
  std::size_t in_idx = 0;
  const std::size_t n = t.size();
  for (std::size_t out_idx = 0; out_idx < n; ++out_idx) {
    out.data[out_idx] = t.data[in_idx];
    // Odometer over output digits, least significant first.
    for (int p = t.rank - 1; p >= 0; --p) {
      in_idx += in_stride[p];
      if (++digit[p] < 4) break;
      digit[p] = 0;
      in_idx -= 4 * in_stride[p];
    }
  }
  return out;
}

std::vector<int> slice_leg_map(int rank,
                               std::span<const std::pair<int, int>> fixed) {
  std::vector<bool> is_fixed(rank, false);
  for (const auto& [leg, digit] : fixed) {
    if (leg < 0 || leg >= rank) throw std::invalid_argument("slice leg out of range");
    if (digit < 0 || digit > 3) throw std::invalid_argument("slice digit out of range");
    if (is_fixed[leg]) throw std::invalid_argument("duplicate slice leg");
    is_fixed[leg] = true;
  }
  std::vector<int> map(rank);
  int next = 0;
  for (int leg = 0; leg < rank; ++leg) map[leg] = is_fixed[leg] ? -1 : next++;
  return map;
}

Tensor slice_legs(const Tensor& t, std::span<const std::pair<int, int>> fixed) {
  const std::vector<int> map = slice_leg_map(t.rank, fixed);
  const int out_rank = t.rank - static_cast<int>(fixed.size());

  std::size_t base = 0;
  for (const auto& [leg, digit] : fixed)
    base += static_cast<std::size_t>(digit) * pow4(t.rank - 1 - leg);

  std::vector<std::size_t> kept_stride;
  for (int leg = 0; leg < t.rank; ++leg)
    if (map[leg] >= 0) kept_stride.push_back(pow4(t.rank - 1 - leg));

  Tensor out = Tensor::zeros(out_rank);
  std::vector<int> digit(out_rank, 0);
  std::size_t in_idx = base;
  const std::size_t n = out.size();
  for (std::size_t out_idx = 0; out_idx < n; ++out_idx) {
    out.data[out_idx] = t.data[in_idx];
    for (int p = out_rank - 1; p >= 0; --p) {
      in_idx += kept_stride[p];
      if (++digit[p] < 4) break;
      digit[p] = 0;
      in_idx -= 4 * kept_stride[p];
    }
  }
  return out;
}

}  // namespace qcut
