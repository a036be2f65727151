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

#ifndef QCUT_CONTRACTION_HPP_
#define QCUT_CONTRACTION_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcut/ordering.hpp"
#include "qcut/tensor.hpp"
#include "qcut/tensor_network.hpp"
#include "qcut/types.hpp"

namespace qcut {

// A rank-13 tensor is 1 GiB of complex doubles; anything larger needs
// an explicit opt-in.
inline constexpr int kDefaultMaxRank = 13;

class RankGuardError : public std::runtime_error {
 public:
  RankGuardError(int rank, int max_rank);

  int rank() const { return rank_; }
  int max_rank() const { return max_rank_; }

 private:
  int rank_;
  int max_rank_;
};

// Contracts the legs `legs_e[i]` of `e` against `legs_f[i]` of `f`.
// Result legs: e's remaining legs in order, then f's. Throws
// std::invalid_argument when the leg lists are empty, mismatched, out
// of range or repeated, and RankGuardError when the result would
// exceed max_rank.
Tensor contract_pair(const Tensor& e, const std::vector<int>& legs_e,
                     const Tensor& f, const std::vector<int>& legs_f,
                     int max_rank = kDefaultMaxRank);

struct PlanStep {
  int a = -1;                       // surviving vertex id (out == a)
  int b = -1;                       // absorbed vertex id
  int out = -1;
  std::vector<int> edges;           // network edge ids, ascending
  std::vector<int> legs_a, legs_b;  // aligned leg positions for `edges`
  int rank_a = 0;
  int rank_b = 0;
  int result_rank = 0;              // rank_a + rank_b - 2*edges
  int work_rank = 0;                // rank_a + rank_b - edges
};

struct ContractionPlan {
  std::vector<PlanStep> steps;
  std::vector<int> scalars;  // vertices left after the steps, all rank 0
  int peak_rank = 0;         // max result_rank over steps
  double cost_estimate = 0;  // sum of 4^work_rank over steps
};

// Builds the pairwise schedule induced by an elimination order.
// Processing a vertex contracts its tensor with every merged tensor
// parked at it by earlier steps, absorbing whichever keeps the running
// rank smallest and contracting parallel edges in one step; the result
// is parked at the vertex's earliest-eliminated fill neighbor, so
// cluster boundaries stay inside elimination cliques and peak rank
// tracks the order's induced width. Planning is rank bookkeeping only;
// no tensor data is touched and no rank limit applies here.
ContractionPlan plan_from_order(const TensorNetwork& tn,
                                const EliminationOrder& ord);

// Plans with best_order's winner and with the network's creation order
// (ascending vertex ids, a topological sweep for circuit networks) and
// keeps the schedule with the lower peak rank, breaking ties toward the
// cheaper cost estimate. Width heuristics favour narrow separators but
// can stack parallel edges into one cluster boundary; the creation
// order caps the boundary at one edge per qubit wire, so the two cover
// each other's bad cases.
ContractionPlan best_plan(const TensorNetwork& tn, int restarts,
                          std::uint64_t seed);

// Throws RankGuardError naming the first step whose result exceeds
// max_rank.
void check_rank_guard(const ContractionPlan& plan, int max_rank);

// Runs the plan and returns the scalar value of the closed network.
// Leftover rank-0 tensors (one per connected component) are multiplied
// into the result.
cx execute_plan(const TensorNetwork& tn, const ContractionPlan& plan,
                int max_rank = kDefaultMaxRank);

struct CostReport {
  int peak_rank = 0;
  double cost_estimate = 0;
  std::uint64_t data_bytes_peak = 0;  // 16 * 4^peak_rank
  std::uint64_t bytes_peak = 0;       // data plus per-step workspace copies
};

CostReport estimate_cost(const ContractionPlan& plan);

std::string dump_plan_json(const ContractionPlan& plan);

}  // namespace qcut

#endif  // QCUT_CONTRACTION_HPP_
