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

#ifndef QCUT_EXECUTOR_HPP_
#define QCUT_EXECUTOR_HPP_

#include <cstdint>
#include <vector>

#include "qcut/contraction.hpp"
#include "qcut/cutting.hpp"
#include "qcut/tensor_network.hpp"
#include "qcut/types.hpp"

namespace qcut {

// One shared description of all 4^m subnetwork jobs. `plan` is built
// once for the cut topology and reused for every assignment.
struct JobSpec {
  TensorNetwork tn;  // uncut network
  CutSet cut;
  ContractionPlan plan;
  int max_rank = kDefaultMaxRank;

  std::uint64_t jobs() const;  // 4^|cut|
};

// Derives the order on the cut network's graph, plans it, and bundles
// the result. `restarts`/`seed` feed ordering.best_order.
JobSpec make_job(const TensorNetwork& tn, const CutSet& cut, int restarts,
                 std::uint64_t seed, int max_rank = kDefaultMaxRank);

// Sum of subnetwork contractions for assignment ids in [lo, hi),
// ascending. The building block of every backend.
cx sum_range(const JobSpec& job, std::uint64_t lo, std::uint64_t hi);

// Whole range in one pass; the deterministic reference value.
cx run_serial(const JobSpec& job);

std::uint64_t round_count(std::uint64_t jobs, int workers);

struct WorkerResult {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  cx partial;
  double secs = 0;
};

// Fold in ascending range order after checking [0, total) is covered
// exactly once. Pure; input order does not matter.
cx aggregate(std::vector<WorkerResult> partials, std::uint64_t total);

struct WorkerTiming {
  int worker = 0;
  double secs = 0;
  std::uint64_t batches = 0;
};

struct RunReport {
  cx amplitude;
  std::uint64_t jobs = 0;
  int workers = 1;
  std::uint64_t rounds = 0;  // ceil(jobs / workers)
  std::uint64_t batches = 0;
  std::uint64_t recomputed_batches = 0;
  std::vector<WorkerTiming> timings;
  double wall_secs = 0;
};

// In-process thread pool. batch_size 0 means ceil(jobs / workers), one
// batch per worker per round; run_pool(job, 1) reproduces run_serial
// bit for bit.
RunReport run_pool(const JobSpec& job, int workers,
                   std::uint64_t batch_size = 0);

}  // namespace qcut

#endif  // QCUT_EXECUTOR_HPP_
