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

#include "qcut/executor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace qcut {

std::uint64_t JobSpec::jobs() const {
  return subnetwork_count(static_cast<int>(cut.size()));
}

JobSpec make_job(const TensorNetwork& tn, const CutSet& cut, int restarts,
                 std::uint64_t seed, int max_rank) {
  JobSpec job;
  job.tn = tn;
  job.cut = cut;
  job.max_rank = max_rank;
  TensorNetwork sub =
      apply_cut(tn, cut, Assignment(cut.size(), 0));
  job.plan = best_plan(sub, restarts, seed);
  return job;
}

cx sum_range(const JobSpec& job, std::uint64_t lo, std::uint64_t hi) {
  int m = static_cast<int>(job.cut.size());
  std::uint64_t total = job.jobs();
  if (lo > hi || hi > total) {
    throw std::invalid_argument("range [" + std::to_string(lo) + "," +
                                std::to_string(hi) + ") outside [0," +
                                std::to_string(total) + ")");
  }
  check_rank_guard(job.plan, job.max_rank);
  cx acc{0.0, 0.0};
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    try {
      TensorNetwork sub = apply_cut(job.tn, job.cut,
                                    assignment_from_index(idx, m));
      acc += execute_plan(sub, job.plan, job.max_rank);
    } catch (const RankGuardError&) {
      throw;
    } catch (const std::exception& e) {
      throw std::runtime_error("assignment " + std::to_string(idx) + ": " +
                               e.what());
    }
  }
  return acc;
}

cx run_serial(const JobSpec& job) { return sum_range(job, 0, job.jobs()); }

std::uint64_t round_count(std::uint64_t jobs, int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  return (jobs + static_cast<std::uint64_t>(workers) - 1) /
         static_cast<std::uint64_t>(workers);
}

cx aggregate(std::vector<WorkerResult> partials, std::uint64_t total) {
  std::sort(partials.begin(), partials.end(),
            [](const WorkerResult& a, const WorkerResult& b) {
              return a.lo < b.lo;
            });
  std::uint64_t at = 0;
  for (const WorkerResult& r : partials) {
    if (r.lo < at) {
      throw std::runtime_error("aggregate overlap: range [" +
                               std::to_string(r.lo) + "," +
                               std::to_string(r.hi) + ") rewinds past " +
                               std::to_string(at));
    }
    if (r.lo > at) {
      throw std::runtime_error("aggregate gap: [" + std::to_string(at) + "," +
                               std::to_string(r.lo) + ") has no result");
    }
    if (r.hi < r.lo || r.hi > total) {
      throw std::runtime_error("aggregate range [" + std::to_string(r.lo) +
                               "," + std::to_string(r.hi) + ") out of bounds");
    }
    at = r.hi;
  }
  if (at != total) {
    throw std::runtime_error("aggregate gap: [" + std::to_string(at) + "," +
                             std::to_string(total) + ") has no result");
  }
  if (partials.empty()) return cx{0.0, 0.0};
  cx acc = partials[0].partial;
  for (std::size_t i = 1; i < partials.size(); ++i) {
    acc += partials[i].partial;
  }
  return acc;
}

RunReport run_pool(const JobSpec& job, int workers, std::uint64_t batch_size) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::uint64_t total = job.jobs();
  if (batch_size == 0) batch_size = round_count(total, workers);

  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t n_batches = (total + batch_size - 1) / batch_size;

  std::vector<WorkerResult> results;
  results.reserve(n_batches);
  std::mutex results_mu;
  std::atomic<std::uint64_t> next_batch{0};
  std::vector<WorkerTiming> timings(static_cast<std::size_t>(workers));
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto body = [&](int wid) {
    auto& timing = timings[static_cast<std::size_t>(wid)];
    timing.worker = wid;
    for (;;) {
      std::uint64_t b = next_batch.fetch_add(1);
      if (b >= n_batches) return;
      std::uint64_t lo = b * batch_size;
      std::uint64_t hi = std::min(total, lo + batch_size);
      auto s0 = std::chrono::steady_clock::now();
      try {
        cx part = sum_range(job, lo, hi);
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - s0)
                          .count();
        timing.secs += secs;
        ++timing.batches;
        std::lock_guard<std::mutex> lk(results_mu);
        results.push_back(WorkerResult{lo, hi, part, secs});
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  RunReport report;
  report.amplitude = aggregate(results, total);
  report.jobs = total;
  report.workers = workers;
  report.rounds = round_count(total, workers);
  report.batches = n_batches;
  report.timings = std::move(timings);
  report.wall_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace qcut
