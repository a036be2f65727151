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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qcut/executor.hpp"
#include "qcut/oracle.hpp"
#include "qcut/qaoa.hpp"

using qcut::cx;

namespace {

qcut::JobSpec qaoa_job(int n, int m, std::uint64_t seed) {
  qcut::RegularGraph rg = qcut::random_regular_graph(n, 3, seed);
  qcut::Circuit c =
      qcut::qaoa_circuit(rg, 0.6, 0.4, 1, qcut::default_bitstring(n));
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::Graph g = qcut::network_graph(tn);
  qcut::GaParams params;
  params.M = m;
  params.seed = seed;
  params.fitness_restarts = 1;
  qcut::GaResult r = qcut::ga_search(g, params);
  return qcut::make_job(tn, r.cut, 2, seed);
}

}  // namespace

TEST_CASE("make_job exposes the job count of its cut") {
  qcut::JobSpec j0 = qaoa_job(6, 0, 1);
  CHECK(j0.jobs() == 1);
  qcut::JobSpec j2 = qaoa_job(6, 2, 1);
  CHECK(j2.jobs() == 16);
  CHECK(j2.cut.size() == 2);
}

TEST_CASE("run_serial with no cut equals plain contraction") {
  qcut::RegularGraph rg = qcut::random_regular_graph(6, 3, 3);
  qcut::Circuit c = qcut::qaoa_circuit(rg, 0.6, 0.4, 1, "000000");
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::JobSpec job = qcut::make_job(tn, {}, 2, 3);
  cx direct = qcut::execute_plan(tn, job.plan);
  cx serial = qcut::run_serial(job);
  CHECK(serial == direct);  // bitwise: same code path, single assignment
}

TEST_CASE("run_serial sums the cut terms of a cnot circuit to one") {
  qcut::Circuit c = qcut::Circuit::make(2);
  c.add(qcut::standard_gate("cnot"), {0, 1});
  qcut::TensorNetwork tn = qcut::build_network(c);
  // cut the wire from the gate to qubit 0's measurement
  int victim = -1;
  for (const auto& e : tn.edges) {
    if (e.u == 2 && e.v == 3) victim = e.id;
  }
  REQUIRE(victim >= 0);
  qcut::JobSpec job = qcut::make_job(tn, {victim}, 2, 1);
  CHECK(job.jobs() == 4);
  CHECK(std::abs(qcut::run_serial(job) - cx{1}) < 1e-10);
}

TEST_CASE("run_serial matches the uncut amplitude on QAOA cuts") {
  qcut::RegularGraph rg = qcut::random_regular_graph(4, 3, 1);
  qcut::Circuit c = qcut::qaoa_circuit(rg, 0.6, 0.4, 1, "0000");
  qcut::TensorNetwork tn = qcut::build_network(c);
  cx uncut = qcut::dm_simulate(c);
  qcut::JobSpec job = qaoa_job(4, 2, 1);
  cx sum = qcut::run_serial(job);
  CHECK(std::abs(sum - uncut) < 1e-9 * std::max(1.0, std::abs(uncut)));
}

TEST_CASE("sum_range validates its bounds") {
  qcut::JobSpec job = qaoa_job(6, 1, 2);
  CHECK_THROWS_AS(qcut::sum_range(job, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(qcut::sum_range(job, 0, 5), std::invalid_argument);
  cx whole = qcut::sum_range(job, 0, 4);
  cx split = qcut::sum_range(job, 0, 2) + qcut::sum_range(job, 2, 4);
  CHECK(std::abs(whole - split) < 1e-12);
}

TEST_CASE("run_serial surfaces rank guard violations") {
  qcut::JobSpec job = qaoa_job(8, 0, 1);
  REQUIRE(job.plan.peak_rank > 1);
  job.max_rank = 1;
  CHECK_THROWS_AS(qcut::run_serial(job), qcut::RankGuardError);
}

TEST_CASE("round_count ceiling arithmetic") {
  CHECK(qcut::round_count(16, 5) == 4);
  CHECK(qcut::round_count(16, 16) == 1);
  CHECK(qcut::round_count(16, 17) == 1);
  CHECK(qcut::round_count(1, 3) == 1);
  CHECK(qcut::round_count(65536, 4096) == 16);
  CHECK_THROWS_AS(qcut::round_count(4, 0), std::invalid_argument);
}

TEST_CASE("aggregate of a single covering partial is itself") {
  std::vector<qcut::WorkerResult> one{{0, 8, cx{1.5, -2.5}, 0.1}};
  CHECK(qcut::aggregate(one, 8) == cx{1.5, -2.5});
}

TEST_CASE("aggregate is independent of input order") {
  std::vector<qcut::WorkerResult> parts{
      {4, 8, cx{2}, 0}, {0, 4, cx{1}, 0}, {12, 16, cx{4}, 0}, {8, 12, cx{3}, 0}};
  cx sorted_sum = qcut::aggregate(parts, 16);
  std::reverse(parts.begin(), parts.end());
  CHECK(qcut::aggregate(parts, 16) == sorted_sum);
  CHECK(sorted_sum == cx{10});
}

TEST_CASE("aggregate names gaps and overlaps") {
  std::vector<qcut::WorkerResult> gap{{0, 4, cx{1}, 0}, {8, 16, cx{2}, 0}};
  try {
    qcut::aggregate(gap, 16);
    FAIL("expected a gap error");
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    CHECK(what.find("gap") != std::string::npos);
    CHECK(what.find("4") != std::string::npos);
  }
  std::vector<qcut::WorkerResult> overlap{{0, 6, cx{1}, 0}, {4, 16, cx{2}, 0}};
  CHECK_THROWS_WITH_AS(qcut::aggregate(overlap, 16),
                       doctest::Contains("overlap"), std::runtime_error);
  std::vector<qcut::WorkerResult> missing_tail{{0, 8, cx{1}, 0}};
  CHECK_THROWS_WITH_AS(qcut::aggregate(missing_tail, 16),
                       doctest::Contains("gap"), std::runtime_error);
}

TEST_CASE("run_pool with one worker is bitwise identical to serial") {
  qcut::JobSpec job = qaoa_job(8, 2, 4);
  cx serial = qcut::run_serial(job);
  qcut::RunReport rep = qcut::run_pool(job, 1);
  CHECK(rep.amplitude.real() == serial.real());
  CHECK(rep.amplitude.imag() == serial.imag());
  CHECK(rep.jobs == 16);
  CHECK(rep.workers == 1);
  CHECK(rep.rounds == 16);
  CHECK(rep.batches == 1);
}

TEST_CASE("run_pool with several workers agrees with serial") {
  qcut::JobSpec job = qaoa_job(8, 2, 5);
  cx serial = qcut::run_serial(job);
  for (int w : {2, 3, 8}) {
    qcut::RunReport rep = qcut::run_pool(job, w);
    CHECK(std::abs(rep.amplitude - serial) <
          1e-9 * std::max(1.0, std::abs(serial)));
    CHECK(rep.workers == w);
    CHECK(rep.rounds == qcut::round_count(16, w));
  }
}

TEST_CASE("run_pool results are reproducible for a fixed configuration") {
  qcut::JobSpec job = qaoa_job(6, 2, 6);
  qcut::RunReport a = qcut::run_pool(job, 3, 2);
  qcut::RunReport b = qcut::run_pool(job, 3, 2);
  CHECK(a.amplitude.real() == b.amplitude.real());
  CHECK(a.amplitude.imag() == b.amplitude.imag());
  CHECK(a.batches == 8);
}

TEST_CASE("run_pool respects explicit batch sizes") {
  qcut::JobSpec job = qaoa_job(6, 1, 7);
  qcut::RunReport rep = qcut::run_pool(job, 2, 1);
  CHECK(rep.batches == 4);
  std::uint64_t done = 0;
  for (const auto& t : rep.timings) done += t.batches;
  CHECK(done == 4);
}
