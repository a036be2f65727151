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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qcut/contraction.hpp"
#include "qcut/cutting.hpp"
#include "qcut/executor.hpp"
#include "qcut/graph.hpp"
#include "qcut/ordering.hpp"
#include "qcut/qaoa.hpp"
#include "qcut/tensor_network.hpp"

namespace {

qcut::Tensor random_tensor(int rank, std::uint64_t seed) {
  qcut::Tensor t;
  t.rank = rank;
  t.data.resize(qcut::pow4(rank));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto& v : t.data) v = qcut::cx(u(rng), u(rng));
  return t;
}

// Pairwise contraction with `shared` common legs between two tensors of
// the given rank.
void BM_ContractPair(benchmark::State& state) {
  int rank = static_cast<int>(state.range(0));
  int shared = static_cast<int>(state.range(1));
  qcut::Tensor a = random_tensor(rank, 1);
  qcut::Tensor b = random_tensor(rank, 2);
  std::vector<int> legs_a, legs_b;
  for (int i = 0; i < shared; ++i) {
    legs_a.push_back(rank - shared + i);
    legs_b.push_back(i);
  }
  for (auto _ : state) {
    qcut::Tensor r = qcut::contract_pair(a, legs_a, b, legs_b);
    benchmark::DoNotOptimize(r.data.data());
  }
  double flops_per_iter =
      8.0 * static_cast<double>(qcut::pow4(2 * rank - shared));
  state.counters["flops"] = benchmark::Counter(
      flops_per_iter * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ContractPair)
    ->Args({4, 2})
    ->Args({6, 3})
    ->Args({8, 4})
    ->Args({9, 4});

qcut::TensorNetwork qaoa_network(int n, std::uint64_t seed) {
  qcut::RegularGraph g = qcut::random_regular_graph(n, 3, seed);
  qcut::Circuit c =
      qcut::qaoa_circuit(g, 0.6, 0.4, 1, qcut::default_bitstring(n));
  return qcut::build_network(c);
}

void BM_OrderMinDegree(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  qcut::Graph g = qcut::network_graph(qaoa_network(n, 7));
  for (auto _ : state) {
    qcut::EliminationOrder ord = qcut::min_degree_order(g, 1);
    benchmark::DoNotOptimize(ord.data());
  }
}
BENCHMARK(BM_OrderMinDegree)->Arg(12)->Arg(30)->Arg(50);

void BM_OrderMinFill(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  qcut::Graph g = qcut::network_graph(qaoa_network(n, 7));
  for (auto _ : state) {
    qcut::EliminationOrder ord = qcut::min_fill_order(g, 1);
    benchmark::DoNotOptimize(ord.data());
  }
}
BENCHMARK(BM_OrderMinFill)->Arg(12)->Arg(30)->Arg(50);

void BM_ExecutePlan(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  qcut::TensorNetwork tn = qaoa_network(n, 7);
  qcut::ContractionPlan plan = qcut::best_plan(tn, 4, 1);
  for (auto _ : state) {
    qcut::cx amp = qcut::execute_plan(tn, plan);
    benchmark::DoNotOptimize(amp);
  }
  state.counters["peak_rank"] = plan.peak_rank;
}
BENCHMARK(BM_ExecutePlan)->Arg(8)->Arg(12)->Arg(16);

void BM_SubnetworkSum(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  qcut::TensorNetwork tn = qaoa_network(12, 7);
  qcut::Graph g = qcut::network_graph(tn);
  qcut::GaParams params;
  params.M = m;
  params.seed = 3;
  qcut::GaResult r = qcut::ga_search(g, params);
  qcut::JobSpec job = qcut::make_job(tn, r.cut, 4, 1);
  for (auto _ : state) {
    qcut::cx amp = qcut::run_serial(job);
    benchmark::DoNotOptimize(amp);
  }
  state.counters["jobs"] = static_cast<double>(job.jobs());
}
BENCHMARK(BM_SubnetworkSum)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
