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

#ifndef QCUT_CUTTING_HPP_
#define QCUT_CUTTING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcut/graph.hpp"
#include "qcut/tensor_network.hpp"

namespace qcut {

// Distinct network edge ids, kept sorted ascending.
using CutSet = std::vector<int>;

// One basis digit (0..3) per cut edge; digit i belongs to the i-th
// smallest cut edge id and is the more significant position.
using Assignment = std::vector<int>;

// 4^m; m must be in [0, 31].
std::uint64_t subnetwork_count(int m);

Assignment assignment_from_index(std::uint64_t index, int m);
std::uint64_t assignment_index(const Assignment& asg);

// Removes each cut edge and fixes the two legs it joined to the
// assignment digit, shrinking both endpoint tensors by one leg. All
// 4^m assignments yield networks with identical topology, so one
// contraction plan serves them all.
TensorNetwork apply_cut(const TensorNetwork& tn, const CutSet& cut,
                        const Assignment& asg);

// GA fitness: heuristic width of g with the cut edges removed.
int cut_width(const Graph& g, const CutSet& cut, int restarts,
              std::uint64_t seed);

struct GaParams {
  int M = 1;                // edges per individual
  int N = 11;               // population size
  int T = 4;                // generations
  std::uint64_t seed = 1;
  int fitness_restarts = 2;
  // Replaces one random initial individual; must hold M distinct edges
  // of the target graph.
  std::optional<CutSet> warm_start;
};

struct GaResult {
  CutSet cut;
  int width = 0;
  std::vector<int> history;  // best fitness per evaluation, T+1 entries
};

// Population-based search for an M-edge cut set of small cut width:
// sort by fitness, cross adjacent pairs sparing the best individual by
// swapping sorted tails and repairing duplicates, then mutate one
// random non-best individual. Deterministic per seed.
GaResult ga_search(const Graph& g, const GaParams& params);

// Cut-set file round-trip. `graph_hash` identifies the source network.
std::string dump_cut_json(const CutSet& cut, const std::string& graph_hash,
                          int width_found, const GaParams& params,
                          const std::vector<int>& history);
struct CutFile {
  CutSet edges;
  std::string source_graph_hash;
  int width_found = 0;
  GaParams ga;
  std::vector<int> history;
};
CutFile parse_cut_json(const std::string& text);

}  // namespace qcut

#endif  // QCUT_CUTTING_HPP_
