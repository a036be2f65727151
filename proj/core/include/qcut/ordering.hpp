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

#ifndef QCUT_ORDERING_HPP_
#define QCUT_ORDERING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qcut/graph.hpp"

namespace qcut {

// Permutation of the graph's vertex ids; earlier vertices are
// eliminated first.
using EliminationOrder = std::vector<int>;

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;           // vertex ids, sorted
  std::vector<std::pair<int, int>> tree_edges;  // bag index pairs

  int width() const;  // max bag size - 1 (-1 when there are no bags)
};

// Greedy eliminations on the parallel-edge-collapsed simple graph; ties
// broken uniformly at random with the given seed.
EliminationOrder min_degree_order(const Graph& g, std::uint64_t seed);
EliminationOrder min_fill_order(const Graph& g, std::uint64_t seed);

// Width induced by an order: simulate elimination (clique-connecting
// neighbors) and take the max degree of a vertex at its elimination
// moment. Throws if `order` is not a permutation of the vertices.
int induced_width(const Graph& g, const EliminationOrder& order);

// Standard construction: bag of v is {v} plus its fill-graph neighbors
// at elimination; each bag is parented to the bag of the earliest
// eliminated later neighbor. Disconnected graphs yield per-component
// trees whose roots are chained so the result is a single tree.
TreeDecomposition order_to_tree_decomposition(const Graph& g,
                                              const EliminationOrder& order);

struct TdReport {
  bool ok = true;
  int condition = 0;    // 1..3, first violated condition
  std::string witness;  // human-readable description
};

// Checks (1) vertex coverage, (2) every edge inside some bag, (3) bags
// containing any fixed vertex form a connected subtree.
TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

enum class OrderStrategy { kMinDegree, kMinFill };

struct BestOrderResult {
  EliminationOrder order;
  int width = 0;
  OrderStrategy strategy = OrderStrategy::kMinDegree;
  int restart = 0;
};

// Portfolio: run each strategy `restarts` times with derived seeds and
// keep the smallest width; ties broken by strategy then restart index.
BestOrderResult best_order(const Graph& g,
                           const std::vector<OrderStrategy>& strategies,
                           int restarts, std::uint64_t seed);
BestOrderResult best_order(const Graph& g, int restarts, std::uint64_t seed);

// Exact treewidth by dynamic programming over vertex subsets; intended
// as a test oracle. Throws for graphs with more than `max_vertices`
// (default 20) vertices.
int exact_treewidth(const Graph& g, int max_vertices = 20);

// PACE-style .td text: "s td <#bags> <width+1> <#vertices>", "b <id>
// <vertices...>" (ids 1-based), then tree edges as bag-id pairs.
std::string emit_td(const TreeDecomposition& td, int n_vertices);
TreeDecomposition parse_td(const std::string& text);

}  // namespace qcut

#endif  // QCUT_ORDERING_HPP_
