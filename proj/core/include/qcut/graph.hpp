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

#ifndef QCUT_GRAPH_HPP_
#define QCUT_GRAPH_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qcut {

struct Edge {
  int id;
  int u;
  int v;

  bool operator==(const Edge&) const = default;
};

// Undirected multigraph with stable vertex and edge ids. Parallel edges
// are permitted; ids survive subgraph operations.
struct Graph {
  std::vector<int> vertices;  // sorted, unique
  std::vector<Edge> edges;

  static Graph from_edges(std::vector<int> vertices, std::vector<Edge> edges);

  // Copy with the given edge ids removed (vertices kept). Unknown ids throw.
  Graph without_edges(const std::vector<int>& edge_ids) const;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Dense simple view of a Graph: vertices renumbered 0..n-1, parallel
// edges collapsed, adjacency kept as bitset rows. Used by the ordering
// heuristics; `dense_to_id` maps back to original vertex ids.
class SimpleGraph {
 public:
  static SimpleGraph collapse(const Graph& g);

  int n() const { return n_; }
  int words() const { return words_; }
  bool has_edge(int a, int b) const {
    return (adj_[a][b >> 6] >> (b & 63)) & 1u;
  }
  void add_edge(int a, int b);
  const std::vector<std::uint64_t>& row(int a) const { return adj_[a]; }
  std::vector<std::uint64_t>& row(int a) { return adj_[a]; }
  int degree(int a) const;
  bool connected() const;

  std::vector<int> dense_to_id;
  std::unordered_map<int, int> id_to_dense;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
};

// Simple connected regular graph on vertices 0..n-1.
struct RegularGraph {
  int n = 0;
  int degree = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, construction order

  bool operator==(const RegularGraph&) const = default;
};

// Pairing-model sampling with whole-sample rejection of loops, parallel
// edges, and disconnected results. Deterministic per seed. Throws
// std::invalid_argument when n*degree is odd or n <= degree, and
// std::runtime_error (reporting the attempt count) if the rejection
// budget runs out.
RegularGraph random_regular_graph(int n, int degree, std::uint64_t seed,
                                  int max_attempts = 20000);

Graph to_graph(const RegularGraph& g);

// Text format: first line "N M", then M lines "u v".
std::string emit_graph(const RegularGraph& g);
RegularGraph parse_graph(const std::string& text);

// FNV-1a over bytes; used for content-addressing payloads and graphs.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::string fnv1a64_hex(const std::string& bytes);

// Canonical hash of a multigraph (vertex ids, edge ids and endpoints).
std::string graph_hash(const Graph& g);

}  // namespace qcut

#endif  // QCUT_GRAPH_HPP_
