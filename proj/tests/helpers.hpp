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

#ifndef QCUT_TESTS_HELPERS_HPP_
#define QCUT_TESTS_HELPERS_HPP_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/contraction.hpp"
#include "qcut/ordering.hpp"
#include "qcut/tensor_network.hpp"
#include "qcut/types.hpp"

namespace qcut_test {

// Gate library entries with their parameter counts, for random sampling.
struct GateSpec {
  const char* name;
  int arity;
  int params;
};

inline const std::vector<GateSpec>& gate_library() {
  static const std::vector<GateSpec> lib = {
      {"i", 1, 0},  {"x", 1, 0},    {"y", 1, 0},  {"z", 1, 0},
      {"h", 1, 0},  {"s", 1, 0},    {"t", 1, 0},  {"rx", 1, 1},
      {"ry", 1, 1}, {"rz", 1, 1},   {"cz", 2, 0}, {"cnot", 2, 0},
      {"zz", 2, 1},
  };
  return lib;
}

// Random pure-state density operator |psi><psi|.
inline qcut::Mat2 random_pure_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double theta = std::acos(1 - 2 * u(rng));
  double phi = 2 * M_PI * u(rng);
  qcut::cx a = std::cos(theta / 2);
  qcut::cx b = std::polar(std::sin(theta / 2), phi);
  return {a * std::conj(a), a * std::conj(b), b * std::conj(a),
          b * std::conj(b)};
}

// Circuit with `depth` random library gates on random targets. Inputs
// are a mix of |0><0| and random pure states; measurements random bit
// projectors.
inline qcut::Circuit random_circuit(int n, int depth, std::mt19937_64& rng) {
  qcut::Circuit c = qcut::Circuit::make(n);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int q = 0; q < n; ++q) {
    if (rng() % 4 == 0) c.set_input(q, random_pure_state(rng));
    c.set_measurement(q, (rng() % 2) ? qcut::kProj1 : qcut::kProj0);
  }
  const auto& lib = gate_library();
  for (int d = 0; d < depth; ++d) {
    const GateSpec& spec = lib[rng() % lib.size()];
    if (spec.arity == 2 && n < 2) {
      --d;
      continue;
    }
    std::vector<double> params;
    for (int p = 0; p < spec.params; ++p) params.push_back(angle(rng));
    std::vector<int> targets{static_cast<int>(rng() % n)};
    if (spec.arity == 2) {
      int other;
      do {
        other = static_cast<int>(rng() % n);
      } while (other == targets[0]);
      targets.push_back(other);
    }
    c.add(qcut::standard_gate(spec.name, params), targets);
  }
  return c;
}

// Full pipeline amplitude: network, plan portfolio, contract.
inline qcut::cx contract_amplitude(const qcut::Circuit& c,
                                   std::uint64_t seed = 1, int restarts = 2) {
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::ContractionPlan plan = qcut::best_plan(tn, restarts, seed);
  return qcut::execute_plan(tn, plan);
}

// Random connected multigraph-free graph on n vertices: spanning tree
// plus `extra` random non-duplicate edges.
inline qcut::Graph random_connected_graph(int n, int extra,
                                          std::mt19937_64& rng) {
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  std::vector<qcut::Edge> edges;
  std::vector<std::vector<bool>> has(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  int next_id = 0;
  std::vector<int> perm = vertices;
  for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[rng() % static_cast<std::size_t>(i + 1)]);
  }
  for (int i = 1; i < n; ++i) {
    int u = perm[static_cast<std::size_t>(i)];
    int v = perm[rng() % static_cast<std::size_t>(i)];
    edges.push_back({next_id++, std::min(u, v), std::max(u, v)});
    has[static_cast<std::size_t>(std::min(u, v))]
       [static_cast<std::size_t>(std::max(u, v))] = true;
  }
  int budget = extra * 10 + 10;
  while (extra > 0 && budget-- > 0) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    int a = std::min(u, v), b = std::max(u, v);
    if (has[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
    has[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    edges.push_back({next_id++, a, b});
    --extra;
  }
  return qcut::Graph::from_edges(vertices, edges);
}

inline qcut::Graph path_graph(int n) {
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  std::vector<qcut::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i, i + 1});
  return qcut::Graph::from_edges(vertices, edges);
}

inline qcut::Graph cycle_graph(int n) {
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  std::vector<qcut::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, std::min(i, (i + 1) % n),
                                               std::max(i, (i + 1) % n)});
  return qcut::Graph::from_edges(vertices, edges);
}

inline qcut::Graph complete_graph(int n) {
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  std::vector<qcut::Edge> edges;
  int id = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({id++, u, v});
  return qcut::Graph::from_edges(vertices, edges);
}

inline qcut::Graph grid_graph(int rows, int cols) {
  std::vector<int> vertices;
  for (int i = 0; i < rows * cols; ++i) vertices.push_back(i);
  std::vector<qcut::Edge> edges;
  int id = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c2 = 0; c2 < cols; ++c2) {
      int v = r * cols + c2;
      if (c2 + 1 < cols) edges.push_back({id++, v, v + 1});
      if (r + 1 < rows) edges.push_back({id++, v, v + cols});
    }
  }
  return qcut::Graph::from_edges(vertices, edges);
}

}  // namespace qcut_test

#endif  // QCUT_TESTS_HELPERS_HPP_
