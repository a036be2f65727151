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

#ifndef QCUT_TENSOR_NETWORK_HPP_
#define QCUT_TENSOR_NETWORK_HPP_

#include <map>
#include <string>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/graph.hpp"
#include "qcut/tensor.hpp"

namespace qcut {

// One wire segment joining leg `leg_u` of vertex `u` to leg `leg_v` of
// vertex `v`. Edge ids are assigned in construction order and stay
// stable under cutting.
struct NetEdge {
  int id;
  int u;
  int leg_u;
  int v;
  int leg_v;

  bool operator==(const NetEdge&) const = default;
};

// Closed tensor multigraph: every leg of every vertex appears in exactly
// one edge.
struct TensorNetwork {
  std::map<int, Tensor> vertices;  // ordered for deterministic iteration
  std::vector<NetEdge> edges;

  bool operator==(const TensorNetwork&) const = default;
};

// Basis expansion coefficients of a density operator: data[a] = tr(P_a^dag rho),
// i.e. rho read off row-major.
Tensor input_tensor(const Mat2& rho);

// Superoperator of a 1-qubit gate in the density basis, legs (input, output):
// data[s*4+t] = tr(P_t^dag G P_s G^dag).
Tensor gate_tensor_1q(std::span<const cx> u);

// 2-qubit superoperator, legs (in1, in2, out1, out2):
// data[s1,s2,t1,t2] = tr((P_t1 (x) P_t2)^dag G (P_s1 (x) P_s2) G^dag).
Tensor gate_tensor_2q(std::span<const cx> u);

// Measurement vector: data[t] = tr(E P_t) (no dagger), so the amplitude
// of the full contraction is tr(E rho_out).
Tensor measure_tensor(const Mat2& e);

// One vertex per input, gate, and measurement; each qubit's wire runs
// input -> gates in program order -> measurement. Vertex ids: inputs are
// 0..n-1, gates n..n+|ops|-1, measurements n+|ops|..n+|ops|+n-1.
TensorNetwork build_network(const Circuit& c);

// Throws if some leg is unmatched or matched twice.
void check_closed(const TensorNetwork& tn);

// Multigraph over the network's vertices, one graph edge per wire; edge
// ids are the network's edge ids.
Graph network_graph(const TensorNetwork& tn);

// Debug/test dump: {"v":1,"vertices":[{"id","rank","data":[[re,im],..]}],
// "edges":[{"id","endpoints":[[u,leg],[v,leg]]}]}.
std::string dump_network_json(const TensorNetwork& tn);
TensorNetwork load_network_json(const std::string& text);

}  // namespace qcut

#endif  // QCUT_TENSOR_NETWORK_HPP_
