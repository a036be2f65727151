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

#include "qcut/tensor_network.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcut {

namespace {

// The density-operator basis P = {|0><0|, |0><1|, |1><0|, |1><1|}: P_a
// has a single unit entry at (a/2, a%2), so tr(P_a^dag M) = M[a/2][a%2]
// and tr(M P_a) = M[a%2][a/2].
Mat2 basis_op(int a) {
  Mat2 m{};
  m[a] = 1;
  return m;
}

}  // namespace

Tensor input_tensor(const Mat2& rho) {
  if (!is_density_operator(rho))
    throw std::invalid_argument("input is not a density operator");
  Tensor t = Tensor::zeros(1);
  for (int a = 0; a < 4; ++a) t.data[a] = rho[a];
  return t;
}

Tensor gate_tensor_1q(std::span<const cx> u) {
  if (u.size() != 4) throw std::invalid_argument("expected a 2x2 gate matrix");
  Mat2 g;
  std::copy(u.begin(), u.end(), g.begin());
  const Mat2 gd = mat2_adjoint(g);
  Tensor t = Tensor::zeros(2);
  for (int s = 0; s < 4; ++s) {
    const Mat2 evolved = mat2_mul(mat2_mul(g, basis_op(s)), gd);
    // tr(P_t^dag evolved) = evolved[t/2][t%2]
    for (int tau = 0; tau < 4; ++tau) t.data[s * 4 + tau] = evolved[tau];
  }
  return t;
}

Tensor gate_tensor_2q(std::span<const cx> u) {
  if (u.size() != 16) throw std::invalid_argument("expected a 4x4 gate matrix");
  Mat4 g;
  std::copy(u.begin(), u.end(), g.begin());
  const Mat4 gd = mat4_adjoint(g);
  Tensor t = Tensor::zeros(4);
  for (int s1 = 0; s1 < 4; ++s1) {
    for (int s2 = 0; s2 < 4; ++s2) {
      const Mat4 evolved =
          mat4_mul(mat4_mul(g, kron2(basis_op(s1), basis_op(s2))), gd);
      for (int t1 = 0; t1 < 4; ++t1) {
        for (int t2 = 0; t2 < 4; ++t2) {
          // tr((P_t1 (x) P_t2)^dag M) = M[row][col] with the kron index
          // row = 2*(t1/2)+(t2/2), col = 2*(t1%2)+(t2%2).
          const int row = 2 * (t1 / 2) + (t2 / 2);
          const int col = 2 * (t1 % 2) + (t2 % 2);
          t.data[((s1 * 4 + s2) * 4 + t1) * 4 + t2] = evolved[row * 4 + col];
        }
      }
    }
  }
  return t;
}

Tensor measure_tensor(const Mat2& e) {
  Tensor t = Tensor::zeros(1);
  // tr(E P_t): transposed read of E.
  for (int tau = 0; tau < 4; ++tau) t.data[tau] = e[(tau % 2) * 2 + (tau / 2)];
  return t;
}

TensorNetwork build_network(const Circuit& c) {
  validate_circuit(c);
  TensorNetwork tn;

  const int n = c.n_qubits;
  const int n_ops = static_cast<int>(c.ops.size());
  for (int q = 0; q < n; ++q) tn.vertices[q] = input_tensor(c.inputs[q]);
  for (int i = 0; i < n_ops; ++i) {
    const auto& op = c.ops[i];
    tn.vertices[n + i] = op.gate.arity == 1 ? gate_tensor_1q(op.gate.unitary)
                                            : gate_tensor_2q(op.gate.unitary);
  }
  for (int q = 0; q < n; ++q)
    tn.vertices[n + n_ops + q] = measure_tensor(c.measurements[q]);

  // Per-qubit dangling output leg, updated as the wire advances.
  std::vector<std::pair<int, int>> tail(n);  // (vertex, leg)
  for (int q = 0; q < n; ++q) tail[q] = {q, 0};

  int edge_id = 0;
  for (int i = 0; i < n_ops; ++i) {
    const auto& op = c.ops[i];
    const int vid = n + i;
    // Gate legs: inputs first (one per target, in target order), then outputs.
    for (int k = 0; k < op.gate.arity; ++k) {
      const int q = op.targets[k];
      const auto [pv, pl] = tail[q];
      tn.edges.push_back(NetEdge{edge_id++, pv, pl, vid, k});
      tail[q] = {vid, op.gate.arity + k};
    }
  }
  for (int q = 0; q < n; ++q) {
    const auto [pv, pl] = tail[q];
    tn.edges.push_back(NetEdge{edge_id++, pv, pl, n + n_ops + q, 0});
  }
  check_closed(tn);
  return tn;
}

void check_closed(const TensorNetwork& tn) {
  std::map<std::pair<int, int>, int> uses;  // (vertex, leg) -> count
  for (const NetEdge& e : tn.edges) {
    ++uses[{e.u, e.leg_u}];
    ++uses[{e.v, e.leg_v}];
  }
  for (const auto& [vid, t] : tn.vertices) {
    for (int leg = 0; leg < t.rank; ++leg) {
      const auto it = uses.find({vid, leg});
      const int count = it == uses.end() ? 0 : it->second;
      if (count != 1)
        throw std::invalid_argument(
            "network not closed: vertex " + std::to_string(vid) + " leg " +
            std::to_string(leg) + " used " + std::to_string(count) + " times");
    }
  }
  for (const auto& [key, count] : uses) {
    const auto it = tn.vertices.find(key.first);
    if (it == tn.vertices.end())
      throw std::invalid_argument("edge references unknown vertex " +
                                  std::to_string(key.first));
    if (key.second < 0 || key.second >= it->second.rank)
      throw std::invalid_argument("edge references leg out of range on vertex " +
                                  std::to_string(key.first));
  }
}

Graph network_graph(const TensorNetwork& tn) {
  Graph g;
  g.vertices.reserve(tn.vertices.size());
  for (const auto& [vid, t] : tn.vertices) g.vertices.push_back(vid);
  for (const NetEdge& e : tn.edges) g.edges.push_back(Edge{e.id, e.u, e.v});
  return g;
}

std::string dump_network_json(const TensorNetwork& tn) {
  nlohmann::json j;
  j["v"] = 1;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& [vid, t] : tn.vertices) {
    nlohmann::json data = nlohmann::json::array();
    for (const cx& v : t.data) data.push_back({v.real(), v.imag()});
    verts.push_back({{"id", vid}, {"rank", t.rank}, {"data", std::move(data)}});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const NetEdge& e : tn.edges)
    edges.push_back({{"id", e.id},
                     {"endpoints", {{e.u, e.leg_u}, {e.v, e.leg_v}}}});
  return j.dump();
}

TensorNetwork load_network_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("v", 0) != 1)
    throw std::invalid_argument("unsupported network dump version");
  TensorNetwork tn;
  for (const auto& jv : j.at("vertices")) {
    Tensor t = Tensor::zeros(jv.at("rank").get<int>());
    const auto& data = jv.at("data");
    if (data.size() != t.size())
      throw std::invalid_argument("tensor data length mismatch");
    for (std::size_t i = 0; i < t.size(); ++i)
      t.data[i] = cx{data[i][0].get<double>(), data[i][1].get<double>()};
    tn.vertices[jv.at("id").get<int>()] = std::move(t);
  }
  for (const auto& je : j.at("edges")) {
    const auto& ep = je.at("endpoints");
    tn.edges.push_back(NetEdge{je.at("id").get<int>(), ep[0][0].get<int>(),
                               ep[0][1].get<int>(), ep[1][0].get<int>(),
                               ep[1][1].get<int>()});
  }
  check_closed(tn);
  return tn;
}

}  // namespace qcut
