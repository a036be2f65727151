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

#include "qcut/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qcut {

namespace {

// Bit mask of qubit q in a row/column index (qubit 0 most significant).
inline std::size_t qubit_mask(int q, int n) {
  return std::size_t{1} << (n - 1 - q);
}

}  // namespace

DenseState DenseState::from_inputs(const Circuit& c) {
  DenseState st;
  st.n = c.n_qubits;
  const std::size_t dim = std::size_t{1} << st.n;
  st.rho.assign(dim * dim, cx{0});
  // rho = (x) inputs: entries factorize per qubit.
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t col = 0; col < dim; ++col) {
      cx v = 1;
      for (int q = 0; q < st.n && v != cx{0}; ++q) {
        const int rb = (r >> (st.n - 1 - q)) & 1;
        const int cb = (col >> (st.n - 1 - q)) & 1;
        v *= c.inputs[q][rb * 2 + cb];
      }
      st.rho[r * dim + col] = v;
    }
  }
  return st;
}

cx DenseState::trace() const {
  const std::size_t dim = std::size_t{1} << n;
  cx t = 0;
  for (std::size_t i = 0; i < dim; ++i) t += rho[i * dim + i];
  return t;
}

void DenseState::apply_gate(const Gate& g, std::span<const int> targets) {
  const std::size_t dim = std::size_t{1} << n;
  if (g.arity == 1) {
    const std::size_t m = qubit_mask(targets[0], n);
    const auto& u = g.unitary;
    // rho <- U rho
    for (std::size_t r = 0; r < dim; ++r) {
      if (r & m) continue;
      cx* row0 = &rho[r * dim];
      cx* row1 = &rho[(r | m) * dim];
      for (std::size_t col = 0; col < dim; ++col) {
        const cx x0 = row0[col], x1 = row1[col];
        row0[col] = u[0] * x0 + u[1] * x1;
        row1[col] = u[2] * x0 + u[3] * x1;
      }
    }
    // rho <- rho U^dag
    for (std::size_t r = 0; r < dim; ++r) {
      cx* row = &rho[r * dim];
      for (std::size_t col = 0; col < dim; ++col) {
        if (col & m) continue;
        const cx x0 = row[col], x1 = row[col | m];
        row[col] = x0 * std::conj(u[0]) + x1 * std::conj(u[1]);
        row[col | m] = x0 * std::conj(u[2]) + x1 * std::conj(u[3]);
      }
    }
    return;
  }

  const std::size_t m1 = qubit_mask(targets[0], n);
  const std::size_t m2 = qubit_mask(targets[1], n);
  const auto& u = g.unitary;
  const auto sub = [&](std::size_t base, int k) {
    return base | ((k & 2) ? m1 : 0) | ((k & 1) ? m2 : 0);
  };
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & (m1 | m2)) continue;
    for (std::size_t col = 0; col < dim; ++col) {
      cx x[4];
      for (int k = 0; k < 4; ++k) x[k] = rho[sub(r, k) * dim + col];
      for (int j = 0; j < 4; ++j) {
        cx acc = 0;
        for (int k = 0; k < 4; ++k) acc += u[j * 4 + k] * x[k];
        rho[sub(r, j) * dim + col] = acc;
      }
    }
  }
  for (std::size_t r = 0; r < dim; ++r) {
    cx* row = &rho[r * dim];
    for (std::size_t col = 0; col < dim; ++col) {
      if (col & (m1 | m2)) continue;
      cx x[4];
      for (int k = 0; k < 4; ++k) x[k] = row[sub(col, k)];
      for (int j = 0; j < 4; ++j) {
        cx acc = 0;
        for (int k = 0; k < 4; ++k) acc += x[k] * std::conj(u[j * 4 + k]);
        row[sub(col, j)] = acc;
      }
    }
  }
}

cx dm_simulate(const Circuit& c, int qubit_cap) {
  validate_circuit(c);
  if (c.n_qubits > qubit_cap)
    throw std::invalid_argument("dm_simulate: " + std::to_string(c.n_qubits) +
                                " qubits exceeds cap of " +
                                std::to_string(qubit_cap));

  DenseState st = DenseState::from_inputs(c);
  for (const auto& op : c.ops) {
    st.apply_gate(op.gate, op.targets);
    if (std::abs(st.trace() - cx{1}) > 1e-10)
      throw std::runtime_error("dm_simulate: trace drifted past 1e-10");
  }

  // tr((x)E_q * rho): left-multiply each measurement element in, then trace.
  const std::size_t dim = std::size_t{1} << st.n;
  for (int q = 0; q < st.n; ++q) {
    const std::size_t m = qubit_mask(q, st.n);
    const Mat2& e = c.measurements[q];
    for (std::size_t r = 0; r < dim; ++r) {
      if (r & m) continue;
      cx* row0 = &st.rho[r * dim];
      cx* row1 = &st.rho[(r | m) * dim];
      for (std::size_t col = 0; col < dim; ++col) {
        const cx x0 = row0[col], x1 = row1[col];
        row0[col] = e[0] * x0 + e[1] * x1;
        row1[col] = e[2] * x0 + e[3] * x1;
      }
    }
  }
  return st.trace();
}

std::vector<cx> embed_gate(std::span<const cx> u, std::span<const int> targets,
                           int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("embed_gate: bad qubit count");
  const int arity = static_cast<int>(targets.size());
  if (arity != 1 && arity != 2)
    throw std::invalid_argument("embed_gate: 1 or 2 targets required");
  if (arity == 2 && targets[0] == targets[1])
    throw std::invalid_argument("embed_gate: targets must be distinct");
  for (int t : targets)
    if (t < 0 || t >= n) throw std::invalid_argument("embed_gate: target out of range");
  const int gdim = 1 << arity;
  if (static_cast<int>(u.size()) != gdim * gdim)
    throw std::invalid_argument("embed_gate: matrix size does not match arity");

  const std::size_t dim = std::size_t{1} << n;
  std::vector<cx> out(dim * dim, cx{0});
  std::size_t tmask = 0;
  for (int t : targets) tmask |= qubit_mask(t, n);
  const auto gate_index = [&](std::size_t idx) {
    int g = 0;
    for (int k = 0; k < arity; ++k)
      g = (g << 1) | static_cast<int>((idx >> (n - 1 - targets[k])) & 1);
    return g;
  };
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t col = 0; col < dim; ++col)
      if ((r & ~tmask) == (col & ~tmask))
        out[r * dim + col] = u[gate_index(r) * gdim + gate_index(col)];
  return out;
}

}  // namespace qcut
