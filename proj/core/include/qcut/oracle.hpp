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

#ifndef QCUT_ORACLE_HPP_
#define QCUT_ORACLE_HPP_

#include <span>
#include <vector>

#include "qcut/circuit.hpp"

namespace qcut {

// Full density matrix of an n-qubit register, 2^n x 2^n row-major.
// Qubit 0 is the most significant tensor factor throughout the project.
struct DenseState {
  int n = 0;
  std::vector<cx> rho;

  static DenseState from_inputs(const Circuit& c);
  void apply_gate(const Gate& g, std::span<const int> targets);
  cx trace() const;
};

// Brute-force reference: evolve the full density matrix gate by gate and
// return tr((E_0 (x) ... (x) E_{n-1}) rho_final). Intended for tests;
// throws when n_qubits exceeds `qubit_cap`. Checks |tr(rho) - 1| <= 1e-10
// after every gate.
cx dm_simulate(const Circuit& c, int qubit_cap = 10);

// U acting on `targets` (1 or 2 distinct qubits), identity elsewhere, as
// an explicit 2^n x 2^n matrix. Non-adjacent targets are handled by
// index arithmetic.
std::vector<cx> embed_gate(std::span<const cx> u, std::span<const int> targets,
                           int n);

}  // namespace qcut

#endif  // QCUT_ORACLE_HPP_
