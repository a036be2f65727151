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

#ifndef QCUT_QAOA_HPP_
#define QCUT_QAOA_HPP_

#include <string>

#include "qcut/circuit.hpp"
#include "qcut/graph.hpp"

namespace qcut {

// QAOA benchmark circuit for a regular graph: one qubit per vertex,
// |0><0| inputs, h on every qubit, then per layer zz(gamma) on every
// graph edge followed by rx(2*beta) on every qubit. Measurement element
// on qubit i is |z_i><z_i|; `z` is a bitstring of length n ('0'/'1').
// Gate count is n + layers*(|E| + n).
Circuit qaoa_circuit(const RegularGraph& g, double gamma, double beta,
                     int layers, const std::string& z);

// All-zeros measurement bitstring.
std::string default_bitstring(int n);

}  // namespace qcut

#endif  // QCUT_QAOA_HPP_
