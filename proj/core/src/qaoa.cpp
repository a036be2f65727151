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

#include "qcut/qaoa.hpp"

#include <stdexcept>

namespace qcut {

std::string default_bitstring(int n) { return std::string(n, '0'); }

Circuit qaoa_circuit(const RegularGraph& g, double gamma, double beta,
                     int layers, const std::string& z) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (static_cast<int>(z.size()) != g.n)
    throw std::invalid_argument("bitstring length " + std::to_string(z.size()) +
                                " does not match vertex count " +
                                std::to_string(g.n));
  for (char c : z)
    if (c != '0' && c != '1')
      throw std::invalid_argument("bitstring must consist of '0'/'1'");

  Circuit c = Circuit::make(g.n);
  for (int q = 0; q < g.n; ++q) c.add(standard_gate("h"), {q});
  for (int layer = 0; layer < layers; ++layer) {
    for (const auto& [u, v] : g.edges)
      c.add(standard_gate("zz", {gamma}), {u, v});
    for (int q = 0; q < g.n; ++q)
      c.add(standard_gate("rx", {2.0 * beta}), {q});
  }
  for (int q = 0; q < g.n; ++q)
    c.set_measurement(q, z[q] == '0' ? kProj0 : kProj1);
  return c;
}

}  // namespace qcut
