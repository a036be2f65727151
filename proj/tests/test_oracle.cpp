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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "qcut/oracle.hpp"

using qcut::cx;

namespace {

// Independent statevector evolution: start at |0...0>, apply each gate
// as the embedded full matrix, then read the probability of the
// measured bitstring. Only valid for |0><0| inputs and bit-projector
// measurements.
double sv_probability(const qcut::Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  std::vector<cx> psi(dim, cx{0});
  psi[0] = cx{1};
  for (const auto& op : c.ops) {
    std::vector<cx> u = qcut::embed_gate(op.gate.unitary, op.targets,
                                         c.n_qubits);
    std::vector<cx> next(dim, cx{0});
    for (std::size_t r = 0; r < dim; ++r) {
      cx acc{0};
      for (std::size_t k = 0; k < dim; ++k) acc += u[r * dim + k] * psi[k];
      next[r] = acc;
    }
    psi = std::move(next);
  }
  std::size_t z = 0;
  for (int q = 0; q < c.n_qubits; ++q) {
    bool one = c.measurements[static_cast<std::size_t>(q)] == qcut::kProj1;
    z = (z << 1) | (one ? 1u : 0u);
  }
  return std::norm(psi[z]);
}

}  // namespace

TEST_CASE("dm_simulate of H then |0><0| measurement is one half") {
  qcut::Circuit c = qcut::Circuit::make(1);
  c.add(qcut::standard_gate("h"), {0});
  cx p = qcut::dm_simulate(c);
  CHECK(std::abs(p - cx{0.5}) < 1e-12);
}

TEST_CASE("dm_simulate Bell state gives half probability for |11>") {
  qcut::Circuit c = qcut::Circuit::make(2);
  c.add(qcut::standard_gate("h"), {0});
  c.add(qcut::standard_gate("cnot"), {0, 1});
  c.set_measurement(0, qcut::kProj1);
  c.set_measurement(1, qcut::kProj1);
  CHECK(std::abs(qcut::dm_simulate(c) - cx{0.5}) < 1e-12);
  c.set_measurement(1, qcut::kProj0);  // anticorrelated outcome
  CHECK(std::abs(qcut::dm_simulate(c)) < 1e-12);
}

TEST_CASE("dm_simulate handles mixed inputs and general POVM elements") {
  qcut::Circuit c = qcut::Circuit::make(1);
  // maximally mixed input, measured with E = I: probability 1
  c.set_input(0, qcut::Mat2{cx{0.5}, cx{0}, cx{0}, cx{0.5}});
  c.set_measurement(0, qcut::kId2);
  c.add(qcut::standard_gate("ry", {1.234}), {0});
  CHECK(std::abs(qcut::dm_simulate(c) - cx{1}) < 1e-12);
}

TEST_CASE("dm_simulate enforces the qubit cap") {
  qcut::Circuit c = qcut::Circuit::make(5);
  CHECK_THROWS_AS(qcut::dm_simulate(c, 4), std::invalid_argument);
  CHECK_NOTHROW(qcut::dm_simulate(c, 5));
}

TEST_CASE("embed_gate X on qubit 0 of 2 is X tensor I") {
  qcut::Gate x = qcut::standard_gate("x");
  std::vector<cx> u = qcut::embed_gate(x.unitary, std::vector<int>{0}, 2);
  // |00> -> |10>, |01> -> |11>
  CHECK(std::abs(u[2 * 4 + 0] - cx{1}) < 1e-15);
  CHECK(std::abs(u[3 * 4 + 1] - cx{1}) < 1e-15);
  CHECK(std::abs(u[0 * 4 + 2] - cx{1}) < 1e-15);
  CHECK(std::abs(u[1 * 4 + 3] - cx{1}) < 1e-15);
  CHECK(std::abs(u[0 * 4 + 0]) < 1e-15);
}

TEST_CASE("embed_gate cnot with control on qubit 1") {
  qcut::Gate g = qcut::standard_gate("cnot");
  std::vector<cx> u = qcut::embed_gate(g.unitary, std::vector<int>{1, 0}, 2);
  // basis order |q0 q1>: control q1 flips q0. |01> -> |11>, |11> -> |01>
  CHECK(std::abs(u[1 * 4 + 3] - cx{1}) < 1e-15);
  CHECK(std::abs(u[3 * 4 + 1] - cx{1}) < 1e-15);
  CHECK(std::abs(u[0 * 4 + 0] - cx{1}) < 1e-15);
  CHECK(std::abs(u[2 * 4 + 2] - cx{1}) < 1e-15);
}

TEST_CASE("embed_gate swap across a gap is a unitary permutation") {
  std::vector<cx> swap{cx{1}, cx{0}, cx{0}, cx{0}, cx{0}, cx{0}, cx{1},
                       cx{0}, cx{0}, cx{1}, cx{0}, cx{0}, cx{0}, cx{0},
                       cx{0}, cx{1}};
  std::vector<cx> u = qcut::embed_gate(swap, std::vector<int>{0, 2}, 3);
  CHECK(qcut::is_unitary(u, 8));
  // |100> (index 4) -> |001> (index 1); |110> (6) -> |011> (3)
  CHECK(std::abs(u[1 * 8 + 4] - cx{1}) < 1e-15);
  CHECK(std::abs(u[3 * 8 + 6] - cx{1}) < 1e-15);
  for (std::size_t r = 0; r < 8; ++r) {
    int ones = 0;
    for (std::size_t c = 0; c < 8; ++c)
      if (std::abs(u[r * 8 + c]) > 0.5) ++ones;
    CHECK(ones == 1);
  }
}

TEST_CASE("embed_gate validates arguments") {
  qcut::Gate x = qcut::standard_gate("x");
  CHECK_THROWS_AS(qcut::embed_gate(x.unitary, std::vector<int>{3}, 2),
                  std::invalid_argument);
  qcut::Gate cz = qcut::standard_gate("cz");
  CHECK_THROWS_AS(qcut::embed_gate(cz.unitary, std::vector<int>{1, 1}, 3),
                  std::invalid_argument);
}

TEST_CASE("density-matrix and statevector evolutions agree on projective "
          "circuits") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    int depth = 1 + static_cast<int>(rng() % 12);
    qcut::Circuit c = qcut_test::random_circuit(n, depth, rng);
    for (int q = 0; q < n; ++q) c.set_input(q, qcut::kProj0);
    double dm = qcut::dm_simulate(c).real();
    double sv = sv_probability(c);
    CHECK(std::abs(dm - sv) < 1e-10);
  }
}

TEST_CASE("dm_simulate returns a real value for physical circuits") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    qcut::Circuit c = qcut_test::random_circuit(4, 10, rng);
    cx p = qcut::dm_simulate(c);
    CHECK(std::abs(p.imag()) < 1e-12);
    CHECK(p.real() > -1e-12);
    CHECK(p.real() < 1 + 1e-12);
  }
}
