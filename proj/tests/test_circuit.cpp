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
#include <random>
#include <string>

#include "helpers.hpp"
#include "qcut/circuit.hpp"

using qcut::cx;

namespace {

bool approx_eq(cx a, cx b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("standard_gate h is the textbook Hadamard") {
  qcut::Gate h = qcut::standard_gate("h");
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(approx_eq(h.unitary[0], cx{s}));
  CHECK(approx_eq(h.unitary[1], cx{s}));
  CHECK(approx_eq(h.unitary[2], cx{s}));
  CHECK(approx_eq(h.unitary[3], cx{-s}));
  CHECK(h.arity == 1);
}

TEST_CASE("standard_gate zz(0) is the 4x4 identity") {
  qcut::Gate g = qcut::standard_gate("zz", {0.0});
  CHECK(g.arity == 2);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(approx_eq(g.unitary[r * 4 + c], r == c ? cx{1} : cx{0}));
    }
  }
}

TEST_CASE("standard_gate rx(pi) equals -iX") {
  qcut::Gate g = qcut::standard_gate("rx", {M_PI});
  CHECK(approx_eq(g.unitary[0], cx{0}));
  CHECK(approx_eq(g.unitary[1], cx{0, -1}));
  CHECK(approx_eq(g.unitary[2], cx{0, -1}));
  CHECK(approx_eq(g.unitary[3], cx{0}));
}

TEST_CASE("every library gate is unitary") {
  for (const auto& spec : qcut_test::gate_library()) {
    std::vector<double> params(static_cast<std::size_t>(spec.params), 0.7);
    qcut::Gate g = qcut::standard_gate(spec.name, params);
    CHECK(qcut::is_unitary(g.unitary, spec.arity == 1 ? 2 : 4));
    CHECK(g.arity == spec.arity);
  }
}

TEST_CASE("standard_gate rejects unknown names and wrong parameter counts") {
  CHECK_THROWS_AS(qcut::standard_gate("toffoli"), std::invalid_argument);
  CHECK_THROWS_AS(qcut::standard_gate("h", {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(qcut::standard_gate("rx"), std::invalid_argument);
  CHECK_THROWS_AS(qcut::standard_gate("rx", {1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("custom_gate rejects non-unitary matrices") {
  std::vector<cx> bad{cx{1}, cx{0}, cx{0}, cx{2}};
  CHECK_THROWS_AS(qcut::custom_gate(bad), std::invalid_argument);
  std::vector<cx> ok{cx{0}, cx{1}, cx{1}, cx{0}};
  CHECK_NOTHROW(qcut::custom_gate(ok));
}

TEST_CASE("parse_circuit reads a minimal one-gate program") {
  qcut::Circuit c = qcut::parse_circuit("qubits 1\nh 0\n");
  CHECK(c.n_qubits == 1);
  REQUIRE(c.ops.size() == 1);
  CHECK(c.ops[0].gate.name == "h");
  CHECK(c.ops[0].targets == std::vector<int>{0});
  CHECK(c.inputs[0] == qcut::kProj0);
  CHECK(c.measurements[0] == qcut::kProj0);
}

TEST_CASE("parse_circuit reads gates and measurement selections") {
  qcut::Circuit c = qcut::parse_circuit("qubits 2\ncnot 0 1\nmeasure 1 1\n");
  CHECK(c.n_qubits == 2);
  REQUIRE(c.ops.size() == 1);
  CHECK(c.ops[0].gate.name == "cnot");
  CHECK(c.ops[0].targets == std::vector<int>{0, 1});
  CHECK(c.measurements[0] == qcut::kProj0);
  CHECK(c.measurements[1] == qcut::kProj1);
}

TEST_CASE("parse_circuit names the out-of-range qubit") {
  try {
    qcut::parse_circuit("qubits 2\nh 5\n");
    FAIL("expected a parse error");
  } catch (const qcut::ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
}

TEST_CASE("parse_circuit reports syntax errors with line numbers") {
  CHECK_THROWS_AS(qcut::parse_circuit("h 0\n"), qcut::ParseError);
  CHECK_THROWS_AS(qcut::parse_circuit("qubits 1\nfrobnicate 0\n"),
                  qcut::ParseError);
  CHECK_THROWS_AS(qcut::parse_circuit("qubits 1\nrx 0\n"), qcut::ParseError);
  CHECK_THROWS_AS(qcut::parse_circuit("qubits 0\n"), qcut::ParseError);
}

TEST_CASE("parse_circuit accepts comments and custom inputs") {
  qcut::Circuit c = qcut::parse_circuit(
      "# preamble\n"
      "qubits 1\n"
      "input 0 0.5+0i 0.5+0i 0.5+0i 0.5+0i  # |+><+|\n"
      "z 0\n"
      "measure 0 0.5+0i 0.5-0i 0.5+0i 0.5+0i\n");
  CHECK(approx_eq(c.inputs[0][1], cx{0.5}));
  CHECK(approx_eq(c.measurements[0][2], cx{0.5}));
}

TEST_CASE("parse_circuit rejects a non-density input") {
  CHECK_THROWS(qcut::parse_circuit("qubits 1\ninput 0 1+0i 0+0i 0+0i 1+0i\n"));
}

TEST_CASE("custom gate lines round-trip the matrix") {
  qcut::Circuit c = qcut::parse_circuit(
      "qubits 1\n"
      "gate1 0 0+0i 0-1i 0+1i 0+0i\n");  // pauli Y
  REQUIRE(c.ops.size() == 1);
  CHECK(approx_eq(c.ops[0].gate.unitary[1], cx{0, -1}));
  CHECK(approx_eq(c.ops[0].gate.unitary[2], cx{0, 1}));
}

TEST_CASE("emit then parse is the identity on random circuits") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 25; ++i) {
    int n = 1 + static_cast<int>(rng() % 5);
    int depth = static_cast<int>(rng() % 12);
    qcut::Circuit c = qcut_test::random_circuit(n, depth, rng);
    qcut::Circuit back = qcut::parse_circuit(qcut::emit_circuit(c));
    CHECK(back == c);
  }
}

TEST_CASE("validate_circuit flags bad targets") {
  qcut::Circuit c = qcut::Circuit::make(2);
  c.add(qcut::standard_gate("h"), {0});
  CHECK_NOTHROW(qcut::validate_circuit(c));
  c.ops[0].targets[0] = 7;
  CHECK_THROWS_AS(qcut::validate_circuit(c), std::invalid_argument);

  qcut::Circuit dup = qcut::Circuit::make(2);
  CHECK_THROWS_AS(dup.add(qcut::standard_gate("cnot"), {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("parse_complex grammar") {
  CHECK(approx_eq(qcut::parse_complex("1.5+2i"), cx{1.5, 2}));
  CHECK(approx_eq(qcut::parse_complex("-0.25-0.75i"), cx{-0.25, -0.75}));
  CHECK(approx_eq(qcut::parse_complex("1e-3+0i"), cx{1e-3, 0}));
  CHECK_THROWS(qcut::parse_complex("banana"));
  CHECK_THROWS(qcut::parse_complex("1+2"));
}

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, 1.0, -1.0 / 3.0, M_PI, 1e-17, 123456.789}) {
    CHECK(std::stod(qcut::format_double(v)) == v);
  }
}
