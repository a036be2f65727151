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

#ifndef QCUT_CIRCUIT_HPP_
#define QCUT_CIRCUIT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcut/types.hpp"

namespace qcut {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

// A unitary gate. `unitary` is row-major 2x2 (arity 1) or 4x4 (arity 2);
// for two-qubit gates the basis is |b1 b2> with b1 the first target's bit.
struct Gate {
  std::string name;            // lower-case identifier
  int arity = 1;               // 1 or 2
  std::vector<cx> unitary;     // 4 or 16 entries
  std::vector<double> params;  // angles, possibly empty

  bool operator==(const Gate&) const = default;
};

// Library gates: i, x, y, z, h, s, t, rx, ry, rz, cz, cnot, zz.
// Angle conventions: rx(t)=exp(-i t X/2), ry(t)=exp(-i t Y/2),
// rz(t)=exp(-i t Z/2), zz(g)=exp(-i g Z(x)Z). cnot's control is the
// first target. Throws std::invalid_argument for unknown names or a
// wrong parameter count.
Gate standard_gate(std::string_view name, const std::vector<double>& params = {});

// A custom gate from an explicit matrix; throws if not unitary within 1e-12.
Gate custom_gate(std::vector<cx> unitary, std::vector<double> params = {});

struct CircuitOp {
  Gate gate;
  std::vector<int> targets;

  bool operator==(const CircuitOp&) const = default;
};

// Circuit IR over density operators: per-qubit 2x2 inputs (default
// |0><0|), an ordered gate list, and per-qubit 2x2 POVM measurement
// elements (default |0><0|).
struct Circuit {
  int n_qubits = 0;
  std::vector<Mat2> inputs;
  std::vector<CircuitOp> ops;
  std::vector<Mat2> measurements;

  static Circuit make(int n_qubits);

  // Appends a gate after validating targets; throws std::invalid_argument.
  Circuit& add(Gate gate, std::vector<int> targets);
  Circuit& set_input(int qubit, const Mat2& rho);
  Circuit& set_measurement(int qubit, const Mat2& povm);

  bool operator==(const Circuit&) const = default;
};

// Full structural validation of the invariants above; throws
// std::invalid_argument naming the first violation.
void validate_circuit(const Circuit& c);

// Line-oriented text format, '#' comments:
//   qubits N
//   input Q a+bi a+bi a+bi a+bi
//   h 0 | rx 0 1.5708 | cnot 0 1 | zz 0 1 0.6 | ...
//   gate1 Q m00 m01 m10 m11
//   gate2 Q1 Q2 <16 entries>
//   measure Q 0|1
//   measure Q e00 e01 e10 e11
Circuit parse_circuit(const std::string& text);
std::string emit_circuit(const Circuit& c);

// Complex literal grammar used by the circuit format: <float>[+-]<float>i.
cx parse_complex(std::string_view tok);
std::string format_complex(cx v);
std::string format_double(double v);  // shortest round-trip decimal

}  // namespace qcut

#endif  // QCUT_CIRCUIT_HPP_
