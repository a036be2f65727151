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

#include "qcut/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace qcut {

namespace {

const cx kI{0.0, 1.0};

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

Gate make_gate(std::string name, int arity, std::vector<cx> u,
               std::vector<double> params = {}) {
  return Gate{std::move(name), arity, std::move(u), std::move(params)};
}

}  // namespace

Gate standard_gate(std::string_view name_in, const std::vector<double>& params) {
  const std::string name = to_lower(name_in);
  const auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("gate '" + name + "' expects " +
                                  std::to_string(n) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  const double s = 1.0 / std::sqrt(2.0);

  if (name == "i") {
    need(0);
    return make_gate(name, 1, {1, 0, 0, 1});
  }
  if (name == "x") {
    need(0);
    return make_gate(name, 1, {0, 1, 1, 0});
  }
  if (name == "y") {
    need(0);
    return make_gate(name, 1, {0, -kI, kI, 0});
  }
  if (name == "z") {
    need(0);
    return make_gate(name, 1, {1, 0, 0, -1});
  }
  if (name == "h") {
    need(0);
    return make_gate(name, 1, {s, s, s, -s});
  }
  if (name == "s") {
    need(0);
    return make_gate(name, 1, {1, 0, 0, kI});
  }
  if (name == "t") {
    need(0);
    return make_gate(name, 1, {1, 0, 0, std::exp(kI * (M_PI / 4.0))});
  }
  if (name == "rx" || name == "ry" || name == "rz") {
    need(1);
    const double half = params[0] / 2.0;
    const double c = std::cos(half), sn = std::sin(half);
    std::vector<cx> u;
    if (name == "rx")
      u = {c, -kI * sn, -kI * sn, c};
    else if (name == "ry")
      u = {c, -sn, sn, c};
    else
      u = {std::exp(-kI * half), 0, 0, std::exp(kI * half)};
    return make_gate(name, 1, std::move(u), params);
  }
  if (name == "cz") {
    need(0);
    std::vector<cx> u(16, 0);
    u[0] = u[5] = u[10] = 1;
    u[15] = -1;
    return make_gate(name, 2, std::move(u));
  }
  if (name == "cnot") {
    need(0);
    std::vector<cx> u(16, 0);
    u[0] = u[5] = 1;
    u[2 * 4 + 3] = 1;
    u[3 * 4 + 2] = 1;
    return make_gate(name, 2, std::move(u));
  }
  if (name == "zz") {
    // exp(-i g Z(x)Z) is diagonal with phases (-g, +g, +g, -g).
    need(1);
    const cx em = std::exp(-kI * params[0]);
    const cx ep = std::exp(kI * params[0]);
    std::vector<cx> u(16, 0);
    u[0] = em;
    u[5] = ep;
    u[10] = ep;
    u[15] = em;
    return make_gate(name, 2, std::move(u), params);
  }
  throw std::invalid_argument("unknown gate name '" + name + "'");
}

Gate custom_gate(std::vector<cx> unitary, std::vector<double> params) {
  int arity;
  if (unitary.size() == 4)
    arity = 1;
  else if (unitary.size() == 16)
    arity = 2;
  else
    throw std::invalid_argument("custom gate matrix must be 2x2 or 4x4");
  if (!is_unitary(unitary, arity == 1 ? 2 : 4))
    throw std::invalid_argument("custom gate matrix is not unitary");
  const char* name = arity == 1 ? "gate1" : "gate2";
  return Gate{name, arity, std::move(unitary), std::move(params)};
}

Circuit Circuit::make(int n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("qubit count must be positive");
  Circuit c;
  c.n_qubits = n_qubits;
  c.inputs.assign(n_qubits, kProj0);
  c.measurements.assign(n_qubits, kProj0);
  return c;
}

Circuit& Circuit::add(Gate gate, std::vector<int> targets) {
  if (static_cast<int>(targets.size()) != gate.arity)
    throw std::invalid_argument("gate '" + gate.name + "' expects " +
                                std::to_string(gate.arity) + " target(s)");
  for (int t : targets)
    if (t < 0 || t >= n_qubits)
      throw std::invalid_argument("target qubit " + std::to_string(t) +
                                  " out of range for " +
                                  std::to_string(n_qubits) + " qubit(s)");
  if (targets.size() == 2 && targets[0] == targets[1])
    throw std::invalid_argument("two-qubit gate targets must be distinct");
  ops.push_back(CircuitOp{std::move(gate), std::move(targets)});
  return *this;
}

Circuit& Circuit::set_input(int qubit, const Mat2& rho) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("input qubit out of range");
  if (!is_density_operator(rho))
    throw std::invalid_argument("input is not a density operator");
  inputs[qubit] = rho;
  return *this;
}

Circuit& Circuit::set_measurement(int qubit, const Mat2& povm) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("measurement qubit out of range");
  if (!is_hermitian(povm) || !is_psd(povm))
    throw std::invalid_argument("measurement element is not Hermitian PSD");
  measurements[qubit] = povm;
  return *this;
}

void validate_circuit(const Circuit& c) {
  if (c.n_qubits <= 0) throw std::invalid_argument("qubit count must be positive");
  if (static_cast<int>(c.inputs.size()) != c.n_qubits ||
      static_cast<int>(c.measurements.size()) != c.n_qubits)
    throw std::invalid_argument("inputs/measurements must have one entry per qubit");
  for (const auto& rho : c.inputs)
    if (!is_density_operator(rho))
      throw std::invalid_argument("input is not a density operator");
  for (const auto& e : c.measurements)
    if (!is_hermitian(e) || !is_psd(e))
      throw std::invalid_argument("measurement element is not Hermitian PSD");
  for (const auto& op : c.ops) {
    const int dim = op.gate.arity == 1 ? 2 : 4;
    if (!is_unitary(op.gate.unitary, dim))
      throw std::invalid_argument("gate '" + op.gate.name + "' is not unitary");
    if (static_cast<int>(op.targets.size()) != op.gate.arity)
      throw std::invalid_argument("gate arity/target mismatch");
    for (int t : op.targets)
      if (t < 0 || t >= c.n_qubits)
        throw std::invalid_argument("target qubit out of range");
    if (op.targets.size() == 2 && op.targets[0] == op.targets[1])
      throw std::invalid_argument("two-qubit gate targets must be distinct");
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string format_complex(cx v) {
  std::string re = format_double(v.real());
  std::string im = format_double(v.imag());
  if (!im.empty() && im[0] != '-') re += '+';
  return re + im + "i";
}

cx parse_complex(std::string_view tok) {
  if (tok.size() < 2 || tok.back() != 'i')
    throw std::invalid_argument("bad complex literal '" + std::string(tok) + "'");
  // Split at the sign that separates real and imaginary parts; skip a
  // leading sign and exponent signs.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
    if ((tok[i] == '+' || tok[i] == '-') &&
        tok[i - 1] != 'e' && tok[i - 1] != 'E')
      split = i;  // last such sign wins (exponents precede it)
  }
  if (split == std::string_view::npos)
    throw std::invalid_argument("bad complex literal '" + std::string(tok) + "'");
  const std::string re_s(tok.substr(0, split));
  const std::string im_s(tok.substr(split, tok.size() - split - 1));
  std::size_t used = 0;
  double re, im;
  try {
    re = std::stod(re_s, &used);
    if (used != re_s.size()) throw std::invalid_argument("");
    im = std::stod(im_s, &used);
    if (used != im_s.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad complex literal '" + std::string(tok) + "'");
  }
  return {re, im};
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
  int v;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line.number, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

double parse_angle(const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, "bad angle '" + tok + "'");
  }
}

cx parse_complex_tok(const Line& line, const std::string& tok) {
  try {
    return parse_complex(tok);
  } catch (const std::exception& e) {
    throw ParseError(line.number, e.what());
  }
}

int parse_qubit(const Line& line, const std::string& tok, int n_qubits) {
  const int q = parse_int(line, tok, "qubit index");
  if (q < 0 || q >= n_qubits)
    throw ParseError(line.number, "qubit " + std::to_string(q) +
                                      " out of range for " +
                                      std::to_string(n_qubits) + " qubit(s)");
  return q;
}

// Gates with a fixed token shape: name -> (arity, n_params).
const std::unordered_map<std::string, std::pair<int, int>> kGateShapes = {
    {"i", {1, 0}},    {"x", {1, 0}},  {"y", {1, 0}},  {"z", {1, 0}},
    {"h", {1, 0}},    {"s", {1, 0}},  {"t", {1, 0}},  {"rx", {1, 1}},
    {"ry", {1, 1}},   {"rz", {1, 1}}, {"cz", {2, 0}}, {"cnot", {2, 0}},
    {"zz", {2, 1}},
};

}  // namespace

Circuit parse_circuit(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty circuit: expected 'qubits N'");

  const Line& head = lines.front();
  if (to_lower(head.tokens[0]) != "qubits" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected 'qubits N' header");
  const int n = parse_int(head, head.tokens[1], "qubit count");
  if (n <= 0) throw ParseError(head.number, "qubit count must be positive");
  Circuit c = Circuit::make(n);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string kw = to_lower(line.tokens[0]);
    const auto expect = [&](std::size_t n_tokens) {
      if (line.tokens.size() != n_tokens)
        throw ParseError(line.number, "'" + kw + "' expects " +
                                          std::to_string(n_tokens - 1) +
                                          " argument(s)");
    };
    try {
      if (kw == "qubits") {
        throw ParseError(line.number, "duplicate 'qubits' header");
      } else if (kw == "input") {
        expect(6);
        const int q = parse_qubit(line, line.tokens[1], n);
        Mat2 rho;
        for (int k = 0; k < 4; ++k) rho[k] = parse_complex_tok(line, line.tokens[2 + k]);
        c.set_input(q, rho);
      } else if (kw == "measure") {
        if (line.tokens.size() == 3) {
          const int q = parse_qubit(line, line.tokens[1], n);
          if (line.tokens[2] == "0")
            c.set_measurement(q, kProj0);
          else if (line.tokens[2] == "1")
            c.set_measurement(q, kProj1);
          else
            throw ParseError(line.number, "expected 'measure Q 0|1'");
        } else if (line.tokens.size() == 6) {
          const int q = parse_qubit(line, line.tokens[1], n);
          Mat2 e;
          for (int k = 0; k < 4; ++k) e[k] = parse_complex_tok(line, line.tokens[2 + k]);
          c.set_measurement(q, e);
        } else {
          throw ParseError(line.number, "'measure' expects 2 or 5 arguments");
        }
      } else if (kw == "gate1") {
        expect(6);
        const int q = parse_qubit(line, line.tokens[1], n);
        std::vector<cx> u(4);
        for (int k = 0; k < 4; ++k) u[k] = parse_complex_tok(line, line.tokens[2 + k]);
        c.add(custom_gate(std::move(u)), {q});
      } else if (kw == "gate2") {
        expect(19);
        const int q1 = parse_qubit(line, line.tokens[1], n);
        const int q2 = parse_qubit(line, line.tokens[2], n);
        std::vector<cx> u(16);
        for (int k = 0; k < 16; ++k) u[k] = parse_complex_tok(line, line.tokens[3 + k]);
        c.add(custom_gate(std::move(u)), {q1, q2});
      } else if (auto it = kGateShapes.find(kw); it != kGateShapes.end()) {
        const auto [arity, n_params] = it->second;
        expect(1 + arity + n_params);
        std::vector<int> targets;
        for (int k = 0; k < arity; ++k)
          targets.push_back(parse_qubit(line, line.tokens[1 + k], n));
        std::vector<double> params;
        for (int k = 0; k < n_params; ++k)
          params.push_back(parse_angle(line, line.tokens[1 + arity + k]));
        c.add(standard_gate(kw, params), std::move(targets));
      } else {
        throw ParseError(line.number, "unknown directive '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return c;
}

std::string emit_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << "\n";
  for (int q = 0; q < c.n_qubits; ++q) {
    if (c.inputs[q] == kProj0) continue;
    out << "input " << q;
    for (const cx& v : c.inputs[q]) out << ' ' << format_complex(v);
    out << "\n";
  }
  for (const auto& op : c.ops) {
    if (op.gate.name == "gate1" || op.gate.name == "gate2") {
      out << op.gate.name;
      for (int t : op.targets) out << ' ' << t;
      for (const cx& v : op.gate.unitary) out << ' ' << format_complex(v);
    } else {
      out << op.gate.name;
      for (int t : op.targets) out << ' ' << t;
      for (double p : op.gate.params) out << ' ' << format_double(p);
    }
    out << "\n";
  }
  for (int q = 0; q < c.n_qubits; ++q) {
    if (c.measurements[q] == kProj0) continue;
    if (c.measurements[q] == kProj1) {
      out << "measure " << q << " 1\n";
      continue;
    }
    out << "measure " << q;
    for (const cx& v : c.measurements[q]) out << ' ' << format_complex(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace qcut
