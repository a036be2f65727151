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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "qcut/contraction.hpp"
#include "qcut/cutting.hpp"
#include "qcut/oracle.hpp"
#include "qcut/ordering.hpp"
#include "qcut/qaoa.hpp"

using qcut::cx;

namespace {

cx contract(const qcut::TensorNetwork& tn, std::uint64_t seed = 1) {
  qcut::Graph g = qcut::network_graph(tn);
  qcut::BestOrderResult bo = qcut::best_order(g, 2, seed);
  return qcut::execute_plan(tn, qcut::plan_from_order(tn, bo.order));
}

// Sum of all 4^m subnetwork contractions, sharing one plan.
cx cut_sum(const qcut::TensorNetwork& tn, const qcut::CutSet& cut) {
  int m = static_cast<int>(cut.size());
  qcut::TensorNetwork first =
      qcut::apply_cut(tn, cut, qcut::Assignment(static_cast<std::size_t>(m), 0));
  qcut::Graph g = qcut::network_graph(first);
  qcut::BestOrderResult bo = qcut::best_order(g, 2, 1);
  qcut::ContractionPlan plan = qcut::plan_from_order(first, bo.order);
  cx acc{0};
  for (std::uint64_t i = 0; i < qcut::subnetwork_count(m); ++i) {
    qcut::TensorNetwork sub =
        qcut::apply_cut(tn, cut, qcut::assignment_from_index(i, m));
    acc += qcut::execute_plan(sub, plan);
  }
  return acc;
}

}  // namespace

TEST_CASE("subnetwork_count powers of four") {
  CHECK(qcut::subnetwork_count(0) == 1);
  CHECK(qcut::subnetwork_count(1) == 4);
  CHECK(qcut::subnetwork_count(2) == 16);
  CHECK(qcut::subnetwork_count(8) == 65536);
  CHECK(qcut::subnetwork_count(31) == std::uint64_t{1} << 62);
  CHECK_THROWS_AS(qcut::subnetwork_count(-1), std::invalid_argument);
  CHECK_THROWS_AS(qcut::subnetwork_count(32), std::invalid_argument);
}

TEST_CASE("assignment enumeration is lexicographic") {
  CHECK(qcut::assignment_from_index(0, 0).empty());
  CHECK(qcut::assignment_from_index(0, 1) == qcut::Assignment{0});
  CHECK(qcut::assignment_from_index(3, 1) == qcut::Assignment{3});
  CHECK(qcut::assignment_from_index(0, 2) == qcut::Assignment{0, 0});
  CHECK(qcut::assignment_from_index(15, 2) == qcut::Assignment{3, 3});
  CHECK(qcut::assignment_from_index(6, 2) == qcut::Assignment{1, 2});
  for (std::uint64_t i = 0; i < 64; ++i) {
    CHECK(qcut::assignment_index(qcut::assignment_from_index(i, 3)) == i);
  }
  CHECK_THROWS_AS(qcut::assignment_from_index(4, 1), std::invalid_argument);
}

TEST_CASE("apply_cut with no edges is the identity") {
  qcut::Circuit c = qcut::Circuit::make(2);
  c.add(qcut::standard_gate("cnot"), {0, 1});
  qcut::TensorNetwork tn = qcut::build_network(c);
  CHECK(qcut::apply_cut(tn, {}, {}) == tn);
}

TEST_CASE("apply_cut drops the edge and shrinks both endpoint tensors") {
  qcut::Circuit c = qcut::Circuit::make(1);
  c.add(qcut::standard_gate("h"), {0});
  qcut::TensorNetwork tn = qcut::build_network(c);
  int victim = tn.edges[0].id;
  int u = tn.edges[0].u, v = tn.edges[0].v;
  qcut::TensorNetwork sub = qcut::apply_cut(tn, {victim}, {2});
  CHECK(sub.edges.size() == tn.edges.size() - 1);
  CHECK(sub.vertices.at(u).rank == tn.vertices.at(u).rank - 1);
  CHECK(sub.vertices.at(v).rank == tn.vertices.at(v).rank - 1);
}

TEST_CASE("apply_cut validates its arguments") {
  qcut::Circuit c = qcut::Circuit::make(1);
  c.add(qcut::standard_gate("h"), {0});
  qcut::TensorNetwork tn = qcut::build_network(c);
  int e0 = tn.edges[0].id, e1 = tn.edges[1].id;
  CHECK_THROWS_AS(qcut::apply_cut(tn, {e0}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(qcut::apply_cut(tn, {777}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(qcut::apply_cut(tn, {e0, e0}, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qcut::apply_cut(tn, {std::max(e0, e1), std::min(e0, e1)},
                                  {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qcut::apply_cut(tn, {e0}, {7}), std::invalid_argument);
}

TEST_CASE("single-edge cut sum reproduces the uncut amplitude") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    qcut::Circuit c =
        qcut_test::random_circuit(n, 2 + static_cast<int>(rng() % 8), rng);
    qcut::TensorNetwork tn = qcut::build_network(c);
    cx uncut = contract(tn);
    int victim =
        tn.edges[static_cast<std::size_t>(rng() % tn.edges.size())].id;
    cx sum = cut_sum(tn, {victim});
    CHECK(std::abs(sum - uncut) < 1e-10);
  }
}

TEST_CASE("multi-edge cut sums reproduce the uncut amplitude") {
  std::mt19937_64 rng(22);
  for (int m : {2, 3}) {
    for (int trial = 0; trial < 4; ++trial) {
      qcut::Circuit c =
          qcut_test::random_circuit(3, 4 + static_cast<int>(rng() % 6), rng);
      qcut::TensorNetwork tn = qcut::build_network(c);
      std::vector<int> ids;
      for (const auto& e : tn.edges) ids.push_back(e.id);
      std::shuffle(ids.begin(), ids.end(), rng);
      qcut::CutSet cut(ids.begin(), ids.begin() + m);
      std::sort(cut.begin(), cut.end());
      cx uncut = contract(tn);
      CHECK(std::abs(cut_sum(tn, cut) - uncut) < 1e-9);
    }
  }
}

TEST_CASE("all subnetworks of a cut share one topology") {
  std::mt19937_64 rng(23);
  qcut::Circuit c = qcut_test::random_circuit(3, 8, rng);
  qcut::TensorNetwork tn = qcut::build_network(c);
  qcut::CutSet cut{tn.edges[1].id, tn.edges[5].id};
  std::sort(cut.begin(), cut.end());
  qcut::TensorNetwork base = qcut::apply_cut(tn, cut, {0, 0});
  for (std::uint64_t i = 1; i < 16; ++i) {
    qcut::TensorNetwork sub =
        qcut::apply_cut(tn, cut, qcut::assignment_from_index(i, 2));
    CHECK(sub.edges == base.edges);
    for (const auto& [id, t] : base.vertices) {
      CHECK(sub.vertices.at(id).rank == t.rank);
    }
  }
}

TEST_CASE("cutting a square network lowers its width to one") {
  // four rank-2 tensors in a ring; the collapsed graph is C4, width 2
  qcut::TensorNetwork ring;
  for (int v = 0; v < 4; ++v) {
    qcut::Tensor t;
    t.rank = 2;
    t.data.assign(16, cx{0.25});
    ring.vertices.emplace(v, t);
  }
  // edge i joins vertex i's leg 1 to vertex (i+1)%4's leg 0
  for (int i = 0; i < 4; ++i) {
    ring.edges.push_back({i, i, 1, (i + 1) % 4, 0});
  }
  qcut::check_closed(ring);
  qcut::Graph g = qcut::network_graph(ring);
  CHECK(qcut::exact_treewidth(g) == 2);
  CHECK(qcut::cut_width(g, {2}, 2, 1) == 1);
  qcut::TensorNetwork sliced = qcut::apply_cut(ring, {2}, {1});
  CHECK(qcut::exact_treewidth(qcut::network_graph(sliced)) == 1);
}

TEST_CASE("cut_width of an empty cut is the plain width") {
  qcut::Graph g = qcut_test::cycle_graph(6);
  CHECK(qcut::cut_width(g, {}, 2, 5) == qcut::best_order(g, 2, 5).width);
}

TEST_CASE("cutting cannot increase the exact treewidth") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    qcut::Graph g =
        qcut_test::random_connected_graph(n, 3 + static_cast<int>(rng() % 6),
                                          rng);
    int uncut = qcut::exact_treewidth(g);
    std::vector<int> ids;
    for (const auto& e : g.edges) ids.push_back(e.id);
    std::shuffle(ids.begin(), ids.end(), rng);
    int m = 1 + static_cast<int>(rng() % 2);
    std::vector<int> cut(ids.begin(), ids.begin() + m);
    CHECK(qcut::exact_treewidth(g.without_edges(cut)) <= uncut);
  }
}

TEST_CASE("ga_search with zero generations returns the initial best") {
  qcut::RegularGraph rg = qcut::random_regular_graph(10, 3, 1);
  qcut::Circuit c = qcut::qaoa_circuit(rg, 0.6, 0.4, 1,
                                       qcut::default_bitstring(10));
  qcut::Graph g = qcut::network_graph(qcut::build_network(c));
  qcut::GaParams params;
  params.M = 2;
  params.T = 0;
  params.seed = 5;
  qcut::GaResult r = qcut::ga_search(g, params);
  CHECK(r.history.size() == 1);
  CHECK(r.history[0] == r.width);
  CHECK(r.cut.size() == 2);
}

TEST_CASE("ga_search is deterministic per seed") {
  qcut::RegularGraph rg = qcut::random_regular_graph(12, 3, 2);
  qcut::Circuit c = qcut::qaoa_circuit(rg, 0.6, 0.4, 1,
                                       qcut::default_bitstring(12));
  qcut::Graph g = qcut::network_graph(qcut::build_network(c));
  qcut::GaParams params;
  params.M = 3;
  params.seed = 11;
  qcut::GaResult a = qcut::ga_search(g, params);
  qcut::GaResult b = qcut::ga_search(g, params);
  CHECK(a.cut == b.cut);
  CHECK(a.width == b.width);
  CHECK(a.history == b.history);
  params.seed = 12;
  qcut::GaResult other = qcut::ga_search(g, params);
  // a different seed explores a different trajectory (cut may coincide)
  CHECK(other.history.size() == a.history.size());
}

TEST_CASE("ga_search history is monotone under elitism") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 10 + 2 * static_cast<int>(rng() % 4);
    qcut::RegularGraph rg = qcut::random_regular_graph(n, 3, rng());
    qcut::Circuit c = qcut::qaoa_circuit(rg, 0.6, 0.4, 1,
                                         qcut::default_bitstring(n));
    qcut::Graph g = qcut::network_graph(qcut::build_network(c));
    qcut::GaParams params;
    params.M = 2 + static_cast<int>(rng() % 3);
    params.seed = rng();
    params.fitness_restarts = 1;
    qcut::GaResult r = qcut::ga_search(g, params);
    REQUIRE(r.history.size() == static_cast<std::size_t>(params.T) + 1);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
      CHECK(r.history[i] <= r.history[i - 1]);
    }
    CHECK(r.width == r.history.back());
    CHECK(r.width <= r.history.front());
    // the result is M distinct existing edges, sorted
    CHECK(r.cut.size() == static_cast<std::size_t>(params.M));
    CHECK(std::is_sorted(r.cut.begin(), r.cut.end()));
    std::set<int> all;
    for (const auto& e : g.edges) all.insert(e.id);
    std::set<int> distinct(r.cut.begin(), r.cut.end());
    CHECK(distinct.size() == r.cut.size());
    for (int id : r.cut) CHECK(all.count(id) == 1);
  }
}

TEST_CASE("ga_search defaults match the published configuration") {
  qcut::GaParams params;
  CHECK(params.N == 11);
  CHECK(params.T == 4);
}

TEST_CASE("ga_search handles the degenerate M=0") {
  // C5 has treewidth 2 and every elimination order realizes it, so the
  // fitness of the empty cut is 2 regardless of seeds.
  qcut::Graph g = qcut_test::cycle_graph(5);
  qcut::GaParams params;
  params.M = 0;
  qcut::GaResult r = qcut::ga_search(g, params);
  CHECK(r.cut.empty());
  CHECK(r.width == 2);
}

TEST_CASE("ga_search validates parameters") {
  qcut::Graph g = qcut_test::cycle_graph(4);
  qcut::GaParams params;
  params.M = 99;
  CHECK_THROWS_AS(qcut::ga_search(g, params), std::invalid_argument);
  params.M = 1;
  params.N = 1;
  CHECK_THROWS_AS(qcut::ga_search(g, params), std::invalid_argument);
  params.N = 11;
  params.T = -1;
  CHECK_THROWS_AS(qcut::ga_search(g, params), std::invalid_argument);
}

TEST_CASE("ga_search accepts a warm start individual") {
  qcut::RegularGraph rg = qcut::random_regular_graph(10, 3, 4);
  qcut::Circuit c = qcut::qaoa_circuit(rg, 0.6, 0.4, 1,
                                       qcut::default_bitstring(10));
  qcut::Graph g = qcut::network_graph(qcut::build_network(c));
  qcut::GaParams params;
  params.M = 2;
  params.T = 0;
  params.fitness_restarts = 1;
  params.warm_start = qcut::CutSet{g.edges[0].id, g.edges[1].id};
  qcut::GaResult r = qcut::ga_search(g, params);
  CHECK(r.cut.size() == 2);
  params.warm_start = qcut::CutSet{99999, 99998};
  CHECK_THROWS_AS(qcut::ga_search(g, params), std::invalid_argument);
  params.warm_start = qcut::CutSet{g.edges[0].id};
  CHECK_THROWS_AS(qcut::ga_search(g, params), std::invalid_argument);
}

TEST_CASE("cut file json round-trips") {
  qcut::CutSet cut{3, 7, 9};
  qcut::GaParams params;
  params.M = 3;
  params.seed = 42;
  std::vector<int> history{9, 8, 8, 7, 7};
  std::string text = qcut::dump_cut_json(cut, "abc123", 7, params, history);
  qcut::CutFile f = qcut::parse_cut_json(text);
  CHECK(f.edges == cut);
  CHECK(f.source_graph_hash == "abc123");
  CHECK(f.width_found == 7);
  CHECK(f.ga.M == 3);
  CHECK(f.ga.N == 11);
  CHECK(f.ga.T == 4);
  CHECK(f.ga.seed == 42);
  CHECK(f.history == history);
}
