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

#include "qcut/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include <nlohmann/json.hpp>

namespace qcut {

RankGuardError::RankGuardError(int rank, int max_rank)
    : std::runtime_error("contraction would produce a rank-" +
                         std::to_string(rank) + " tensor (" +
                         std::to_string(16.0 * std::pow(4.0, rank)) +
                         " bytes), exceeding max rank " +
                         std::to_string(max_rank)),
      rank_(rank),
      max_rank_(max_rank) {}

namespace {

void check_leg_list(const Tensor& t, const std::vector<int>& legs,
                    const char* side) {
  std::vector<char> seen(static_cast<std::size_t>(t.rank), 0);
  for (int l : legs) {
    if (l < 0 || l >= t.rank) {
      throw std::invalid_argument(std::string("leg ") + std::to_string(l) +
                                  " out of range for rank-" +
                                  std::to_string(t.rank) + " tensor (" + side +
                                  ")");
    }
    if (seen[static_cast<std::size_t>(l)]) {
      throw std::invalid_argument(std::string("leg ") + std::to_string(l) +
                                  " repeated (" + side + ")");
    }
    seen[static_cast<std::size_t>(l)] = 1;
  }
}

std::vector<int> free_legs(int rank, const std::vector<int>& shared) {
  std::vector<char> is_shared(static_cast<std::size_t>(rank), 0);
  for (int l : shared) is_shared[static_cast<std::size_t>(l)] = 1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rank) - shared.size());
  for (int l = 0; l < rank; ++l) {
    if (!is_shared[static_cast<std::size_t>(l)]) out.push_back(l);
  }
  return out;
}

}  // namespace

Tensor contract_pair(const Tensor& e, const std::vector<int>& legs_e,
                     const Tensor& f, const std::vector<int>& legs_f,
                     int max_rank) {
  if (legs_e.empty() || legs_f.empty()) {
    throw std::invalid_argument("contract_pair needs at least one shared leg");
  }
  if (legs_e.size() != legs_f.size()) {
    throw std::invalid_argument("shared leg lists differ in length: " +
                                std::to_string(legs_e.size()) + " vs " +
                                std::to_string(legs_f.size()));
  }
  check_leg_list(e, legs_e, "left");
  check_leg_list(f, legs_f, "right");

  int shared = static_cast<int>(legs_e.size());
  int out_rank = e.rank + f.rank - 2 * shared;
  if (out_rank > max_rank) throw RankGuardError(out_rank, max_rank);

  std::vector<int> fe = free_legs(e.rank, legs_e);
  std::vector<int> ff = free_legs(f.rank, legs_f);

  std::vector<int> perm_e = fe;
  perm_e.insert(perm_e.end(), legs_e.begin(), legs_e.end());
  std::vector<int> perm_f = legs_f;
  perm_f.insert(perm_f.end(), ff.begin(), ff.end());

  Tensor pe = permute_legs(e, perm_e);
  Tensor pf = permute_legs(f, perm_f);

  std::size_t m = pow4(static_cast<int>(fe.size()));
  std::size_t k = pow4(shared);
  std::size_t n = pow4(static_cast<int>(ff.size()));

  Tensor g = Tensor::zeros(out_rank);
  for (std::size_t i = 0; i < m; ++i) {
    const cx* a_row = pe.data.data() + i * k;
    cx* g_row = g.data.data() + i * n;
    for (std::size_t s = 0; s < k; ++s) {
      cx a = a_row[s];
      if (a == cx{}) continue;
      const cx* b_row = pf.data.data() + s * n;
      for (std::size_t j = 0; j < n; ++j) g_row[j] += a * b_row[j];
    }
  }
  return g;
}

ContractionPlan plan_from_order(const TensorNetwork& tn,
                                const EliminationOrder& ord) {
  check_closed(tn);
  {
    std::set<int> want;
    for (const auto& [id, t] : tn.vertices) want.insert(id);
    std::set<int> got(ord.begin(), ord.end());
    if (got != want || got.size() != ord.size()) {
      throw std::invalid_argument(
          "order is not a permutation of the network's vertices");
    }
  }

  // Per-root leg lists: position -> edge id.
  std::unordered_map<int, std::vector<int>> legs;
  for (const auto& [id, t] : tn.vertices) {
    legs[id].assign(static_cast<std::size_t>(t.rank), -1);
  }
  for (const NetEdge& e : tn.edges) {
    legs[e.u][static_cast<std::size_t>(e.leg_u)] = e.id;
    legs[e.v][static_cast<std::size_t>(e.leg_v)] = e.id;
  }

  // Fill-graph simulation on the collapsed simple graph, giving each
  // vertex the parent its merged tensor is parked at: the earliest
  // eliminated fill neighbor. This is the tree-decomposition parent, so
  // intermediate boundaries stay inside elimination cliques.
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < ord.size(); ++i) {
    pos[ord[i]] = static_cast<int>(i);
  }
  std::unordered_map<int, std::set<int>> nb;
  for (const auto& [id, t] : tn.vertices) nb[id];
  for (const NetEdge& e : tn.edges) {
    if (e.u == e.v) continue;
    nb[e.u].insert(e.v);
    nb[e.v].insert(e.u);
  }
  std::unordered_map<int, int> parent;
  for (int v : ord) {
    std::vector<int> later;
    for (int u : nb[v]) {
      if (pos[u] > pos[v]) later.push_back(u);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        nb[later[i]].insert(later[j]);
        nb[later[j]].insert(later[i]);
      }
    }
    int best = -1;
    for (int u : later) {
      if (best == -1 || pos[u] < pos[best]) best = u;
    }
    parent[v] = best;
  }

  std::unordered_map<int, std::vector<int>> parked;  // vertex -> tensor roots

  ContractionPlan plan;
  for (int v : ord) {
    std::vector<int> pending = parked[v];
    std::sort(pending.begin(), pending.end());
    while (!pending.empty()) {
      // Absorb the pending tensor that keeps the merged rank smallest;
      // ties break toward the smallest root id.
      std::vector<int>& la = legs[v];
      std::vector<int> sa(la.begin(), la.end());
      std::sort(sa.begin(), sa.end());
      std::size_t pick = pending.size();
      int pick_rank = 0;
      std::vector<int> shared;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        const std::vector<int>& lb = legs[pending[i]];
        std::vector<int> sb(lb.begin(), lb.end());
        std::sort(sb.begin(), sb.end());
        std::vector<int> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        int r = static_cast<int>(la.size() + lb.size() - 2 * common.size());
        if (pick == pending.size() || r < pick_rank) {
          pick = i;
          pick_rank = r;
          shared = std::move(common);
        }
      }
      if (pick == pending.size()) {
        throw std::logic_error("no parked tensor shares legs with vertex " +
                               std::to_string(v));
      }
      int s = pending[pick];
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
      std::vector<int>& lb = legs[s];

      PlanStep step;
      step.a = v;
      step.b = s;
      step.out = v;
      step.edges = shared;
      step.rank_a = static_cast<int>(la.size());
      step.rank_b = static_cast<int>(lb.size());
      for (int eid : shared) {
        step.legs_a.push_back(static_cast<int>(
            std::find(la.begin(), la.end(), eid) - la.begin()));
        step.legs_b.push_back(static_cast<int>(
            std::find(lb.begin(), lb.end(), eid) - lb.begin()));
      }
      int ns = static_cast<int>(shared.size());
      step.result_rank = step.rank_a + step.rank_b - 2 * ns;
      step.work_rank = step.rank_a + step.rank_b - ns;

      std::vector<int> merged;
      auto keep = [&](const std::vector<int>& src) {
        for (int eid : src) {
          if (!std::binary_search(shared.begin(), shared.end(), eid)) {
            merged.push_back(eid);
          }
        }
      };
      keep(la);
      keep(lb);
      legs[v] = std::move(merged);
      legs.erase(s);

      plan.peak_rank = std::max(plan.peak_rank, step.result_rank);
      plan.cost_estimate += std::pow(4.0, step.work_rank);
      plan.steps.push_back(std::move(step));
    }

    if (legs[v].empty()) {
      plan.scalars.push_back(v);
    } else {
      int p = parent[v];
      if (p == -1) {
        throw std::logic_error("vertex " + std::to_string(v) + " keeps " +
                               std::to_string(legs[v].size()) +
                               " open legs but has no later neighbor");
      }
      parked[p].push_back(v);
    }
  }
  std::sort(plan.scalars.begin(), plan.scalars.end());
  return plan;
}

ContractionPlan best_plan(const TensorNetwork& tn, int restarts,
                          std::uint64_t seed) {
  Graph g = network_graph(tn);
  BestOrderResult bo = best_order(g, restarts, seed);
  ContractionPlan heuristic = plan_from_order(tn, bo.order);

  EliminationOrder creation;
  for (const auto& [id, t] : tn.vertices) creation.push_back(id);
  ContractionPlan sweep = plan_from_order(tn, creation);

  if (sweep.peak_rank != heuristic.peak_rank) {
    return sweep.peak_rank < heuristic.peak_rank ? sweep : heuristic;
  }
  return sweep.cost_estimate < heuristic.cost_estimate ? sweep : heuristic;
}

void check_rank_guard(const ContractionPlan& plan, int max_rank) {
  for (const PlanStep& step : plan.steps) {
    if (step.result_rank > max_rank) {
      throw RankGuardError(step.result_rank, max_rank);
    }
  }
}

cx execute_plan(const TensorNetwork& tn, const ContractionPlan& plan,
                int max_rank) {
  check_rank_guard(plan, max_rank);
  std::unordered_map<int, Tensor> live;
  for (const auto& [id, t] : tn.vertices) live.emplace(id, t);

  cx acc{1.0, 0.0};
  for (const PlanStep& step : plan.steps) {
    auto ia = live.find(step.a);
    auto ib = live.find(step.b);
    if (ia == live.end() || ib == live.end()) {
      throw std::invalid_argument("plan references a missing vertex");
    }
    Tensor g =
        contract_pair(ia->second, step.legs_a, ib->second, step.legs_b, max_rank);
    live.erase(ib);
    if (g.rank == 0) {
      acc *= g.data[0];
      live.erase(step.a);
    } else {
      live[step.a] = std::move(g);
    }
  }
  for (const auto& [id, t] : live) {
    if (t.rank != 0) {
      throw std::invalid_argument("plan does not reduce vertex " +
                                  std::to_string(id) + " to a scalar");
    }
    acc *= t.data[0];
  }
  return acc;
}

CostReport estimate_cost(const ContractionPlan& plan) {
  CostReport r;
  r.peak_rank = plan.peak_rank;
  r.cost_estimate = plan.cost_estimate;
  auto bytes_of = [](int rank) -> std::uint64_t {
    if (rank >= 30) return ~std::uint64_t{0};  // would overflow 64 bits
    return std::uint64_t{16} << (2 * rank);
  };
  r.data_bytes_peak = bytes_of(plan.peak_rank);
  for (const PlanStep& s : plan.steps) {
    std::uint64_t step_bytes =
        bytes_of(s.rank_a) + bytes_of(s.rank_b) + bytes_of(s.result_rank);
    r.bytes_peak = std::max(r.bytes_peak, step_bytes);
  }
  r.bytes_peak = std::max(r.bytes_peak, r.data_bytes_peak);
  return r;
}

std::string dump_plan_json(const ContractionPlan& plan) {
  nlohmann::json steps = nlohmann::json::array();
  for (const PlanStep& s : plan.steps) {
    steps.push_back({{"a", s.a},
                     {"b", s.b},
                     {"out", s.out},
                     {"edges", s.edges},
                     {"rank_a", s.rank_a},
                     {"rank_b", s.rank_b},
                     {"result_rank", s.result_rank},
                     {"work_rank", s.work_rank}});
  }
  CostReport cost = estimate_cost(plan);
  nlohmann::json j{{"v", 1},
                   {"steps", std::move(steps)},
                   {"scalars", plan.scalars},
                   {"peak_rank", plan.peak_rank},
                   {"cost_estimate", plan.cost_estimate},
                   {"data_bytes_peak", cost.data_bytes_peak},
                   {"bytes_peak", cost.bytes_peak}};
  return j.dump(2) + "\n";
}

}  // namespace qcut
