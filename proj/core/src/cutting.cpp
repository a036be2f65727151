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

#include "qcut/cutting.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <nlohmann/json.hpp>

#include "qcut/ordering.hpp"
#include "qcut/tensor.hpp"
#include "qcut/types.hpp"

namespace qcut {

std::uint64_t subnetwork_count(int m) {
  if (m < 0 || m > 31) {
    throw std::invalid_argument("cut size " + std::to_string(m) +
                                " outside [0, 31]");
  }
  return std::uint64_t{1} << (2 * m);
}

Assignment assignment_from_index(std::uint64_t index, int m) {
  if (index >= subnetwork_count(m)) {
    throw std::invalid_argument("assignment index " + std::to_string(index) +
                                " out of range for m=" + std::to_string(m));
  }
  Assignment asg(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    asg[static_cast<std::size_t>(i)] = static_cast<int>(index & 3u);
    index >>= 2;
  }
  return asg;
}

std::uint64_t assignment_index(const Assignment& asg) {
  if (asg.size() > 31) throw std::invalid_argument("assignment too long");
  std::uint64_t idx = 0;
  for (int d : asg) {
    if (d < 0 || d > 3) {
      throw std::invalid_argument("assignment digit " + std::to_string(d) +
                                  " outside 0..3");
    }
    idx = (idx << 2) | static_cast<std::uint64_t>(d);
  }
  return idx;
}

TensorNetwork apply_cut(const TensorNetwork& tn, const CutSet& cut,
                        const Assignment& asg) {
  if (cut.size() != asg.size()) {
    throw std::invalid_argument("cut has " + std::to_string(cut.size()) +
                                " edges but assignment has " +
                                std::to_string(asg.size()) + " digits");
  }
  CutSet sorted = cut;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cut set repeats an edge id");
  }
  if (sorted != cut) {
    throw std::invalid_argument("cut set must be sorted ascending");
  }

  std::unordered_map<int, const NetEdge*> by_id;
  for (const NetEdge& e : tn.edges) by_id[e.id] = &e;

  // Per-vertex (leg, digit) fixes, in original leg coordinates.
  std::map<int, std::vector<std::pair<int, int>>> fixes;
  std::set<int> cut_ids(cut.begin(), cut.end());
  for (std::size_t i = 0; i < cut.size(); ++i) {
    auto it = by_id.find(cut[i]);
    if (it == by_id.end()) {
      throw std::invalid_argument("cut references unknown edge " +
                                  std::to_string(cut[i]));
    }
    int digit = asg[i];
    if (digit < 0 || digit > 3) {
      throw std::invalid_argument("assignment digit " + std::to_string(digit) +
                                  " outside 0..3");
    }
    const NetEdge& e = *it->second;
    fixes[e.u].emplace_back(e.leg_u, digit);
    fixes[e.v].emplace_back(e.leg_v, digit);
  }

  TensorNetwork out;
  std::unordered_map<int, std::vector<int>> leg_maps;
  for (const auto& [id, t] : tn.vertices) {
    auto fit = fixes.find(id);
    if (fit == fixes.end()) {
      out.vertices.emplace(id, t);
      continue;
    }
    std::sort(fit->second.begin(), fit->second.end());
    out.vertices.emplace(id, slice_legs(t, fit->second));
    leg_maps.emplace(id, slice_leg_map(t.rank, fit->second));
  }
  for (const NetEdge& e : tn.edges) {
    if (cut_ids.count(e.id)) continue;
    NetEdge kept = e;
    if (auto it = leg_maps.find(e.u); it != leg_maps.end()) {
      kept.leg_u = it->second[static_cast<std::size_t>(e.leg_u)];
    }
    if (auto it = leg_maps.find(e.v); it != leg_maps.end()) {
      kept.leg_v = it->second[static_cast<std::size_t>(e.leg_v)];
    }
    out.edges.push_back(kept);
  }
  return out;
}

int cut_width(const Graph& g, const CutSet& cut, int restarts,
              std::uint64_t seed) {
  Graph reduced = g.without_edges(cut);
  return best_order(reduced, restarts, seed).width;
}

namespace {

std::uint64_t cut_content_seed(std::uint64_t base, const CutSet& cut) {
  std::uint64_t h = base;
  for (int id : cut) {
    h = mix_seed(h, static_cast<std::uint64_t>(id) + 0x9E37u);
  }
  return h;
}

// Draws a uniformly random edge id not already in `member`.
int fresh_edge(const std::vector<int>& all_ids, const std::set<int>& member,
               std::mt19937_64& rng) {
  for (;;) {
    int id = all_ids[static_cast<std::size_t>(rng() % all_ids.size())];
    if (!member.count(id)) return id;
  }
}

}  // namespace

GaResult ga_search(const Graph& g, const GaParams& params) {
  const int m = params.M;
  const int n_pop = params.N;
  int edge_count = g.edge_count();
  if (m < 0 || m > edge_count) {
    throw std::invalid_argument("cut size " + std::to_string(m) +
                                " infeasible for a graph with " +
                                std::to_string(edge_count) + " edges");
  }
  if (n_pop < 2) {
    throw std::invalid_argument("population size must be at least 2");
  }
  if (params.T < 0) throw std::invalid_argument("generation count negative");

  std::vector<int> all_ids;
  all_ids.reserve(static_cast<std::size_t>(edge_count));
  for (const Edge& e : g.edges) all_ids.push_back(e.id);

  std::mt19937_64 rng(mix_seed(params.seed, 0xA11CEull));
  const std::uint64_t fitness_base = mix_seed(params.seed, 0xF17ull);

  auto sample_individual = [&]() {
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < m) {
      picked.insert(all_ids[static_cast<std::size_t>(rng() % all_ids.size())]);
    }
    return CutSet(picked.begin(), picked.end());
  };

  std::vector<CutSet> pop;
  pop.reserve(static_cast<std::size_t>(n_pop));
  for (int i = 0; i < n_pop; ++i) pop.push_back(sample_individual());
  if (params.warm_start) {
    CutSet w = *params.warm_start;
    std::sort(w.begin(), w.end());
    if (static_cast<int>(w.size()) != m ||
        std::adjacent_find(w.begin(), w.end()) != w.end()) {
      throw std::invalid_argument("warm start is not a set of M edges");
    }
    for (int id : w) {
      if (!std::binary_search(all_ids.begin(), all_ids.end(), id)) {
        throw std::invalid_argument("warm start references unknown edge " +
                                    std::to_string(id));
      }
    }
    pop[0] = std::move(w);
  }

  std::map<CutSet, int> fitness_cache;
  auto fitness = [&](const CutSet& ind) {
    auto it = fitness_cache.find(ind);
    if (it != fitness_cache.end()) return it->second;
    int w = cut_width(g, ind, params.fitness_restarts,
                      cut_content_seed(fitness_base, ind));
    fitness_cache.emplace(ind, w);
    return w;
  };

  auto sort_key = [&](const CutSet& ind) {
    long long id_sum = 0;
    for (int id : ind) id_sum += id;
    return std::tuple<int, long long, CutSet>(fitness(ind), id_sum, ind);
  };
  auto evaluate_and_sort = [&]() {
    std::stable_sort(pop.begin(), pop.end(),
                     [&](const CutSet& a, const CutSet& b) {
                       return sort_key(a) < sort_key(b);
                     });
  };

  GaResult result;
  evaluate_and_sort();
  result.history.push_back(fitness(pop[0]));

  for (int t = 0; t < params.T; ++t) {
    // Crossover: adjacent pairs, the best individual sits out.
    int tail = m / 2;
    for (int i = 1; i + 1 < n_pop; i += 2) {
      CutSet& a = pop[static_cast<std::size_t>(i)];
      CutSet& b = pop[static_cast<std::size_t>(i + 1)];
      for (int k = m - tail; k < m; ++k) {
        std::swap(a[static_cast<std::size_t>(k)],
                  b[static_cast<std::size_t>(k)]);
      }
      for (CutSet* ind : {&a, &b}) {
        std::set<int> seen;
        for (int& id : *ind) {
          if (!seen.insert(id).second) {
            id = fresh_edge(all_ids, seen, rng);
            seen.insert(id);
          }
        }
        std::sort(ind->begin(), ind->end());
      }
    }
    // Mutation: one random non-best individual, one random edge.
    if (m >= 1 && edge_count > m) {
      CutSet& ind =
          pop[1 + static_cast<std::size_t>(rng() % (n_pop - 1))];
      std::size_t pos = static_cast<std::size_t>(rng() % m);
      std::set<int> member(ind.begin(), ind.end());
      member.erase(ind[pos]);
      ind[pos] = fresh_edge(all_ids, member, rng);
      std::sort(ind.begin(), ind.end());
    }
    evaluate_and_sort();
    result.history.push_back(fitness(pop[0]));
  }

  result.cut = pop[0];
  result.width = fitness(pop[0]);
  return result;
}

std::string dump_cut_json(const CutSet& cut, const std::string& graph_hash,
                          int width_found, const GaParams& params,
                          const std::vector<int>& history) {
  nlohmann::json j{{"v", 1},
                   {"edges", cut},
                   {"source_graph_hash", graph_hash},
                   {"width_found", width_found},
                   {"ga",
                    {{"M", params.M},
                     {"N", params.N},
                     {"T", params.T},
                     {"seed", params.seed},
                     {"history", history}}}};
  return j.dump(2) + "\n";
}

CutFile parse_cut_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CutFile f;
  f.edges = j.at("edges").get<std::vector<int>>();
  std::sort(f.edges.begin(), f.edges.end());
  f.source_graph_hash = j.at("source_graph_hash").get<std::string>();
  f.width_found = j.at("width_found").get<int>();
  const auto& ga = j.at("ga");
  f.ga.M = ga.at("M").get<int>();
  f.ga.N = ga.at("N").get<int>();
  f.ga.T = ga.at("T").get<int>();
  f.ga.seed = ga.at("seed").get<std::uint64_t>();
  f.history = ga.at("history").get<std::vector<int>>();
  return f;
}

}  // namespace qcut
