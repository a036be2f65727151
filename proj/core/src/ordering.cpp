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

#include "qcut/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qcut/types.hpp"

namespace qcut {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

void clear_bit(Bits& b, int i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

template <typename F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t bits = b[w];
    while (bits) {
      int i = std::countr_zero(bits);
      bits &= bits - 1;
      f(static_cast<int>(w * 64) + i);
    }
  }
}

// Live degree of `a`: neighbors still alive.
int live_degree(const SimpleGraph& sg, const Bits& alive, int a) {
  int c = 0;
  const auto& r = sg.row(a);
  for (std::size_t w = 0; w < r.size(); ++w) c += std::popcount(r[w] & alive[w]);
  return c;
}

Bits live_neighbors(const SimpleGraph& sg, const Bits& alive, int a) {
  Bits out(alive.size());
  const auto& r = sg.row(a);
  for (std::size_t w = 0; w < r.size(); ++w) out[w] = r[w] & alive[w];
  return out;
}

// Missing adjacencies among the live neighbors of `a` (each pair once).
long long fill_count(const SimpleGraph& sg, const Bits& alive, int a) {
  Bits nb = live_neighbors(sg, alive, a);
  long long missing = 0;
  for_each_bit(nb, [&](int b) {
    const auto& rb = sg.row(b);
    for (std::size_t w = 0; w < nb.size(); ++w) {
      missing += std::popcount(nb[w] & ~rb[w]);
    }
    --missing;  // b itself is in nb but never in its own row
  });
  return missing / 2;
}

// Connect all live neighbors of `a` pairwise and drop `a`.
void eliminate(SimpleGraph& sg, Bits& alive, int a) {
  Bits nb = live_neighbors(sg, alive, a);
  for_each_bit(nb, [&](int b) {
    auto& rb = sg.row(b);
    for (std::size_t w = 0; w < nb.size(); ++w) rb[w] |= nb[w];
    clear_bit(rb, b);
  });
  clear_bit(alive, a);
}

enum class Greedy { kDegree, kFill };

EliminationOrder greedy_order(const Graph& g, std::uint64_t seed, Greedy kind) {
  SimpleGraph sg = SimpleGraph::collapse(g);
  int n = sg.n();
  Bits alive(std::max<std::size_t>(1, sg.words()), 0);
  for (int i = 0; i < n; ++i) set_bit(alive, i);

  std::mt19937_64 rng(seed);
  EliminationOrder order;
  order.reserve(n);
  std::vector<int> ties;
  for (int step = 0; step < n; ++step) {
    long long best = std::numeric_limits<long long>::max();
    ties.clear();
    for_each_bit(alive, [&](int v) {
      long long score = kind == Greedy::kDegree
                            ? live_degree(sg, alive, v)
                            : fill_count(sg, alive, v);
      if (score < best) {
        best = score;
        ties.clear();
      }
      if (score == best) ties.push_back(v);
    });
    int pick = ties[static_cast<std::size_t>(rng() % ties.size())];
    order.push_back(sg.dense_to_id[pick]);
    eliminate(sg, alive, pick);
  }
  return order;
}

std::vector<int> dense_order(const Graph& g, const SimpleGraph& sg,
                             const EliminationOrder& order) {
  if (static_cast<int>(order.size()) != sg.n()) {
    throw std::invalid_argument("elimination order has " +
                                std::to_string(order.size()) + " entries for " +
                                std::to_string(sg.n()) + " vertices");
  }
  std::vector<int> dense;
  dense.reserve(order.size());
  std::unordered_set<int> seen;
  for (int id : order) {
    auto it = sg.id_to_dense.find(id);
    if (it == sg.id_to_dense.end()) {
      throw std::invalid_argument("order mentions unknown vertex " +
                                  std::to_string(id));
    }
    if (!seen.insert(id).second) {
      throw std::invalid_argument("order repeats vertex " + std::to_string(id));
    }
    dense.push_back(it->second);
  }
  (void)g;
  return dense;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

EliminationOrder min_degree_order(const Graph& g, std::uint64_t seed) {
  return greedy_order(g, seed, Greedy::kDegree);
}

EliminationOrder min_fill_order(const Graph& g, std::uint64_t seed) {
  return greedy_order(g, seed, Greedy::kFill);
}

int induced_width(const Graph& g, const EliminationOrder& order) {
  SimpleGraph sg = SimpleGraph::collapse(g);
  std::vector<int> dense = dense_order(g, sg, order);
  Bits alive(std::max<std::size_t>(1, sg.words()), 0);
  for (int i = 0; i < sg.n(); ++i) set_bit(alive, i);
  int width = sg.n() == 0 ? -1 : 0;
  for (int v : dense) {
    width = std::max(width, live_degree(sg, alive, v));
    eliminate(sg, alive, v);
  }
  return width;
}

TreeDecomposition order_to_tree_decomposition(const Graph& g,
                                              const EliminationOrder& order) {
  SimpleGraph sg = SimpleGraph::collapse(g);
  std::vector<int> dense = dense_order(g, sg, order);
  int n = sg.n();
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) position[dense[i]] = i;

  Bits alive(std::max<std::size_t>(1, sg.words()), 0);
  for (int i = 0; i < n; ++i) set_bit(alive, i);

  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> roots;
  for (int step = 0; step < n; ++step) {
    int v = dense[step];
    Bits nb = live_neighbors(sg, alive, v);
    std::vector<int>& bag = td.bags[step];
    bag.push_back(sg.dense_to_id[v]);
    int parent = -1;
    for_each_bit(nb, [&](int u) {
      bag.push_back(sg.dense_to_id[u]);
      if (parent == -1 || position[u] < position[parent]) parent = u;
    });
    std::sort(bag.begin(), bag.end());
    if (parent == -1) {
      roots.push_back(step);
    } else {
      td.tree_edges.emplace_back(step, position[parent]);
    }
    eliminate(sg, alive, v);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    td.tree_edges.emplace_back(roots[i - 1], roots[i]);
  }
  return td;
}

TdReport validate_tree_decomposition(const Graph& g,
                                     const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  auto fail = [](int condition, std::string witness) {
    return TdReport{false, condition, std::move(witness)};
  };

  std::unordered_map<int, std::vector<int>> holders;  // vertex -> bag indices
  for (int b = 0; b < nb; ++b) {
    for (int v : td.bags[b]) holders[v].push_back(b);
  }
  for (int v : g.vertices) {
    if (!holders.count(v)) {
      return fail(1, "vertex " + std::to_string(v) + " appears in no bag");
    }
  }

  for (const Edge& e : g.edges) {
    bool covered = false;
    auto it = holders.find(e.u);
    if (it != holders.end()) {
      for (int b : it->second) {
        const auto& bag = td.bags[b];
        if (std::binary_search(bag.begin(), bag.end(), e.v)) {
          covered = true;
          break;
        }
      }
    }
    if (e.u == e.v) covered = it != holders.end();
    if (!covered) {
      return fail(2, "edge " + std::to_string(e.id) + " (" +
                         std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") lies inside no bag");
    }
  }

  std::vector<std::vector<int>> tree(nb);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || a >= nb || b < 0 || b >= nb) {
      return fail(3, "tree edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ") references a missing bag");
    }
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  if (nb > 0) {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : tree[b]) {
        if (!seen[c]) {
          seen[c] = 1;
          ++reached;
          stack.push_back(c);
        }
      }
    }
    if (reached != nb || static_cast<int>(td.tree_edges.size()) != nb - 1) {
      return fail(3, "bag graph is not a tree (" + std::to_string(nb) +
                         " bags, " + std::to_string(td.tree_edges.size()) +
                         " edges, " + std::to_string(reached) + " reachable)");
    }
  }
  for (const auto& [v, bags] : holders) {
    if (bags.size() <= 1) continue;
    std::unordered_set<int> members(bags.begin(), bags.end());
    std::unordered_set<int> seen{bags[0]};
    std::vector<int> stack{bags[0]};
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : tree[b]) {
        if (members.count(c) && !seen.count(c)) {
          seen.insert(c);
          stack.push_back(c);
        }
      }
    }
    if (seen.size() != members.size()) {
      return fail(3, "bags holding vertex " + std::to_string(v) +
                         " do not form a connected subtree");
    }
  }
  return TdReport{};
}

BestOrderResult best_order(const Graph& g,
                           const std::vector<OrderStrategy>& strategies,
                           int restarts, std::uint64_t seed) {
  if (strategies.empty()) {
    throw std::invalid_argument("best_order needs at least one strategy");
  }
  if (restarts < 1) {
    throw std::invalid_argument("best_order needs restarts >= 1");
  }
  BestOrderResult best;
  bool have = false;
  for (std::size_t si = 0; si < strategies.size(); ++si) {
    for (int r = 0; r < restarts; ++r) {
      std::uint64_t s = mix_seed(seed, si * 1000003ull + static_cast<std::uint64_t>(r));
      EliminationOrder order = strategies[si] == OrderStrategy::kMinDegree
                                   ? min_degree_order(g, s)
                                   : min_fill_order(g, s);
      int width = induced_width(g, order);
      if (!have || width < best.width) {
        best = BestOrderResult{std::move(order), width, strategies[si], r};
        have = true;
      }
    }
  }
  return best;
}

BestOrderResult best_order(const Graph& g, int restarts, std::uint64_t seed) {
  return best_order(g, {OrderStrategy::kMinDegree, OrderStrategy::kMinFill},
                    restarts, seed);
}

int exact_treewidth(const Graph& g, int max_vertices) {
  SimpleGraph sg = SimpleGraph::collapse(g);
  int n = sg.n();
  if (n > max_vertices || n > 25) {
    throw std::invalid_argument("exact_treewidth limited to " +
                                std::to_string(std::min(max_vertices, 25)) +
                                " vertices, got " + std::to_string(n));
  }
  if (n == 0) return -1;

  std::vector<std::uint32_t> adj(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b != a && sg.has_edge(a, b)) adj[a] |= std::uint32_t{1} << b;
    }
  }
  // q(S, v): vertices outside S+{v} reachable from v through S.
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t visited = std::uint32_t{1} << v;
    std::uint32_t frontier = visited;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t bits = frontier;
      while (bits) {
        int u = std::countr_zero(bits);
        bits &= bits - 1;
        next |= adj[u];
      }
      next &= ~visited;
      visited |= next;
      frontier = next & s;
    }
    return std::popcount(visited & ~s & ~(std::uint32_t{1} << v));
  };

  std::uint32_t full = n == 32 ? ~std::uint32_t{0}
                               : (std::uint32_t{1} << n) - 1;
  std::vector<std::int8_t> f(std::size_t{1} << n);
  f[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    std::uint32_t bits = s;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      best = std::min(best, std::max<int>(f[rest], q(rest, v)));
    }
    f[s] = static_cast<std::int8_t>(best);
  }
  return f[full];
}

std::string emit_td(const TreeDecomposition& td, int n_vertices) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n_vertices
      << '\n';
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    out << "b " << b + 1;
    for (int v : td.bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  bool have_header = false;
  int declared_bags = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int width_plus_1 = 0, n_vertices = 0;
      if (!(ls >> kind >> declared_bags >> width_plus_1 >> n_vertices) ||
          kind != "td" || declared_bags < 0) {
        throw std::invalid_argument("malformed td header: " + line);
      }
      td.bags.assign(declared_bags, {});
      have_header = true;
    } else if (tok == "b") {
      if (!have_header) throw std::invalid_argument("td bag before header");
      int id = 0;
      if (!(ls >> id) || id < 1 || id > declared_bags) {
        throw std::invalid_argument("bad td bag id in: " + line);
      }
      int v;
      while (ls >> v) td.bags[id - 1].push_back(v - 1);
      std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
    } else {
      if (!have_header) throw std::invalid_argument("td edge before header");
      int a = 0, b = 0;
      std::istringstream es(line);
      if (!(es >> a >> b) || a < 1 || b < 1 || a > declared_bags ||
          b > declared_bags) {
        throw std::invalid_argument("bad td edge line: " + line);
      }
      td.tree_edges.emplace_back(a - 1, b - 1);
    }
  }
  if (!have_header) throw std::invalid_argument("td text has no header");
  return td;
}

}  // namespace qcut
