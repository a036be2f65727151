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

#include "qcut/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qcut/types.hpp"

namespace qcut {

Graph Graph::from_edges(std::vector<int> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::unordered_set<int> vset(vertices.begin(), vertices.end());
  std::unordered_set<int> eids;
  for (const Edge& e : edges) {
    if (!vset.count(e.u) || !vset.count(e.v))
      throw std::invalid_argument("edge endpoint not in vertex set");
    if (!eids.insert(e.id).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
  }
  return Graph{std::move(vertices), std::move(edges)};
}

Graph Graph::without_edges(const std::vector<int>& edge_ids) const {
  std::unordered_set<int> drop(edge_ids.begin(), edge_ids.end());
  Graph out;
  out.vertices = vertices;
  std::size_t found = 0;
  for (const Edge& e : edges) {
    if (drop.count(e.id)) {
      ++found;
      continue;
    }
    out.edges.push_back(e);
  }
  if (found != drop.size())
    throw std::invalid_argument("unknown edge id in removal set");
  return out;
}

SimpleGraph SimpleGraph::collapse(const Graph& g) {
  SimpleGraph s;
  s.n_ = g.vertex_count();
  s.words_ = (s.n_ + 63) / 64;
  s.dense_to_id = g.vertices;
  for (int i = 0; i < s.n_; ++i) s.id_to_dense[g.vertices[i]] = i;
  s.adj_.assign(s.n_, std::vector<std::uint64_t>(std::max(s.words_, 1), 0));
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;  // self loops do not affect elimination
    s.add_edge(s.id_to_dense.at(e.u), s.id_to_dense.at(e.v));
  }
  return s;
}

void SimpleGraph::add_edge(int a, int b) {
  adj_[a][b >> 6] |= 1ull << (b & 63);
  adj_[b][a >> 6] |= 1ull << (a & 63);
}

int SimpleGraph::degree(int a) const {
  int d = 0;
  for (std::uint64_t w : adj_[a]) d += std::popcount(w);
  return d;
}

bool SimpleGraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<std::uint64_t> seen(words_, 0), frontier(words_, 0);
  seen[0] = frontier[0] = 1;  // start from dense vertex 0
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> next(words_, 0);
    for (int v = 0; v < n_; ++v) {
      if (!((frontier[v >> 6] >> (v & 63)) & 1u)) continue;
      for (int w = 0; w < words_; ++w) next[w] |= adj_[v][w];
    }
    for (int w = 0; w < words_; ++w) {
      const std::uint64_t fresh = next[w] & ~seen[w];
      if (fresh) grew = true;
      seen[w] |= fresh;
      next[w] = fresh;
    }
    frontier = std::move(next);
  }
  int count = 0;
  for (std::uint64_t w : seen) count += std::popcount(w);
  return count == n_;
}

RegularGraph random_regular_graph(int n, int degree, std::uint64_t seed,
                                  int max_attempts) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  if (n <= degree)
    throw std::invalid_argument("need more vertices than the degree");
  if ((static_cast<long long>(n) * degree) % 2 != 0)
    throw std::invalid_argument("infeasible: n*degree is odd (n=" +
                                std::to_string(n) + ", degree=" +
                                std::to_string(degree) + ")");

  std::mt19937_64 rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * degree);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < degree; ++k) stubs[v * degree + k] = v;

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    RegularGraph g{n, degree, {}};
    std::unordered_set<long long> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.insert(static_cast<long long>(u) * n + v).second) {
        ok = false;
        break;
      }
      g.edges.emplace_back(u, v);
    }
    if (!ok) continue;
    if (!SimpleGraph::collapse(to_graph(g)).connected()) continue;
    return g;
  }
  throw std::runtime_error("regular graph sampling failed after " +
                           std::to_string(max_attempts) + " attempts");
}

Graph to_graph(const RegularGraph& g) {
  Graph out;
  out.vertices.resize(g.n);
  std::iota(out.vertices.begin(), out.vertices.end(), 0);
  int id = 0;
  for (const auto& [u, v] : g.edges) out.edges.push_back(Edge{id++, u, v});
  return out;
}

std::string emit_graph(const RegularGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << "\n";
  return out.str();
}

RegularGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("expected 'N M' header");
  if (n <= 0 || m < 0) throw std::invalid_argument("bad graph header");
  RegularGraph g{n, 0, {}};
  std::vector<int> deg(n, 0);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("expected " + std::to_string(m) + " edges");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  g.degree = n > 0 ? deg[0] : 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] != g.degree) g.degree = 0;  // not regular; callers may not care
  return g;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
  return buf;
}

std::string graph_hash(const Graph& g) {
  std::ostringstream out;
  out << "v:";
  for (int v : g.vertices) out << v << ',';
  out << "e:";
  for (const Edge& e : g.edges) out << e.id << ':' << e.u << '-' << e.v << ',';
  return fnv1a64_hex(out.str());
}

}  // namespace qcut
