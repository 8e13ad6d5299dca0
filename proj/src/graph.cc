// Copyright 2026 The copsrobbers Authors.
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

#include "copsrobbers/graph.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace copsrobbers {
namespace {

constexpr int kUnreached = -1;

std::vector<std::vector<Vertex>> BuildAdjacency(int n,
                                                std::span<const Edge> edges) {
  if (n < 1) {
    throw std::invalid_argument("graph needs at least one vertex, got " +
                                std::to_string(n));
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} out of range [0," +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate edge at vertex " +
                                  std::to_string(v));
    }
  }
  return adj;
}

std::vector<int> Bfs(const std::vector<std::vector<Vertex>>& adj,
                     Vertex source) {
  std::vector<int> dist(adj.size(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Diagnostics Diagnose(const std::vector<std::vector<Vertex>>& adj) {
  Diagnostics diag;
  for (const auto& list : adj) {
    diag.max_degree = std::max(diag.max_degree, static_cast<int>(list.size()));
  }
  std::vector<int> from_zero = Bfs(adj, 0);
  diag.connected = std::none_of(from_zero.begin(), from_zero.end(),
                                [](int d) { return d == kUnreached; });
  for (Vertex s = 0; s < static_cast<Vertex>(adj.size()); ++s) {
    if (from_zero[s] == kUnreached) continue;
    for (int d : Bfs(adj, s)) diag.diameter = std::max(diag.diameter, d);
  }
  return diag;
}

// Clique size floor(c * n); the small slack absorbs representation error in
// products such as 0.3 * 150.
int CliqueSize(int n, double c, const char* family) {
  if (n < 2) {
    throw std::invalid_argument(std::string(family) + " needs n >= 2, got " +
                                std::to_string(n));
  }
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument(std::string(family) +
                                " needs a finite c >= 0");
  }
  double m = std::floor(c * n + 1e-9);
  if (m > std::numeric_limits<int>::max() / 4) {
    throw std::invalid_argument(std::string(family) + " clique too large");
  }
  if (c > 0.0 && m < 1.0) {
    throw std::invalid_argument(std::string(family) +
                                " needs floor(c*n) >= 1 when c > 0");
  }
  return static_cast<int>(m);
}

// Adds a clique on `anchor` plus `size - 1` fresh vertices starting at
// `first_new`.
void AddClique(std::vector<Edge>& edges, Vertex anchor, Vertex first_new,
               int size) {
  std::vector<Vertex> members{anchor};
  for (int i = 0; i + 1 < size; ++i) members.push_back(first_new + i);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.emplace_back(members[i], members[j]);
    }
  }
}

std::vector<Edge> PathEdges(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return edges;
}

}  // namespace

Graph::Graph(int num_vertices, std::span<const Edge> edges)
    : adjacency_(BuildAdjacency(num_vertices, edges)),
      num_edges_(static_cast<std::int64_t>(edges.size())) {
  std::vector<int> dist = Bfs(adjacency_, 0);
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (dist[v] == kUnreached) {
      throw std::invalid_argument("graph is disconnected: vertex " +
                                  std::to_string(v) +
                                  " unreachable from vertex 0");
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::closed_neighbors(Vertex v) const {
  std::vector<Vertex> out(adjacency_[v]);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::distances_from(Vertex source) const {
  return Bfs(adjacency_, source);
}

std::vector<int> Graph::all_pairs_distances() const {
  const int n = num_vertices();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> row = Bfs(adjacency_, s);
    std::copy(row.begin(), row.end(), out.begin() + std::size_t(s) * n);
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  const int n = num_vertices();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(n, mapped);
}

Diagnostics Validate(int num_vertices, std::span<const Edge> edges) {
  return Diagnose(BuildAdjacency(num_vertices, edges));
}

Diagnostics Validate(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return Diagnose(adj);
}

double StationaryCopBound(const Graph& g) {
  Diagnostics diag = Validate(g);
  return diag.diameter * std::pow(static_cast<double>(diag.max_degree),
                                  static_cast<double>(diag.diameter));
}

Graph Path(int n) {
  if (n < 1) {
    throw std::invalid_argument("path needs n >= 1, got " + std::to_string(n));
  }
  return Graph(n, PathEdges(n));
}

Graph Cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs n >= 3, got " +
                                std::to_string(n));
  }
  std::vector<Edge> edges = PathEdges(n);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph CompleteTree(int d, int depth) {
  if (d < 2 || depth < 0) {
    throw std::invalid_argument("complete tree needs d >= 2 and depth >= 0");
  }
  // (d^(depth+1) - 1) / (d - 1) must fit comfortably in an int.
  std::int64_t count = 0;
  std::int64_t level = 1;
  for (int i = 0; i <= depth; ++i) {
    count += level;
    if (count > std::numeric_limits<Vertex>::max() / 2) {
      throw std::invalid_argument("complete tree vertex count overflows");
    }
    level *= d;
  }
  std::vector<Edge> edges;
  edges.reserve(count - 1);
  // Breadth-first labels: the children of v are d*v + 1 .. d*v + d.
  for (std::int64_t child = 1; child < count; ++child) {
    edges.emplace_back(static_cast<Vertex>((child - 1) / d),
                       static_cast<Vertex>(child));
  }
  return Graph(static_cast<int>(count), edges);
}

Graph CartesianProduct(const Graph& g, const Graph& h) {
  const std::int64_t ng = g.num_vertices();
  const std::int64_t nh = h.num_vertices();
  if (ng * nh > std::numeric_limits<Vertex>::max() / 2) {
    throw std::invalid_argument("cartesian product too large");
  }
  auto id = [nh](std::int64_t u, std::int64_t v) {
    return static_cast<Vertex>(u * nh + v);
  };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < ng; ++u) {
    for (const auto& [a, b] : h.edges()) edges.emplace_back(id(u, a), id(u, b));
  }
  for (const auto& [a, b] : g.edges()) {
    for (Vertex v = 0; v < nh; ++v) edges.emplace_back(id(a, v), id(b, v));
  }
  return Graph(static_cast<int>(ng * nh), edges);
}

Graph Grid(int n) { return CartesianProduct(Path(n), Path(n)); }

Graph Complete(int n) {
  if (n < 1) {
    throw std::invalid_argument("complete graph needs n >= 1");
  }
  std::vector<Edge> edges;
  AddClique(edges, 0, 1, n);
  return Graph(n, edges);
}

Graph Barbell(int n, double c) {
  const int m = CliqueSize(n, c, "barbell");
  if (m <= 1) return Path(n);
  std::vector<Edge> edges = PathEdges(n);
  AddClique(edges, 0, n, m);
  AddClique(edges, n - 1, n + m - 1, m);
  return Graph(n + 2 * (m - 1), edges);
}

Graph Lollipop(int n, double c) {
  const int m = CliqueSize(n, c, "lollipop");
  if (m <= 1) return Path(n);
  std::vector<Edge> edges = PathEdges(n);
  AddClique(edges, 0, n, m);
  return Graph(n + m - 1, edges);
}

Family ParseFamily(const std::string& name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "tree" || name == "complete-tree") return Family::kCompleteTree;
  if (name == "grid") return Family::kGrid;
  if (name == "barbell") return Family::kBarbell;
  if (name == "lollipop") return Family::kLollipop;
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

std::string FamilyName(Family family) {
  switch (family) {
    case Family::kPath:
      return "path";
    case Family::kCycle:
      return "cycle";
    case Family::kCompleteTree:
      return "tree";
    case Family::kGrid:
      return "grid";
    case Family::kBarbell:
      return "barbell";
    case Family::kLollipop:
      return "lollipop";
  }
  return "unknown";
}

Graph Generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kPath:
      return Path(spec.n);
    case Family::kCycle:
      return Cycle(spec.n);
    case Family::kCompleteTree:
      return CompleteTree(spec.d, spec.depth);
    case Family::kGrid:
      if (spec.n < 1) throw std::invalid_argument("grid needs n >= 1");
      return Grid(spec.n);
    case Family::kBarbell:
      return Barbell(spec.n, spec.c);
    case Family::kLollipop:
      return Lollipop(spec.n, spec.c);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace copsrobbers
