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

#ifndef COPSROBBERS_GRAPH_H_
#define COPSROBBERS_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace copsrobbers {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected, simple, connected graph on vertices 0..n-1.
//
// Adjacency lists are sorted. The constructor rejects self-loops, duplicate
// edges, out-of-range endpoints and disconnected inputs with
// std::invalid_argument. Instances are immutable.
class Graph {
 public:
  Graph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t num_edges() const { return num_edges_; }

  // Open neighbourhood N(v).
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Closed neighbourhood N+(v) = N(v) with v inserted, sorted.
  std::vector<Vertex> closed_neighbors(Vertex v) const;

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  // BFS distances from `source`.
  std::vector<int> distances_from(Vertex source) const;

  // All-pairs distances, row-major n*n.
  std::vector<int> all_pairs_distances() const;

  // Returns the graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::int64_t num_edges_ = 0;
};

struct Diagnostics {
  bool connected = false;
  int diameter = 0;
  int max_degree = 0;
};

// Connectivity, exact diameter and maximum degree of an arbitrary (possibly
// disconnected) edge set. The diameter is that of the component of vertex 0
// when the graph is disconnected.
Diagnostics Validate(int num_vertices, std::span<const Edge> edges);
Diagnostics Validate(const Graph& g);

// D * Delta^D, the finite upper bound on the drunk expected capture time that
// a single stationary cop guarantees. May be +inf in double arithmetic.
double StationaryCopBound(const Graph& g);

// Generators. All vertex labels are 0-based.
Graph Path(int n);
Graph Cycle(int n);
// Complete d-ary tree of the given depth, root 0, breadth-first labels.
Graph CompleteTree(int d, int depth);
// Vertex (u, v) becomes u * |V(h)| + v.
Graph CartesianProduct(const Graph& g, const Graph& h);
Graph Grid(int n);
Graph Complete(int n);
// Path 0..n-1 whose end 0 is a member of a clique on floor(c*n) vertices and
// whose end n-1 is a member of a second such clique.
Graph Barbell(int n, double c);
// Path 0..n-1 whose end 0 is a member of a clique on floor(c*n) vertices.
Graph Lollipop(int n, double c);

enum class Family { kPath, kCycle, kCompleteTree, kGrid, kBarbell, kLollipop };

struct FamilySpec {
  Family family = Family::kPath;
  int n = 0;
  int d = 2;
  int depth = 0;
  double c = 0.0;
};

Family ParseFamily(const std::string& name);
std::string FamilyName(Family family);
Graph Generate(const FamilySpec& spec);

}  // namespace copsrobbers

#endif  // COPSROBBERS_GRAPH_H_
