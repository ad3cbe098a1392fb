// Copyright 2026 The tough-cycles Authors
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

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tc/vertex_set.hpp"

namespace tc {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the dense vertex ids 0..n-1, 0 <= n <= 64.
// Adjacency is stored as one VertexSet per vertex and kept symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  // Rows must describe a symmetric, loop-free adjacency relation.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  VertexSet vertices() const { return VertexSet::first_n(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  std::span<const VertexSet> rows() const { return adj_; }

  // Fails with invalid_argument on loops, duplicates, or out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

// G \ S with the surviving vertices relabeled 0..n-|S|-1 in increasing order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> id in the parent graph
  std::vector<Vertex> from_parent;  // parent id -> new id, or -1 if deleted
};

InducedSubgraph delete_vertices(const Graph& g, VertexSet s);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

// Number of connected components of g. The empty graph has none.
int component_count(const Graph& g);
// Components of the subgraph induced by `alive`, without building it.
int component_count(std::span<const VertexSet> rows, VertexSet alive);
VertexSet component_of(std::span<const VertexSet> rows, VertexSet alive,
                       Vertex start);
bool is_connected(const Graph& g);

// perm[v] is the new id of vertex v.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // sorted descending

// Length of a shortest cycle, 0 for forests.
int girth(const Graph& g);

namespace graphs {

Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
// Circular ladder C_k x K_2; prism(3) is the triangular prism.
Graph prism(int k);
// Kneser graph K(5,2): 2-subsets of {1..5}, adjacent iff disjoint.
Graph petersen();

}  // namespace graphs

inline Graph petersen() { return graphs::petersen(); }

}  // namespace tc
