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

#include "tc/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tc/error.hpp"

namespace tc {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    fail(ErrorCode::too_many_vertices,
         "vertex count " + std::to_string(n) + " outside [0, " +
             std::to_string(kMaxVertices) + "]");
  }
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!rows[v].subset_of(all) || rows[v].contains(v)) {
      fail(ErrorCode::invalid_argument, "adjacency row out of range or looped");
    }
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) {
        fail(ErrorCode::invalid_argument, "adjacency rows are not symmetric");
      }
    }
    g.adj_[v] = rows[v];
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    fail(ErrorCode::invalid_argument, "edge endpoint out of range");
  }
  if (u == v) fail(ErrorCode::invalid_argument, "self-loops are not allowed");
  if (adj_[u].contains(v)) {
    fail(ErrorCode::invalid_argument, "multi-edges are not allowed");
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  InducedSubgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()));
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex u : g.neighbors(sub.to_parent[i]) & keep) {
      const Vertex j = sub.from_parent[u];
      if (static_cast<Vertex>(i) < j) sub.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return sub;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    fail(ErrorCode::invalid_argument, "deleted set is not a subset of V(G)");
  }
  return induced_subgraph(g, g.vertices() - s);
}

VertexSet component_of(std::span<const VertexSet> rows, VertexSet alive,
                       Vertex start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= rows[v];
    next = (next & alive) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int component_count(std::span<const VertexSet> rows, VertexSet alive) {
  int count = 0;
  while (!alive.empty()) {
    alive -= component_of(rows, alive, alive.first());
    ++count;
  }
  return count;
}

int component_count(const Graph& g) {
  return component_count(g.rows(), g.vertices());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    fail(ErrorCode::invalid_argument, "permutation size mismatch");
  }
  VertexSet image;
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || image.contains(v)) {
      fail(ErrorCode::invalid_argument, "not a permutation");
    }
    image.insert(v);
  }
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq;
  for (Vertex v = 0; v < g.order(); ++v) seq.push_back(g.degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

int girth(const Graph& g) {
  // BFS from every vertex; the first non-tree edge closes a shortest cycle
  // through the root's BFS tree.
  int best = 0;
  const int n = g.order();
  for (Vertex root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::invalid_argument, "a cycle graph needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph prism(int k) {
  Graph g(2 * k);
  for (Vertex i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
  Graph g(static_cast<int>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) {
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return g;
}

}  // namespace graphs
}  // namespace tc
