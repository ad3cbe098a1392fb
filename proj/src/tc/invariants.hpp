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

#include <optional>
#include <vector>

#include "tc/cycle.hpp"
#include "tc/graph.hpp"
#include "tc/rational.hpp"

namespace tc {

// Vertex connectivity via Menger: the minimum, over non-adjacent pairs, of
// the number of internally vertex-disjoint paths (unit-capacity max flow on
// the split graph). K_n gives n-1; a disconnected graph gives 0.
int connectivity(const Graph& g);
// Maximum number of internally disjoint s-t paths, s and t non-adjacent,
// stopping early once `limit` paths are found.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

struct Toughness {
  ExactRational value;
  std::optional<VertexSet> cut;  // a minimizing S; absent for complete graphs
  int components = 0;            // s(G \ S) for the witness
};

// min |S| / s(G\S) over S with s(G\S) > 1. Cuts are scanned by increasing
// size starting at kappa; the scan stops once k / (n - k) reaches the best
// ratio, which lower-bounds every cut of size >= k.
Toughness toughness(const Graph& g);
// Plain definition: every subset of V(G). Used to re-verify reported
// violations; exponential in n with no pruning.
Toughness toughness_by_enumeration(const Graph& g);
bool is_t_tough(const Graph& g, const ExactRational& t);

struct Circumference {
  int length = 0;
  Cycle witness;
};

// Branch-and-bound DFS for a longest cycle. Start vertices by decreasing
// degree (ties by id), neighbours by ascending id, search restricted to the
// 2-core minus earlier start vertices, pruned by the size of the region still
// reachable from the path end. An acyclic graph with an edge has
// circumference 2 (its least edge); an edgeless graph has 1 (vertex 0).
Circumference circumference(const Graph& g);
// Held-Karp style DP over vertex subsets; order <= 20.
int circumference_by_subset_dp(const Graph& g);

bool is_hamiltonian(const Graph& g);
bool is_dominating_cycle(const Graph& g, const Cycle& c);

struct CycleList {
  std::vector<Cycle> cycles;  // canonical rotation/reflection, sorted
  bool truncated = false;
};
// Every longest cycle up to rotation and reflection, at most `cap` of them.
CycleList enumerate_longest_cycles(const Graph& g, int cap);

struct PathList {
  std::vector<Path> paths;  // front < back (or a single vertex), sorted
  bool truncated = false;
};
// Longest paths of G[within] up to reversal, in g's labels.
std::optional<Path> longest_path(const Graph& g, VertexSet within);
PathList enumerate_longest_paths(const Graph& g, VertexSet within, int cap);
// Longest path of G \ C; absent when C covers V(G).
std::optional<Path> longest_path_outside(const Graph& g, const Cycle& c);
// Length of a longest u-v path in g, -1 if none (u != v).
int longest_path_between(const Graph& g, Vertex u, Vertex v);

struct InvariantReport {
  int n = 0;
  int delta = 0;
  int kappa = 0;
  int circumference = 0;
  Cycle circumference_witness;
  ExactRational toughness;
  std::optional<VertexSet> toughness_witness;
  bool hamiltonian = false;  // false for n < 3
};

InvariantReport compute_invariants(const Graph& g);

}  // namespace tc
