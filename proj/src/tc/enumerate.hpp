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

#include <cstdint>
#include <vector>

#include "tc/graph.hpp"

namespace tc {

inline constexpr int kEnumerationMaxOrder = 10;

struct EnumerationOptions {
  bool connected_only = true;
  int max_degree = -1;  // hereditary filter, -1 for none
};

// Canonical augmentation: a child G' = parent + v is kept when v is, up to
// automorphism, the vertex a canonical deletion would remove (among the
// non-cut vertices of largest degree and neighbour-degree sum). Every child
// is returned in canonical form, sorted by packed adjacency.
std::vector<Graph> canonical_children(const Graph& parent, const EnumerationOptions& opts);

// One canonical representative per isomorphism class on n vertices,
// 1 <= n <= 10. Levels are built in parallel over parents; the result does
// not depend on `workers`.
std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& opts, int workers = 1);
std::vector<Graph> enumerate_connected_graphs(int n, int workers = 1);

// Packed upper triangle of an order <= 11 graph, as stored by the enumerator.
std::uint64_t packed_key(const Graph& g);

}  // namespace tc
