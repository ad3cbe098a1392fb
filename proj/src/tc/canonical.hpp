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
#include <span>
#include <vector>

#include "tc/graph.hpp"

namespace tc {

// Largest order accepted by is_isomorphic.
inline constexpr int kIsomorphismCap = 12;

// Canonical labeling by individualization/refinement: equitable partition
// refinement, branching on the first non-singleton cell, and the leaf with
// the lexicographically greatest relabeled adjacency matrix as the canonical
// form. Subtrees equivalent under automorphisms found at equal leaves are
// pruned.
struct CanonicalLabeling {
  std::vector<Vertex> label;  // label[v] = canonical id of v
  Graph form;                 // relabel(g, label)
};

CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);

// Order-<=12 isomorphism test: edge count and degree sequence screening,
// then canonical form comparison. Fails with domain above the cap.
bool is_isomorphic(const Graph& g, const Graph& h);

namespace detail {

// Allocation-free entry point for hot loops. rows[0..n) are adjacency masks.
// Writes label[v] and the canonical rows. n <= 64.
void canonical_label_rows(const std::uint64_t* rows, int n, int* label,
                          std::uint64_t* canon_rows);

// Upper triangle of an order-<=11 canonical adjacency matrix packed into a
// single word (55 bits).
std::uint64_t pack_upper_triangle(const std::uint64_t* rows, int n);

}  // namespace detail
}  // namespace tc
