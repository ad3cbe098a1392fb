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
#include <span>
#include <vector>

#include "tc/graph.hpp"

namespace tc {

// An oriented cycle stored as its vertex sequence. Sequences of one vertex
// and of two adjacent vertices are the degenerate cycles of length 1 and 2;
// every other cycle has length equal to its vertex count.
class Cycle {
 public:
  Cycle() = default;
  // Fails with invalid_cycle if the sequence is empty or repeats a vertex.
  explicit Cycle(std::vector<Vertex> vertices);

  int length() const { return static_cast<int>(seq_.size()); }
  bool degenerate() const { return seq_.size() < 3; }
  std::span<const Vertex> vertices() const { return seq_; }
  VertexSet vertex_set() const { return set_; }
  bool contains(Vertex v) const { return set_.contains(v); }

  // Index of v in the stored sequence, -1 when v is not on the cycle.
  int position(Vertex v) const;
  Vertex at(int index) const;  // index taken modulo the length

  // x^{+h} for h > 0 and x^{-|h|} for h < 0 along the stored orientation.
  Vertex step(Vertex x, int h) const;
  Vertex succ(Vertex x) const { return step(x, 1); }
  Vertex pred(Vertex x) const { return step(x, -1); }
  // Number of edges on the oriented arc from `from` to `to`.
  int arc_length(Vertex from, Vertex to) const;
  // Vertices of the oriented arc from `from` to `to`, both ends included.
  std::vector<Vertex> arc(Vertex from, Vertex to) const;

  Cycle reversed() const;
  // Least vertex first, then the direction whose second vertex is smaller.
  Cycle canonical() const;

  bool operator==(const Cycle& o) const { return seq_ == o.seq_; }

 private:
  std::vector<Vertex> seq_;
  VertexSet set_;
};

// Consecutive vertices adjacent (and last to first for length >= 3).
bool is_valid_cycle(const Graph& g, const Cycle& c);
void require_valid_cycle(const Graph& g, const Cycle& c);

// Same object on a cycle of length >= 3; fails with domain on degenerate
// cycles and invalid_argument when x is not on c.
Vertex cycle_step(const Cycle& c, Vertex x, int h);

// An oriented path; |P| is its edge count, so one vertex has length 0.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices);

  int length() const { return static_cast<int>(seq_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(seq_.size()); }
  std::span<const Vertex> vertices() const { return seq_; }
  VertexSet vertex_set() const { return set_; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  Path reversed() const;

  bool operator==(const Path& o) const { return seq_ == o.seq_; }

 private:
  std::vector<Vertex> seq_;
  VertexSet set_;
};

bool is_valid_path(const Graph& g, const Path& p);

// A shortest cycle: over edges uv in increasing order, a shortest u-v path
// avoiding uv closes a cycle; the first minimum wins. Absent for forests.
std::optional<Cycle> shortest_cycle(const Graph& g);

}  // namespace tc
