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

#include "tc/cycle.hpp"

#include <algorithm>

#include "tc/error.hpp"

namespace tc {
namespace {

VertexSet distinct_set(const std::vector<Vertex>& seq, ErrorCode code) {
  if (seq.empty()) fail(code, "empty vertex sequence");
  VertexSet s;
  for (Vertex v : seq) {
    if (v < 0 || v >= kMaxVertices) fail(code, "vertex id out of range");
    if (s.contains(v)) fail(code, "vertex sequence repeats a vertex");
    s.insert(v);
  }
  return s;
}

}  // namespace

Cycle::Cycle(std::vector<Vertex> vertices)
    : seq_(std::move(vertices)), set_(distinct_set(seq_, ErrorCode::invalid_cycle)) {}

int Cycle::position(Vertex v) const {
  if (!contains(v)) return -1;
  return static_cast<int>(std::find(seq_.begin(), seq_.end(), v) - seq_.begin());
}

Vertex Cycle::at(int index) const {
  const int len = length();
  return seq_[static_cast<std::size_t>(((index % len) + len) % len)];
}

Vertex Cycle::step(Vertex x, int h) const {
  const int pos = position(x);
  if (pos < 0) fail(ErrorCode::invalid_argument, "vertex is not on the cycle");
  return at(pos + h % length());
}

int Cycle::arc_length(Vertex from, Vertex to) const {
  const int a = position(from);
  const int b = position(to);
  if (a < 0 || b < 0) fail(ErrorCode::invalid_argument, "vertex is not on the cycle");
  return ((b - a) % length() + length()) % length();
}

std::vector<Vertex> Cycle::arc(Vertex from, Vertex to) const {
  const int len = arc_length(from, to);
  const int start = position(from);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(len + 1));
  for (int i = 0; i <= len; ++i) out.push_back(at(start + i));
  return out;
}

Cycle Cycle::reversed() const {
  std::vector<Vertex> rev(seq_.rbegin(), seq_.rend());
  return Cycle(std::move(rev));
}

Cycle Cycle::canonical() const {
  if (seq_.size() < 3) {
    std::vector<Vertex> s = seq_;
    std::sort(s.begin(), s.end());
    return Cycle(std::move(s));
  }
  const int start = position(set_.first());
  const Vertex next = at(start + 1);
  const Vertex prev = at(start - 1);
  std::vector<Vertex> out;
  out.reserve(seq_.size());
  const int dir = next < prev ? 1 : -1;
  for (int i = 0; i < length(); ++i) out.push_back(at(start + dir * i));
  return Cycle(std::move(out));
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
  const auto seq = c.vertices();
  if (seq.empty()) return false;
  for (Vertex v : seq) {
    if (v >= g.order()) return false;
  }
  if (seq.size() == 1) return true;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  }
  return seq.size() == 2 || g.adjacent(seq.back(), seq.front());
}

void require_valid_cycle(const Graph& g, const Cycle& c) {
  if (!is_valid_cycle(g, c)) {
    fail(ErrorCode::invalid_cycle, "vertex sequence is not a cycle of the graph");
  }
}

Vertex cycle_step(const Cycle& c, Vertex x, int h) {
  if (c.degenerate()) {
    fail(ErrorCode::domain, "successor arithmetic needs a cycle of length >= 3");
  }
  return c.step(x, h);
}

Path::Path(std::vector<Vertex> vertices)
    : seq_(std::move(vertices)), set_(distinct_set(seq_, ErrorCode::invalid_path)) {}

Path Path::reversed() const {
  return Path(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
}

bool is_valid_path(const Graph& g, const Path& p) {
  const auto seq = p.vertices();
  if (seq.empty()) return false;
  for (Vertex v : seq) {
    if (v >= g.order()) return false;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  }
  return true;
}

std::optional<Cycle> shortest_cycle(const Graph& g) {
  std::optional<Cycle> best;
  const int n = g.order();
  for (const auto& [u, v] : g.edges()) {
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(v)] < 0; ++head) {
      const Vertex a = queue[head];
      for (Vertex b : g.neighbors(a)) {
        if (parent[static_cast<std::size_t>(b)] >= 0 || (a == u && b == v)) continue;
        parent[static_cast<std::size_t>(b)] = a;
        queue.push_back(b);
      }
    }
    if (parent[static_cast<std::size_t>(v)] < 0) continue;
    std::vector<Vertex> seq;
    for (Vertex w = v; w != u; w = parent[static_cast<std::size_t>(w)]) seq.push_back(w);
    seq.push_back(u);
    if (!best || static_cast<int>(seq.size()) < best->length()) best = Cycle(std::move(seq));
  }
  return best;
}

}  // namespace tc
