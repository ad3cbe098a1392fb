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

// Brute-force reference implementations. They share nothing with the
// library beyond Graph::order() and Graph::adjacent(), and favour obvious
// correctness over speed.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "tc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const tc::Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m[u][v] = u != v && g.adjacent(u, v);
  return m;
}

// Components of the graph restricted to vertices with alive[v].
inline int components(const Matrix& m, const std::vector<bool>& alive) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (alive[v] && !seen[v] && m[u][v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

struct Fraction {
  bool infinite = true;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// min |S| / s(G - S) over every S leaving at least two components.
inline Fraction toughness(const tc::Graph& g) {
  const Matrix m = matrix(g);
  const int n = g.order();
  Fraction best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> alive(n);
    int size = 0;
    for (int v = 0; v < n; ++v) {
      alive[v] = ((mask >> v) & 1u) == 0;
      size += alive[v] ? 0 : 1;
    }
    const int c = components(m, alive);
    if (c < 2) continue;
    if (best.infinite || static_cast<std::int64_t>(size) * best.den < best.num * c) {
      const std::int64_t d = std::gcd<std::int64_t>(size, c);
      best = {false, size / d, c / d};
    }
  }
  return best;
}

// Fewest vertices whose removal disconnects g; n - 1 for complete graphs.
inline int connectivity(const tc::Graph& g) {
  const Matrix m = matrix(g);
  const int n = g.order();
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best || size > n - 2) continue;
    std::vector<bool> alive(n);
    for (int v = 0; v < n; ++v) alive[v] = ((mask >> v) & 1u) == 0;
    if (components(m, alive) >= 2) best = size;
  }
  return best;
}

namespace detail {
inline void extend_cycles(const Matrix& m, std::vector<int>& path, std::vector<bool>& used,
                          const std::function<void(const std::vector<int>&)>& emit) {
  const int n = static_cast<int>(m.size());
  const int start = path.front();
  const int end = path.back();
  if (path.size() >= 3 && m[end][start] && path[1] < path.back()) emit(path);
  for (int v = start + 1; v < n; ++v) {
    if (used[v] || !m[end][v]) continue;
    used[v] = true;
    path.push_back(v);
    extend_cycles(m, path, used, emit);
    path.pop_back();
    used[v] = false;
  }
}
}  // namespace detail

// Calls emit once per cycle of length >= 3, least vertex first.
inline void for_each_cycle(const tc::Graph& g,
                           const std::function<void(const std::vector<int>&)>& emit) {
  const Matrix m = matrix(g);
  const int n = g.order();
  std::vector<bool> used(n, false);
  for (int s = 0; s < n; ++s) {
    std::vector<int> path{s};
    used[s] = true;
    detail::extend_cycles(m, path, used, emit);
    used[s] = false;
  }
}

// Longest cycle with the degenerate convention (2 with an edge, else 1).
inline int circumference(const tc::Graph& g) {
  int best = 1;
  const Matrix m = matrix(g);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (m[u][v]) best = 2;
  for_each_cycle(g, [&](const std::vector<int>& c) { best = std::max<int>(best, c.size()); });
  return best;
}

inline int count_cycles_of_length(const tc::Graph& g, int length) {
  int count = 0;
  for_each_cycle(g, [&](const std::vector<int>& c) { count += static_cast<int>(c.size()) == length; });
  return count;
}

// Isomorphism by trying every bijection.
inline bool isomorphic(const tc::Graph& a, const tc::Graph& b) {
  if (a.order() != b.order()) return false;
  const Matrix ma = matrix(a);
  const Matrix mb = matrix(b);
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = ma[u][v] == mb[perm[u]][perm[v]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// graph6 written straight from the format description.
inline std::string graph6(const tc::Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int k = 0; k < 6; ++k) value = value * 2 + bits[i + k];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

// Longest u-v path length by exhaustive DFS, -1 when disconnected.
inline int longest_path_between(const tc::Graph& g, int u, int v) {
  const Matrix m = matrix(g);
  const int n = g.order();
  std::vector<bool> used(n, false);
  int best = -1;
  std::function<void(int, int)> go = [&](int at, int len) {
    if (at == v) {
      best = std::max(best, len);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || !m[at][w]) continue;
      used[w] = true;
      go(w, len + 1);
      used[w] = false;
    }
  };
  used[u] = true;
  go(u, 0);
  return best;
}

}  // namespace oracle
