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

#include "tc/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "tc/error.hpp"

namespace tc {
namespace {

using Word = std::uint64_t;
using Rows = std::array<Word, kMaxVertices>;

constexpr int kToughnessCap = 32;
constexpr int kSubsetDpCap = 20;

Word bit(int v) { return Word{1} << v; }

Rows rows_of(const Graph& g) {
  Rows rows{};
  for (Vertex v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
  return rows;
}

Word reach(const Rows& adj, Word alive, int start) {
  Word seen = bit(start);
  Word frontier = seen;
  while (frontier != 0) {
    Word next = 0;
    for (Word f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int components(const Rows& adj, Word alive) {
  int count = 0;
  while (alive != 0) {
    alive &= ~reach(adj, alive, std::countr_zero(alive));
    ++count;
  }
  return count;
}

// Vertices of `alive` surviving repeated removal of degree < 2.
Word two_core(const Rows& adj, Word alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Word a = alive; a != 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      if (std::popcount(adj[static_cast<std::size_t>(v)] & alive) < 2) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

bool is_complete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

template <typename Visit>
void for_each_subset_of_size(int n, int k, Visit&& visit) {
  if (k == 0) {
    visit(Word{0});
    return;
  }
  const Word limit = bit(n);
  Word s = bit(k) - 1;
  while (s < limit) {
    visit(s);
    const Word c = s & (~s + 1);
    const Word r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

class CycleSearch {
 public:
  CycleSearch(const Rows& adj, int start, Word allowed, int exact_length)
      : adj_(adj), start_(start), allowed_(allowed), exact_(exact_length) {}

  // Longest cycle through `start` inside `allowed`; stops at `stop_at`.
  int longest(int floor, int stop_at, std::vector<Vertex>& out) {
    best_ = floor;
    stop_at_ = stop_at;
    found_ = false;
    path_[0] = start_;
    dfs_longest(start_, 1, bit(start_));
    if (found_) out.assign(best_seq_.begin(), best_seq_.begin() + best_);
    return found_ ? best_ : 0;
  }

  // Every cycle of length exact_ whose least vertex is start_, one
  // orientation each.
  template <typename Emit>
  void enumerate(Emit&& emit) {
    path_[0] = start_;
    dfs_exact(start_, 1, bit(start_), emit);
  }

 private:
  void dfs_longest(int end, int len, Word visited) {
    if (len >= 3 && len > best_ && (adj_[static_cast<std::size_t>(end)] & bit(start_)) != 0) {
      best_ = len;
      found_ = true;
      std::copy(path_.begin(), path_.begin() + len, best_seq_.begin());
      if (best_ >= stop_at_) {
        done_ = true;
        return;
      }
    }
    const Word open = allowed_ & ~visited;
    const Word avail = adj_[static_cast<std::size_t>(end)] & open;
    if (avail == 0) return;
    const Word region = reach(adj_, open | bit(end), end) & ~bit(end);
    if (len + std::popcount(region) <= best_) return;
    if ((adj_[static_cast<std::size_t>(start_)] & region) == 0) return;
    for (Word a = avail; a != 0; a &= a - 1) {
      const int next = std::countr_zero(a);
      path_[static_cast<std::size_t>(len)] = next;
      dfs_longest(next, len + 1, visited | bit(next));
      if (done_) return;
    }
  }

  template <typename Emit>
  void dfs_exact(int end, int len, Word visited, Emit& emit) {
    if (stopped_) return;
    if (len == exact_) {
      if ((adj_[static_cast<std::size_t>(end)] & bit(start_)) != 0 && path_[1] < path_[static_cast<std::size_t>(len - 1)]) {
        if (!emit(std::vector<Vertex>(path_.begin(), path_.begin() + len))) stopped_ = true;
      }
      return;
    }
    const Word open = allowed_ & ~visited;
    const Word avail = adj_[static_cast<std::size_t>(end)] & open;
    if (avail == 0) return;
    const Word region = reach(adj_, open | bit(end), end) & ~bit(end);
    if (len + std::popcount(region) < exact_) return;
    if ((adj_[static_cast<std::size_t>(start_)] & region) == 0) return;
    for (Word a = avail; a != 0; a &= a - 1) {
      const int next = std::countr_zero(a);
      path_[static_cast<std::size_t>(len)] = next;
      dfs_exact(next, len + 1, visited | bit(next), emit);
      if (stopped_) return;
    }
  }

  const Rows& adj_;
  int start_;
  Word allowed_;
  int exact_;
  int best_ = 0;
  int stop_at_ = 0;
  bool found_ = false;
  bool done_ = false;
  bool stopped_ = false;
  std::array<Vertex, kMaxVertices> path_{};
  std::array<Vertex, kMaxVertices> best_seq_{};
};

class PathSearch {
 public:
  PathSearch(const Rows& adj, Word within) : adj_(adj), within_(within) {}

  // Longest path in G[within]; returns its vertex sequence.
  std::vector<Vertex> longest() {
    best_ = -1;
    for (Word w = within_; w != 0; w &= w - 1) {
      const int s = std::countr_zero(w);
      const int comp = std::popcount(reach(adj_, within_, s));
      if (comp - 1 <= best_) continue;
      path_[0] = s;
      cap_ = comp - 1;
      done_ = false;
      dfs_longest(s, 1, bit(s));
    }
    return {best_seq_.begin(), best_seq_.begin() + best_ + 1};
  }

  template <typename Emit>
  void enumerate(int length, Emit&& emit) {
    exact_ = length;
    for (Word w = within_; w != 0 && !stopped_; w &= w - 1) {
      const int s = std::countr_zero(w);
      path_[0] = s;
      dfs_exact(s, 1, bit(s), emit);
    }
  }

  // Longest path from `from` to `to` inside `within`.
  int longest_between(int from, int to) {
    best_ = -1;
    target_ = to;
    path_[0] = from;
    dfs_between(from, 1, bit(from));
    return best_;
  }

 private:
  void dfs_longest(int end, int len, Word visited) {
    if (len - 1 > best_) {
      best_ = len - 1;
      std::copy(path_.begin(), path_.begin() + len, best_seq_.begin());
      if (best_ >= cap_) {
        done_ = true;
        return;
      }
    }
    const Word open = within_ & ~visited;
    const Word avail = adj_[static_cast<std::size_t>(end)] & open;
    if (avail == 0) return;
    const Word region = reach(adj_, open | bit(end), end) & ~bit(end);
    if (len - 1 + std::popcount(region) <= best_) return;
    for (Word a = avail; a != 0; a &= a - 1) {
      const int next = std::countr_zero(a);
      path_[static_cast<std::size_t>(len)] = next;
      dfs_longest(next, len + 1, visited | bit(next));
      if (done_) return;
    }
  }

  template <typename Emit>
  void dfs_exact(int end, int len, Word visited, Emit& emit) {
    if (len - 1 == exact_) {
      if (exact_ == 0 || path_[0] < end) {
        if (!emit(std::vector<Vertex>(path_.begin(), path_.begin() + len))) stopped_ = true;
      }
      return;
    }
    const Word open = within_ & ~visited;
    const Word avail = adj_[static_cast<std::size_t>(end)] & open;
    if (avail == 0) return;
    const Word region = reach(adj_, open | bit(end), end) & ~bit(end);
    if (len - 1 + std::popcount(region) < exact_) return;
    for (Word a = avail; a != 0; a &= a - 1) {
      const int next = std::countr_zero(a);
      path_[static_cast<std::size_t>(len)] = next;
      dfs_exact(next, len + 1, visited | bit(next), emit);
      if (stopped_) return;
    }
  }

  void dfs_between(int end, int len, Word visited) {
    if (end == target_) {
      best_ = std::max(best_, len - 1);
      return;
    }
    const Word open = within_ & ~visited;
    const Word avail = adj_[static_cast<std::size_t>(end)] & open;
    if (avail == 0) return;
    const Word region = reach(adj_, open | bit(end), end) & ~bit(end);
    if ((region & bit(target_)) == 0) return;
    if (len - 1 + std::popcount(region) <= best_) return;
    for (Word a = avail; a != 0; a &= a - 1) {
      const int next = std::countr_zero(a);
      dfs_between(next, len + 1, visited | bit(next));
    }
  }

  const Rows& adj_;
  Word within_;
  int best_ = -1;
  int cap_ = 0;
  int exact_ = 0;
  int target_ = -1;
  bool done_ = false;
  bool stopped_ = false;
  std::array<Vertex, kMaxVertices> path_{};
  std::array<Vertex, kMaxVertices> best_seq_{};
};

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  const int nodes = 2 * n;
  // in(v) = 2v, out(v) = 2v + 1
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    for (Vertex u : g.neighbors(v)) at(2 * v + 1, 2 * u) = 1;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(nodes));
  std::vector<int> queue;
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[static_cast<std::size_t>(source)] = source;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size() && prev[static_cast<std::size_t>(sink)] < 0; ++head) {
      const int a = queue[head];
      for (int b = 0; b < nodes; ++b) {
        if (prev[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          prev[static_cast<std::size_t>(b)] = a;
          queue.push_back(b);
        }
      }
    }
    if (prev[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = prev[static_cast<std::size_t>(b)]) {
      const int a = prev[static_cast<std::size_t>(b)];
      --at(a, b);
      ++at(b, a);
    }
    ++flow;
  }
  return flow;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::domain, "connectivity of the empty graph");
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  int best = min_degree(g);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best));
    }
  }
  return best;
}

Toughness toughness(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::domain, "toughness of the empty graph");
  if (n > kToughnessCap) {
    fail(ErrorCode::domain, "toughness is limited to order <= " + std::to_string(kToughnessCap));
  }
  if (is_complete(g)) return {ExactRational::infinity(), std::nullopt, 0};
  const Rows adj = rows_of(g);
  const Word all = bit(n) - 1;
  const int parts = components(adj, all);
  if (parts > 1) return {ExactRational(0, 1), VertexSet{}, parts};

  const int kappa = connectivity(g);
  Toughness best{ExactRational::infinity(), std::nullopt, 0};
  for (int k = kappa; k <= n - 2; ++k) {
    if (best.cut && ExactRational(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n - k)) >= best.value) break;
    for_each_subset_of_size(n, k, [&](Word s) {
      const int c = components(adj, all & ~s);
      if (c < 2) return;
      const ExactRational r(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(c));
      if (!best.cut || r < best.value) {
        best = {r, VertexSet::from_bits(s), c};
      }
    });
  }
  return best;
}

Toughness toughness_by_enumeration(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::domain, "toughness of the empty graph");
  if (n > kToughnessCap) {
    fail(ErrorCode::domain, "toughness is limited to order <= " + std::to_string(kToughnessCap));
  }
  const Rows adj = rows_of(g);
  const Word all = bit(n) - 1;
  Toughness best{ExactRational::infinity(), std::nullopt, 0};
  for (Word s = 0; s <= all; ++s) {
    const int c = components(adj, all & ~s);
    if (c < 2) continue;
    const ExactRational r(static_cast<std::uint64_t>(std::popcount(s)), static_cast<std::uint64_t>(c));
    if (!best.cut || r < best.value) best = {r, VertexSet::from_bits(s), c};
  }
  return best;
}

bool is_t_tough(const Graph& g, const ExactRational& t) {
  if (t.is_infinite()) fail(ErrorCode::invalid_argument, "t must be finite");
  return toughness(g).value >= t;
}

Circumference circumference(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::domain, "circumference of the empty graph");
  const Rows adj = rows_of(g);
  Word allowed = two_core(adj, bit(n) - 1);

  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  int upper = 0;
  for (Word a = allowed; a != 0;) {
    const Word comp = reach(adj, allowed, std::countr_zero(a));
    upper = std::max(upper, std::popcount(comp));
    a &= ~comp;
  }

  int best = 0;
  std::vector<Vertex> best_seq;
  for (Vertex s : order) {
    if (best >= upper) break;
    if ((allowed & bit(s)) == 0) continue;
    const Word comp = reach(adj, allowed, s);
    if (std::popcount(comp) > best) {
      CycleSearch search(adj, s, comp, 0);
      std::vector<Vertex> seq;
      const int len = search.longest(best, std::popcount(comp), seq);
      if (len > best) {
        best = len;
        best_seq = std::move(seq);
      }
    }
    allowed = two_core(adj, allowed & ~bit(s));
  }

  if (best >= 3) return {best, Cycle(std::move(best_seq)).canonical()};
  const auto edges = g.edges();
  if (!edges.empty()) return {2, Cycle({edges.front().first, edges.front().second})};
  return {1, Cycle({0})};
}

int circumference_by_subset_dp(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(ErrorCode::domain, "circumference of the empty graph");
  if (n > kSubsetDpCap) {
    fail(ErrorCode::domain, "subset DP is limited to order <= " + std::to_string(kSubsetDpCap));
  }
  const Rows adj = rows_of(g);
  int best = g.size() > 0 ? 2 : 1;
  // ends[mask] = endpoints v of paths from the least vertex of mask through
  // exactly mask.
  std::vector<Word> ends(std::size_t{1} << n, 0);
  for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = bit(s);
  for (Word mask = 1; mask < bit(n); ++mask) {
    const Word e = ends[mask];
    if (e == 0) continue;
    const int s = std::countr_zero(mask);
    const int size = std::popcount(mask);
    if (size >= 3 && (e & adj[static_cast<std::size_t>(s)]) != 0) best = std::max(best, size);
    for (Word f = e; f != 0; f &= f - 1) {
      const int v = std::countr_zero(f);
      // Extend only by vertices above s so s stays the least vertex.
      Word next = adj[static_cast<std::size_t>(v)] & ~mask & ~(bit(s + 1) - 1);
      for (; next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        ends[mask | bit(w)] |= bit(w);
      }
    }
  }
  return best;
}

bool is_hamiltonian(const Graph& g) {
  if (g.order() < 3) fail(ErrorCode::domain, "hamiltonicity needs n >= 3");
  return circumference(g).length == g.order();
}

bool is_dominating_cycle(const Graph& g, const Cycle& c) {
  require_valid_cycle(g, c);
  const VertexSet rest = g.vertices() - c.vertex_set();
  for (Vertex v : rest) {
    if (g.neighbors(v).intersects(rest)) return false;
  }
  return true;
}

CycleList enumerate_longest_cycles(const Graph& g, int cap) {
  if (cap < 1) fail(ErrorCode::invalid_argument, "cap must be positive");
  const Circumference c = circumference(g);
  CycleList out;
  if (c.length <= 2) {
    if (c.length == 2) {
      for (auto [u, v] : g.edges()) out.cycles.emplace_back(std::vector<Vertex>{u, v});
    } else {
      for (Vertex v = 0; v < g.order(); ++v) out.cycles.emplace_back(std::vector<Vertex>{v});
    }
    if (static_cast<int>(out.cycles.size()) > cap) {
      out.cycles.resize(static_cast<std::size_t>(cap));
      out.truncated = true;
    }
    return out;
  }
  const Rows adj = rows_of(g);
  const int n = g.order();
  const Word core = two_core(adj, bit(n) - 1);
  for (Vertex s = 0; s < n && !out.truncated; ++s) {
    if ((core & bit(s)) == 0) continue;
    const Word allowed = core & ~(bit(s) - 1);
    CycleSearch search(adj, s, reach(adj, allowed, s), c.length);
    search.enumerate([&](std::vector<Vertex> seq) {
      if (static_cast<int>(out.cycles.size()) >= cap) {
        out.truncated = true;
        return false;
      }
      out.cycles.emplace_back(std::move(seq));
      return true;
    });
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [](const Cycle& a, const Cycle& b) {
    return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(),
                                        b.vertices().begin(), b.vertices().end());
  });
  return out;
}

std::optional<Path> longest_path(const Graph& g, VertexSet within) {
  if (within.empty()) return std::nullopt;
  const Rows adj = rows_of(g);
  PathSearch search(adj, within.bits());
  return Path(search.longest());
}

PathList enumerate_longest_paths(const Graph& g, VertexSet within, int cap) {
  if (cap < 1) fail(ErrorCode::invalid_argument, "cap must be positive");
  PathList out;
  const auto longest = longest_path(g, within);
  if (!longest) return out;
  const Rows adj = rows_of(g);
  PathSearch search(adj, within.bits());
  search.enumerate(longest->length(), [&](std::vector<Vertex> seq) {
    if (static_cast<int>(out.paths.size()) >= cap) {
      out.truncated = true;
      return false;
    }
    out.paths.emplace_back(std::move(seq));
    return true;
  });
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& a, const Path& b) {
    return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(),
                                        b.vertices().begin(), b.vertices().end());
  });
  return out;
}

std::optional<Path> longest_path_outside(const Graph& g, const Cycle& c) {
  require_valid_cycle(g, c);
  return longest_path(g, g.vertices() - c.vertex_set());
}

int longest_path_between(const Graph& g, Vertex u, Vertex v) {
  if (u == v) fail(ErrorCode::invalid_argument, "endpoints must differ");
  const Rows adj = rows_of(g);
  PathSearch search(adj, g.vertices().bits());
  return search.longest_between(u, v);
}

InvariantReport compute_invariants(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  r.delta = min_degree(g);
  r.kappa = connectivity(g);
  const Circumference c = circumference(g);
  r.circumference = c.length;
  r.circumference_witness = c.witness;
  const Toughness t = toughness(g);
  r.toughness = t.value;
  r.toughness_witness = t.cut;
  r.hamiltonian = r.n >= 3 && c.length == r.n;
  return r;
}

}  // namespace tc
