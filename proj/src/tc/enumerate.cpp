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

#include "tc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "tc/canonical.hpp"
#include "tc/error.hpp"

namespace tc {
namespace {

using Word = std::uint64_t;
using Rows = std::array<Word, kEnumerationMaxOrder + 1>;

Word bit(int v) { return Word{1} << v; }

bool connected_without(const Rows& rows, int n, int skip) {
  const Word alive = (bit(n) - 1) & ~bit(skip);
  if (alive == 0) return true;
  Word seen = alive & (~alive + 1);
  Word frontier = seen;
  while (frontier != 0) {
    Word next = 0;
    for (Word f = frontier; f != 0; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

std::uint64_t canonical_key(const Rows& rows, int n, Rows& canon) {
  std::array<int, kEnumerationMaxOrder + 1> label{};
  detail::canonical_label_rows(rows.data(), n, label.data(), canon.data());
  return detail::pack_upper_triangle(canon.data(), n);
}

Graph graph_of(const Rows& rows, int n) {
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = VertexSet::from_bits(rows[static_cast<std::size_t>(v)]);
  return Graph::from_rows(out);
}

template <typename F>
void parallel_for(std::size_t count, int workers, F&& body) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::uint64_t packed_key(const Graph& g) {
  if (g.order() > kEnumerationMaxOrder + 1) fail(ErrorCode::domain, "packed key needs n <= 11");
  Rows rows{};
  for (Vertex v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
  return detail::pack_upper_triangle(rows.data(), g.order());
}

std::vector<Graph> canonical_children(const Graph& parent, const EnumerationOptions& opts) {
  const int m = parent.order();
  const int n = m + 1;
  if (n > kEnumerationMaxOrder) fail(ErrorCode::domain, "enumeration is limited to n <= 10");
  Rows base{};
  for (Vertex v = 0; v < m; ++v) base[static_cast<std::size_t>(v)] = parent.neighbors(v).bits();
  const std::uint64_t parent_key = detail::pack_upper_triangle(base.data(), m);

  Word allowed = bit(m) - 1;
  if (opts.max_degree >= 0) {
    for (int v = 0; v < m; ++v) {
      if (std::popcount(base[static_cast<std::size_t>(v)]) >= opts.max_degree) allowed &= ~bit(v);
    }
  }

  std::vector<std::pair<std::uint64_t, Graph>> kept;
  Rows rows{};
  Rows canon{};
  Rows reduced{};
  Rows reduced_canon{};
  const Word limit = bit(m);
  for (Word s = opts.connected_only ? 1 : 0; s < limit; ++s) {
    if ((s & ~allowed) != 0) continue;
    if (opts.max_degree >= 0 && std::popcount(s) > opts.max_degree) continue;
    rows = base;
    rows[static_cast<std::size_t>(m)] = s;
    for (Word t = s; t != 0; t &= t - 1) rows[static_cast<std::size_t>(std::countr_zero(t))] |= bit(m);

    std::array<int, kEnumerationMaxOrder + 1> score{};
    for (int v = 0; v < n; ++v) {
      int sum = 0;
      for (Word t = rows[static_cast<std::size_t>(v)]; t != 0; t &= t - 1) {
        sum += std::popcount(rows[static_cast<std::size_t>(std::countr_zero(t))]);
      }
      score[static_cast<std::size_t>(v)] = std::popcount(rows[static_cast<std::size_t>(v)]) * 64 + sum;
    }
    auto deletable = [&](int v) { return !opts.connected_only || connected_without(rows, n, v); };
    if (!deletable(m)) continue;
    Word w_set = 0;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (score[static_cast<std::size_t>(v)] < score[static_cast<std::size_t>(m)] && v != m) continue;
      if (!deletable(v)) continue;
      const int sc = score[static_cast<std::size_t>(v)];
      if (sc > best) {
        best = sc;
        w_set = 0;
      }
      if (sc == best) w_set |= bit(v);
    }
    if ((w_set & bit(m)) == 0) continue;

    std::array<int, kEnumerationMaxOrder + 1> label{};
    detail::canonical_label_rows(rows.data(), n, label.data(), canon.data());
    if (std::popcount(w_set) > 1) {
      int w = m;
      for (Word t = w_set; t != 0; t &= t - 1) {
        const int v = std::countr_zero(t);
        if (label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(w)]) w = v;
      }
      if (w != m) {
        // Accept iff G' - w is this parent.
        int k = 0;
        std::array<int, kEnumerationMaxOrder + 1> id{};
        for (int v = 0; v < n; ++v) id[static_cast<std::size_t>(v)] = v == w ? -1 : k++;
        for (int v = 0; v < n; ++v) {
          if (v == w) continue;
          Word r = 0;
          for (Word t = rows[static_cast<std::size_t>(v)] & ~bit(w); t != 0; t &= t - 1) {
            r |= bit(id[static_cast<std::size_t>(std::countr_zero(t))]);
          }
          reduced[static_cast<std::size_t>(id[static_cast<std::size_t>(v)])] = r;
        }
        if (canonical_key(reduced, m, reduced_canon) != parent_key) continue;
      }
    }
    const std::uint64_t key = detail::pack_upper_triangle(canon.data(), n);
    kept.emplace_back(key, Graph{});
    kept.back().second = graph_of(canon, n);
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             kept.end());
  std::vector<Graph> out;
  out.reserve(kept.size());
  for (auto& [key, g] : kept) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& opts, int workers) {
  if (n < 1 || n > kEnumerationMaxOrder) {
    fail(ErrorCode::domain, "enumeration needs 1 <= n <= 10, got " + std::to_string(n));
  }
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<Graph>> parts(level.size());
    parallel_for(level.size(), workers, [&](std::size_t i) { parts[i] = canonical_children(level[i], opts); });
    std::vector<Graph> next;
    for (auto& p : parts) {
      for (auto& g : p) next.push_back(std::move(g));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> enumerate_connected_graphs(int n, int workers) {
  return enumerate_graphs(n, EnumerationOptions{}, workers);
}

}  // namespace tc
