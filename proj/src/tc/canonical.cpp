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

#include "tc/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

#include "tc/error.hpp"

namespace tc {
namespace detail {
namespace {

using Word = std::uint64_t;

struct Partition {
  int cells = 0;
  std::array<Word, kMaxVertices> cell{};
};

// Splitter queue. Each refinement enqueues at most the initial cells plus two
// pieces per split, and there are fewer than n splits.
struct SplitQueue {
  std::array<Word, 4 * kMaxVertices> items{};
  int head = 0;
  int tail = 0;
  void push(Word w) { items[static_cast<std::size_t>(tail++)] = w; }
  bool empty() const { return head == tail; }
  Word pop() { return items[static_cast<std::size_t>(head++)]; }
};

void refine(const Word* adj, int n, Partition& p, SplitQueue& queue) {
  std::array<Word, kMaxVertices + 1> by_count{};
  while (!queue.empty()) {
    const Word splitter = queue.pop();
    for (int i = 0; i < p.cells; ++i) {
      const Word cell = p.cell[static_cast<std::size_t>(i)];
      if (std::popcount(cell) == 1) continue;
      int lo = n + 1;
      int hi = -1;
      for (Word rest = cell; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int c = std::popcount(adj[v] & splitter);
        by_count[static_cast<std::size_t>(c)] |= Word{1} << v;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) {
        by_count[static_cast<std::size_t>(lo)] = 0;
        continue;
      }
      int pieces = 0;
      std::array<Word, kMaxVertices> split{};
      for (int c = lo; c <= hi; ++c) {
        if (by_count[static_cast<std::size_t>(c)] != 0) {
          split[static_cast<std::size_t>(pieces++)] = by_count[static_cast<std::size_t>(c)];
          by_count[static_cast<std::size_t>(c)] = 0;
        }
      }
      // Shift later cells right to make room.
      for (int j = p.cells - 1; j > i; --j) {
        p.cell[static_cast<std::size_t>(j + pieces - 1)] = p.cell[static_cast<std::size_t>(j)];
      }
      for (int k = 0; k < pieces; ++k) {
        p.cell[static_cast<std::size_t>(i + k)] = split[static_cast<std::size_t>(k)];
        queue.push(split[static_cast<std::size_t>(k)]);
      }
      p.cells += pieces - 1;
      i += pieces - 1;
    }
  }
}

class Search {
 public:
  Search(const Word* adj, int n) : adj_(adj), n_(n) {}

  void run() {
    Partition root;
    root.cells = 1;
    root.cell[0] = n_ >= 64 ? ~Word{0} : (Word{1} << n_) - 1;
    SplitQueue queue;
    queue.push(root.cell[0]);
    refine(adj_, n_, root, queue);
    visit(root, 0);
  }

  const int* best_label() const { return best_label_.data(); }
  const Word* best_rows() const { return best_cert_.data(); }

 private:
  using Perm = std::array<std::uint8_t, kMaxVertices>;

  void visit(const Partition& p, int depth) {
    if (p.cells == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::popcount(p.cell[static_cast<std::size_t>(target)]) == 1) ++target;
    const Word cell = p.cell[static_cast<std::size_t>(target)];
    Word explored = 0;
    for (Word rest = cell; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored != 0 && equivalent_to_explored(v, explored, depth)) continue;
      explored |= Word{1} << v;

      Partition child = p;
      for (int j = child.cells - 1; j > target; --j) {
        child.cell[static_cast<std::size_t>(j + 1)] = child.cell[static_cast<std::size_t>(j)];
      }
      child.cell[static_cast<std::size_t>(target)] = Word{1} << v;
      child.cell[static_cast<std::size_t>(target + 1)] = cell & ~(Word{1} << v);
      ++child.cells;
      SplitQueue queue;
      queue.push(Word{1} << v);
      refine(adj_, n_, child, queue);
      path_[static_cast<std::size_t>(depth)] = v;
      visit(child, depth + 1);
    }
  }

  // Orbits, under the automorphisms found so far that fix the current path
  // pointwise, decide whether v's subtree repeats an explored one.
  bool equivalent_to_explored(int v, Word explored, int depth) {
    std::array<std::uint8_t, kMaxVertices> parent{};
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const Perm& gamma : autos_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) {
        const int u = path_[static_cast<std::size_t>(d)];
        fixes = gamma[static_cast<std::size_t>(u)] == u;
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (Word rest = explored; rest != 0; rest &= rest - 1) {
      if (find(std::countr_zero(rest)) == root) return true;
    }
    return false;
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxVertices> label{};
    std::array<Word, kMaxVertices> cert{};
    for (int i = 0; i < n_; ++i) {
      label[static_cast<std::size_t>(std::countr_zero(p.cell[static_cast<std::size_t>(i)]))] = i;
    }
    for (int v = 0; v < n_; ++v) {
      Word row = 0;
      for (Word rest = adj_[v]; rest != 0; rest &= rest - 1) {
        row |= Word{1} << label[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      cert[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = row;
    }

    if (!have_best_) {
      have_best_ = true;
      best_cert_ = cert;
      best_label_ = label;
      first_cert_ = cert;
      first_label_ = label;
      return;
    }
    const int cmp = compare(cert, best_cert_);
    if (cmp > 0) {
      best_cert_ = cert;
      best_label_ = label;
    } else if (cmp == 0) {
      record_automorphism(label, best_label_);
    }
    if (compare(cert, first_cert_) == 0) record_automorphism(label, first_label_);
  }

  int compare(const std::array<Word, kMaxVertices>& a,
              const std::array<Word, kMaxVertices>& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
        return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
      }
    }
    return 0;
  }

  // Two labelings with equal certificates differ by an automorphism.
  void record_automorphism(const std::array<int, kMaxVertices>& label,
                           const std::array<int, kMaxVertices>& other) {
    std::array<int, kMaxVertices> inverse{};
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(other[static_cast<std::size_t>(v)])] = v;
    Perm gamma{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      const int image = inverse[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
      gamma[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(image);
      identity = identity && image == v;
    }
    if (!identity) autos_.push_back(gamma);
  }

  const Word* adj_;
  int n_;
  bool have_best_ = false;
  std::array<Word, kMaxVertices> best_cert_{};
  std::array<int, kMaxVertices> best_label_{};
  std::array<Word, kMaxVertices> first_cert_{};
  std::array<int, kMaxVertices> first_label_{};
  std::array<int, kMaxVertices> path_{};
  std::vector<Perm> autos_;
};

}  // namespace

void canonical_label_rows(const std::uint64_t* rows, int n, int* label,
                          std::uint64_t* canon_rows) {
  if (n == 0) return;
  Search search(rows, n);
  search.run();
  std::memcpy(label, search.best_label(), sizeof(int) * static_cast<std::size_t>(n));
  std::memcpy(canon_rows, search.best_rows(), sizeof(Word) * static_cast<std::size_t>(n));
}

std::uint64_t pack_upper_triangle(const std::uint64_t* rows, int n) {
  std::uint64_t key = 0;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if ((rows[u] >> v) & 1U) key |= std::uint64_t{1} << bit;
    }
  }
  return key;
}

}  // namespace detail

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (Vertex v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
  std::array<int, kMaxVertices> label{};
  std::array<std::uint64_t, kMaxVertices> canon{};
  detail::canonical_label_rows(rows.data(), n, label.data(), canon.data());
  CanonicalLabeling out;
  out.label.assign(label.begin(), label.begin() + n);
  std::vector<VertexSet> form_rows;
  for (int i = 0; i < n; ++i) form_rows.push_back(VertexSet::from_bits(canon[static_cast<std::size_t>(i)]));
  out.form = Graph::from_rows(form_rows);
  return out;
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismCap || h.order() > kIsomorphismCap) {
    fail(ErrorCode::domain, "isomorphism testing is limited to order <= " +
                                std::to_string(kIsomorphismCap));
  }
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace tc
