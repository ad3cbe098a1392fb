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

#include "tc/structure.hpp"

#include <algorithm>

#include "tc/error.hpp"

namespace tc {
namespace {

bool compare(int observed, int required, Relation r) {
  switch (r) {
    case Relation::at_least: return observed >= required;
    case Relation::at_most: return observed <= required;
    case Relation::equal: return observed == required;
  }
  return false;
}

LemmaVerdict verdict(std::string lemma, int required, int observed, Relation r,
                     const Cycle& c, const Path& p, std::vector<Vertex> witness) {
  LemmaVerdict v;
  v.lemma = std::move(lemma);
  v.hypothesis_met = true;
  v.bound_required = required;
  v.bound_observed = observed;
  v.relation = r;
  v.holds = compare(observed, required, r);
  v.cycle = c;
  v.path = p;
  v.witness = std::move(witness);
  return v;
}

LemmaVerdict vacuous(std::string lemma, const Cycle& c, const Path& p) {
  LemmaVerdict v;
  v.lemma = std::move(lemma);
  v.cycle = c;
  v.path = p;
  return v;
}

void check_placement(const Graph& g, const Cycle& c, const Path& p) {
  if (c.degenerate()) fail(ErrorCode::domain, "cycle must have length >= 3");
  require_valid_cycle(g, c);
  if (!is_valid_path(g, p)) fail(ErrorCode::invalid_path, "path is not a path of the graph");
  if (p.vertex_set().intersects(c.vertex_set())) {
    fail(ErrorCode::invalid_path, "path meets the cycle");
  }
}

void require_extreme(const Graph& g, const Cycle& c, const Path& p) {
  if (circumference(g).length != c.length()) {
    fail(ErrorCode::hypothesis, "cycle is not a longest cycle");
  }
  const auto longest = longest_path_outside(g, c);
  if (!longest || longest->length() != p.length()) {
    fail(ErrorCode::hypothesis, "path is not a longest path outside the cycle");
  }
}

}  // namespace

int SegmentDecomposition::segment_of(Vertex v) const {
  for (int i = 0; i < s(); ++i) {
    const auto& in = segments[static_cast<std::size_t>(i)].interior;
    if (std::find(in.begin(), in.end(), v) != in.end()) return i;
  }
  return -1;
}

int SegmentDecomposition::attachment_index(Vertex v) const {
  const auto it = std::find(xi.begin(), xi.end(), v);
  return it == xi.end() ? -1 : static_cast<int>(it - xi.begin());
}

SegmentDecomposition decompose(const Graph& g, const Cycle& c, const Path& p) {
  check_placement(g, c, p);
  SegmentDecomposition d;
  d.cycle = c;
  d.path = p;
  d.p_bar = p.length();
  const VertexSet on_cycle = c.vertex_set();
  d.nx = g.neighbors(p.front()) & on_cycle;
  d.ny = g.neighbors(p.back()) & on_cycle;
  const VertexSet attach = d.nx | d.ny;
  if (attach.empty()) fail(ErrorCode::no_attachments, "no end of the path has a neighbour on the cycle");
  for (Vertex v : c.vertices()) {
    if (attach.contains(v)) d.xi.push_back(v);
  }
  d.sigma1 = (d.nx - d.ny).size();
  d.sigma2 = (d.ny - d.nx).size();
  d.shared = (d.nx & d.ny).size();
  for (int i = 0; i < d.s(); ++i) {
    Segment seg;
    seg.from = d.xi[static_cast<std::size_t>(i)];
    seg.to = d.xi[static_cast<std::size_t>(d.next(i))];
    if (d.s() == 1) {
      seg.length = c.length();
      seg.interior = c.arc(c.succ(seg.from), c.pred(seg.from));
    } else {
      seg.length = c.arc_length(seg.from, seg.to);
      if (seg.length >= 2) seg.interior = c.arc(c.succ(seg.from), c.pred(seg.to));
    }
    d.segments.push_back(std::move(seg));
  }
  return d;
}

std::vector<IntermediatePath> intermediate_paths(const Graph& g,
                                                 const SegmentDecomposition& d,
                                                 int a, int b, int max_internal) {
  if (a < 0 || b < 0 || a >= d.s() || b >= d.s()) {
    fail(ErrorCode::invalid_argument, "segment index out of range");
  }
  if (a == b) fail(ErrorCode::invalid_argument, "segments must be distinct");
  if (max_internal < 0) fail(ErrorCode::invalid_argument, "max_internal must be >= 0");
  const VertexSet outside = g.vertices() - d.cycle.vertex_set() - d.path.vertex_set();
  const auto& target_list = d.segments[static_cast<std::size_t>(b)].interior;
  const VertexSet targets = VertexSet::of(target_list);

  std::vector<IntermediatePath> out;
  std::vector<Vertex> trail;
  VertexSet used;
  auto grow = [&](auto&& self, Vertex at) -> void {
    const int internal = static_cast<int>(trail.size()) - 1;
    for (Vertex w : g.neighbors(at)) {
      if (targets.contains(w)) {
        std::vector<Vertex> seq = trail;
        seq.push_back(w);
        out.push_back({Path(std::move(seq)), a, b});
      } else if (outside.contains(w) && !used.contains(w) && internal < max_internal) {
        used.insert(w);
        trail.push_back(w);
        self(self, w);
        trail.pop_back();
        used.erase(w);
      }
    }
  };
  for (Vertex z : d.segments[static_cast<std::size_t>(a)].interior) {
    trail.assign(1, z);
    grow(grow, z);
  }
  std::sort(out.begin(), out.end(), [](const IntermediatePath& l, const IntermediatePath& r) {
    return std::lexicographical_compare(l.path.vertices().begin(), l.path.vertices().end(),
                                        r.path.vertices().begin(), r.path.vertices().end());
  });
  return out;
}

bool has_independent_pair(std::span<const IntermediatePath> paths) {
  for (const auto& p : paths) {
    if (p.path.length() != 1) fail(ErrorCode::invalid_argument, "intermediate path is not an edge");
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const VertexSet e = paths[i].path.vertex_set();
      if (!e.intersects(paths[j].path.vertex_set())) return true;
    }
  }
  return false;
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::at_least: return "at_least";
    case Relation::at_most: return "at_most";
    case Relation::equal: return "equal";
  }
  return "unknown";
}

std::string lemma_family(const std::string& lemma) {
  return lemma.substr(0, lemma.find('.'));
}

LemmaVerdict check_lemma1(const Graph& g, const Cycle& c, const Path& p, bool strict) {
  check_placement(g, c, p);
  if (strict) require_extreme(g, c, p);
  const VertexSet nx = g.neighbors(p.front()) & c.vertex_set();
  const VertexSet ny = g.neighbors(p.back()) & c.vertex_set();
  const int p_bar = p.length();
  if (p_bar < 1 || nx.size() < 2 || ny.size() < 2 || nx == ny) return vacuous("lemma1", c, p);
  const int delta = min_degree(g);
  const int sigma1 = (nx - ny).size();
  const int sigma2 = (ny - nx).size();
  const int required = p_bar == 1 ? 3 * delta + std::max(sigma1, sigma2) - 1
                                   : std::max(2 * p_bar + 8, 4 * delta - 2 * p_bar);
  return verdict("lemma1", required, c.length(), Relation::at_least, c, p, {sigma1, sigma2});
}

std::vector<LemmaVerdict> check_lemma2(const Graph& g, const Cycle& c, const Path& p, bool strict) {
  check_placement(g, c, p);
  if (strict) require_extreme(g, c, p);
  const VertexSet nx = g.neighbors(p.front()) & c.vertex_set();
  const VertexSet ny = g.neighbors(p.back()) & c.vertex_set();
  std::vector<LemmaVerdict> out;
  if (nx != ny || nx.size() < 2) {
    out.push_back(vacuous("lemma2", c, p));
    return out;
  }
  const SegmentDecomposition d = decompose(g, c, p);
  const int p_bar = d.p_bar;
  for (int a = 0; a < d.s(); ++a) {
    for (int b = a + 1; b < d.s(); ++b) {
      const auto ups = intermediate_paths(g, d, a, b, g.order());
      if (ups.empty()) continue;
      const int sum = d.segments[static_cast<std::size_t>(a)].length +
                      d.segments[static_cast<std::size_t>(b)].length;
      bool all_edges = true;
      for (const auto& l : ups) {
        const int len = l.path.length();
        all_edges = all_edges && len == 1;
        out.push_back(verdict("lemma2.a1", 2 * p_bar + 2 * len + 4, sum, Relation::at_least, c, p,
                              {a, b, l.path.front(), l.path.back()}));
      }
      if (!all_edges) continue;
      const int i = static_cast<int>(ups.size());
      if (i <= 3) {
        out.push_back(verdict("lemma2.a2", 2 * p_bar + i + 5, sum, Relation::at_least, c, p, {a, b, i}));
      }
      if (has_independent_pair(ups)) {
        out.push_back(verdict("lemma2.a3", 2 * p_bar + 8, sum, Relation::at_least, c, p, {a, b}));
      }
    }
  }
  if (out.empty()) out.push_back(vacuous("lemma2", c, p));
  return out;
}

LemmaVerdict check_lemma3(const Graph& g, const Cycle& c, std::span<const Path> longest_paths,
                          int kappa, int delta) {
  if (c.length() == g.order() || longest_paths.empty()) return vacuous("lemma3", c, Path{});
  const int floor = kappa * (delta + 1);
  if (c.length() >= floor) {
    return verdict("lemma3", 1, 1, Relation::at_least, c, Path{}, {floor});
  }
  const VertexSet on_cycle = c.vertex_set();
  for (const Path& p : longest_paths) {
    if ((g.neighbors(p.front()) & on_cycle).size() >= 2 && (g.neighbors(p.back()) & on_cycle).size() >= 2) {
      return verdict("lemma3", 1, 1, Relation::at_least, c, p, {floor});
    }
  }
  return verdict("lemma3", 1, 0, Relation::at_least, c, Path{}, {floor});
}

LemmaVerdict check_lemma3(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return vacuous("lemma3", Cycle{}, Path{});
  const Circumference circ = circumference(g);
  if (circ.length < 3 || circ.length == g.order()) return vacuous("lemma3", circ.witness, Path{});
  const int kappa = connectivity(g);
  const int delta = min_degree(g);
  const CycleList cycles = enumerate_longest_cycles(g, kEnumerationCap);
  int satisfied = 0;
  LemmaVerdict failing;
  bool failed = false;
  for (const Cycle& c : cycles.cycles) {
    const PathList paths = enumerate_longest_paths(g, g.vertices() - c.vertex_set(), kEnumerationCap);
    LemmaVerdict v = check_lemma3(g, c, paths.paths, kappa, delta);
    if (v.holds) {
      ++satisfied;
    } else if (!failed) {
      failing = std::move(v);
      failed = true;
    }
  }
  const int total = static_cast<int>(cycles.cycles.size());
  LemmaVerdict out = verdict("lemma3", total, satisfied, Relation::at_least,
                             failed ? failing.cycle : cycles.cycles.front(), Path{}, {kappa * (delta + 1)});
  return out;
}

std::vector<LemmaVerdict> check_claims_1_2(const Graph& g, const SegmentDecomposition& d) {
  std::vector<LemmaVerdict> out;
  const Cycle& c = d.cycle;
  if (!d.equal_neighborhoods()) {
    out.push_back(vacuous("claim1", c, d.path));
    out.push_back(vacuous("claim2", c, d.path));
    return out;
  }
  const int s = d.s();
  const int limit1 = d.p_bar + 2;
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      const Vertex xa = d.xi[static_cast<std::size_t>(a)];
      const Vertex xa1 = d.xi[static_cast<std::size_t>(d.next(a))];
      const Vertex xb = d.xi[static_cast<std::size_t>(b)];
      const Vertex xb1 = d.xi[static_cast<std::size_t>(d.next(b))];
      for (Vertex y : d.segments[static_cast<std::size_t>(a)].interior) {
        for (Vertex z : d.segments[static_cast<std::size_t>(b)].interior) {
          const bool front = c.arc_length(xa, y) + c.arc_length(xb, z) <= limit1;
          const bool back = c.arc_length(y, xa1) + c.arc_length(z, xb1) <= limit1;
          if (!front && !back) continue;
          out.push_back(verdict("claim1", 1, g.adjacent(y, z) ? 0 : 1, Relation::at_least, c, d.path,
                                {a, b, y, z}));
        }
      }
    }
  }
  const int limit2 = d.p_bar + 1;
  for (int a = 0; a < s; ++a) {
    for (int step_b = 1; step_b < s; ++step_b) {
      for (int step_f = step_b + 1; step_f < s; ++step_f) {
        const int b = (a + step_b) % s;
        const int f = (a + step_f) % s;
        const Vertex xa = d.xi[static_cast<std::size_t>(a)];
        const Vertex xb = d.xi[static_cast<std::size_t>(b)];
        const Vertex xf = d.xi[static_cast<std::size_t>(f)];
        const Vertex before = c.pred(xa);
        const Vertex after = c.succ(xb);
        if (before == after || !g.adjacent(before, after)) continue;
        for (Vertex y : d.segments[static_cast<std::size_t>(f)].interior) {
          if (c.arc_length(xf, y) > limit2) continue;
          const int clear = (g.adjacent(y, xa) ? 0 : 1) + (g.adjacent(y, xb) ? 0 : 1);
          out.push_back(verdict("claim2", 2, clear, Relation::at_least, c, d.path, {a, b, f, y}));
        }
      }
    }
  }
  if (out.empty()) {
    out.push_back(vacuous("claim1", c, d.path));
    out.push_back(vacuous("claim2", c, d.path));
  }
  return out;
}

std::vector<LemmaVerdict> check_claims_3_4(const InvariantReport& report,
                                           const SegmentDecomposition& d,
                                           bool require_tough) {
  std::vector<LemmaVerdict> out;
  const Cycle& c = d.cycle;
  const int delta = report.delta;
  const bool base = c.length() == report.circumference && report.circumference <= 2 * delta + 3 &&
                    (!require_tough || report.toughness > ExactRational(1, 1));
  const bool claim3 = base && d.p_bar == 0 && d.s() == delta;
  const bool claim4 = base && d.p_bar == 1 && d.s() == delta - 1 && d.equal_neighborhoods();
  if (!claim3) out.push_back(vacuous("claim3", c, d.path));
  if (!claim4) out.push_back(vacuous("claim4", c, d.path));
  if (!claim3 && !claim4) return out;

  const std::string id = claim3 ? "claim3" : "claim4";
  const int floor = claim3 ? 2 : 3;     // every segment is at least this long
  const int pair_max = claim3 ? 7 : 9;  // (1)
  const int big = claim3 ? 5 : 6;       // (3)
  const int long_len = claim3 ? 3 : 4;  // (4), (5)
  const int s = d.s();
  auto len = [&](int i) { return d.segments[static_cast<std::size_t>(i)].length; };
  auto emit = [&](const char* part, int required, int observed, Relation r, std::vector<Vertex> w) {
    out.push_back(verdict(id + part, required, observed, r, c, d.path, std::move(w)));
  };

  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      emit(".1", pair_max, len(i) + len(j), Relation::at_most, {i, j});
      if (len(i) + len(j) != pair_max) continue;
      for (int k = 0; k < s; ++k) {
        if (k != i && k != j) emit(".2", floor, len(k), Relation::equal, {i, j, k});
      }
    }
  }
  for (int a = 0; a < s; ++a) {
    if (len(a) != big) continue;
    for (int k = 0; k < s; ++k) {
      if (k != a) emit(".3", floor, len(k), Relation::equal, {a, k});
    }
  }
  int long_count = 0;
  for (int i = 0; i < s; ++i) long_count += len(i) >= long_len ? 1 : 0;
  emit(".4", 3, long_count, Relation::at_most, {});
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      for (int f = b + 1; f < s; ++f) {
        if (len(a) < long_len || len(b) < long_len || len(f) < long_len) continue;
        for (int k : {a, b, f}) emit(".5", long_len, len(k), Relation::equal, {a, b, f, k});
      }
    }
  }
  return out;
}

std::vector<LemmaVerdict> check_segment_floor(const SegmentDecomposition& d) {
  std::vector<LemmaVerdict> out;
  const VertexSet m = d.nx & d.ny;
  const VertexSet a1 = d.nx - d.ny;
  const VertexSet a2 = d.ny - d.nx;
  for (int i = 0; i < d.s(); ++i) {
    const Segment& seg = d.segments[static_cast<std::size_t>(i)];
    const bool touches_m = m.contains(seg.from) || m.contains(seg.to);
    const bool crosses = (a1.contains(seg.from) && a2.contains(seg.to)) ||
                         (a2.contains(seg.from) && a1.contains(seg.to));
    if (!touches_m && !crosses) continue;
    out.push_back(verdict("segment_floor", d.p_bar + 2, seg.length, Relation::at_least, d.cycle,
                          d.path, {i}));
  }
  if (out.empty()) out.push_back(vacuous("segment_floor", d.cycle, d.path));
  return out;
}

bool check_voss(const Graph& g, int t, VertexSet witnesses) {
  if (t < 1) fail(ErrorCode::invalid_argument, "t must be positive");
  if (witnesses.size() != t) fail(ErrorCode::invalid_argument, "need exactly t witness vertices");
  if (!witnesses.subset_of(g.vertices())) fail(ErrorCode::invalid_argument, "witness not in the graph");
  if (g.order() < 3 || !is_hamiltonian(g)) fail(ErrorCode::hypothesis, "graph is not hamiltonian");
  for (Vertex v : witnesses) {
    if (g.degree(v) < t) fail(ErrorCode::hypothesis, "witness degree below t");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (longest_path_between(g, u, v) < t) return false;
    }
  }
  return true;
}

}  // namespace tc
