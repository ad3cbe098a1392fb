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

#include "tc/extension.hpp"

#include <algorithm>
#include <string>

#include "tc/error.hpp"
#include "tc/invariants.hpp"

namespace tc {
namespace {

using Seq = std::vector<Vertex>;

void append(Seq& out, const Seq& part) { out.insert(out.end(), part.begin(), part.end()); }

// The arc walked backwards: from `from` against the orientation to `to`.
Seq back_arc(const Cycle& c, Vertex from, Vertex to) {
  Seq a = c.arc(to, from);
  std::reverse(a.begin(), a.end());
  return a;
}

// Forward arc without its final vertex (the start of the cycle being closed).
Seq closing_arc(const Cycle& c, Vertex from, Vertex to) {
  Seq a = c.arc(from, to);
  a.pop_back();
  return a;
}

Seq path_seq(const Path& p) { return {p.vertices().begin(), p.vertices().end()}; }

Seq path_interior(const Path& p) {
  Seq s = path_seq(p);
  if (s.size() <= 2) return {};
  return {s.begin() + 1, s.end() - 1};
}

RewireCandidate finish(const Graph& g, Construction kind, Seq seq, int claimed,
                       std::vector<int> segments, std::vector<Path> paths) {
  Cycle cycle;
  try {
    cycle = Cycle(std::move(seq));
  } catch (const Error&) {
    fail(ErrorCode::construction, std::string(to_string(kind)) + ": sequence repeats a vertex");
  }
  if (cycle.degenerate() || !is_valid_cycle(g, cycle)) {
    fail(ErrorCode::construction, std::string(to_string(kind)) + ": sequence is not a cycle of the graph");
  }
  if (cycle.length() != claimed) {
    fail(ErrorCode::construction, std::string(to_string(kind)) + ": length formula gives " +
                                      std::to_string(claimed) + ", measured " +
                                      std::to_string(cycle.length()));
  }
  return {kind, std::move(cycle), claimed, std::move(segments), std::move(paths)};
}

void require_equal_neighborhoods(const SegmentDecomposition& d) {
  if (!d.equal_neighborhoods()) fail(ErrorCode::hypothesis, "needs N_C(x) = N_C(y)");
}

Vertex xi(const SegmentDecomposition& d, int i) {
  return d.xi[static_cast<std::size_t>(((i % d.s()) + d.s()) % d.s())];
}

// Re-expresses an intermediate path of d in the decomposition of the
// reversed cycle.
IntermediatePath remap(const SegmentDecomposition& rev, const IntermediatePath& l) {
  return {l.path, rev.segment_of(l.path.front()), rev.segment_of(l.path.back())};
}

struct Located {
  int a;
  int b;
};

Located locate(const SegmentDecomposition& d, const IntermediatePath& l) {
  const int a = d.segment_of(l.path.front());
  const int b = d.segment_of(l.path.back());
  if (a < 0 || b < 0 || a == b || a != l.seg_a || b != l.seg_b) {
    fail(ErrorCode::pattern_mismatch, "path ends are not in the stated segment interiors");
  }
  const VertexSet used = d.cycle.vertex_set() | d.path.vertex_set();
  for (Vertex v : path_interior(l.path)) {
    if (used.contains(v)) fail(ErrorCode::pattern_mismatch, "intermediate path meets C or P");
  }
  return {a, b};
}

RewireCandidate splice_main(const Graph& g, const SegmentDecomposition& d,
                            const IntermediatePath& l, Construction kind) {
  require_equal_neighborhoods(d);
  const auto [a, b] = locate(d, l);
  const Cycle& c = d.cycle;
  const Vertex z = l.path.front();
  const Vertex w = l.path.back();
  const Vertex xa = xi(d, a);
  const Vertex xb = xi(d, b);
  Seq seq{xa};
  append(seq, path_seq(d.path));
  append(seq, back_arc(c, xb, z));
  append(seq, path_interior(l.path));
  append(seq, closing_arc(c, w, xa));
  const int claimed = c.length() - c.arc_length(xa, z) - c.arc_length(xb, w) + l.path.length() + d.p_bar + 2;
  return finish(g, kind, std::move(seq), claimed, {a, b}, {l.path});
}

// Two intermediate edges normalised so both run from segment a to segment b.
struct EdgePair {
  int a;
  int b;
  Vertex z1, w1, z2, w2;
};

EdgePair normalise(const SegmentDecomposition& d, const IntermediatePath& e1,
                   const IntermediatePath& e2) {
  if (e1.path.length() != 1 || e2.path.length() != 1) {
    fail(ErrorCode::pattern_mismatch, "two-edge rewiring needs intermediate edges");
  }
  const auto l1 = locate(d, e1);
  const auto l2 = locate(d, e2);
  EdgePair p{l1.a, l1.b, e1.path.front(), e1.path.back(), e2.path.front(), e2.path.back()};
  if (l2.a == l1.a && l2.b == l1.b) return p;
  if (l2.a == l1.b && l2.b == l1.a) {
    std::swap(p.z2, p.w2);
    return p;
  }
  fail(ErrorCode::pattern_mismatch, "edges join different segment pairs");
}

RewireCandidate two_edges_main(const Graph& g, const SegmentDecomposition& d,
                               const IntermediatePath& e1, const IntermediatePath& e2,
                               TwoEdgeVariant variant, bool mirrored) {
  require_equal_neighborhoods(d);
  EdgePair p = normalise(d, e1, e2);
  const Cycle& c = d.cycle;
  const bool z_shared = p.z1 == p.z2;
  const bool w_shared = p.w1 == p.w2;
  if (z_shared && w_shared) fail(ErrorCode::pattern_mismatch, "edges coincide");
  const bool independent = !z_shared && !w_shared;
  const bool shared_variant = variant != TwoEdgeVariant::case_2_1_1 && variant != TwoEdgeVariant::case_2_1_2;
  if (independent == shared_variant) {
    fail(ErrorCode::pattern_mismatch, std::string(to_string(variant)) +
                                          (shared_variant ? " needs a shared endpoint" : " needs independent edges"));
  }
  if (z_shared) {
    // Make a the side where the endpoints differ.
    std::swap(p.a, p.b);
    std::swap(p.z1, p.w1);
    std::swap(p.z2, p.w2);
  }
  const Vertex xa = xi(d, p.a);
  const Vertex xa1 = xi(d, p.a + 1);
  const Vertex xb = xi(d, p.b);
  const Vertex xb1 = xi(d, p.b + 1);
  if (c.arc_length(xa, p.z1) > c.arc_length(xa, p.z2)) {
    std::swap(p.z1, p.z2);
    std::swap(p.w1, p.w2);
  }
  const Path used1({p.z1, p.w1});
  const Path used2({p.z2, p.w2});
  const std::vector<int> segs{p.a, p.b};
  Seq seq;
  int claimed = 0;
  Construction kind{};
  switch (variant) {
    case TwoEdgeVariant::case_2_1_1:
    case TwoEdgeVariant::case_2_1_2: {
      const bool crossing = c.arc_length(xb, p.w2) < c.arc_length(xb, p.w1);
      if (crossing != (variant == TwoEdgeVariant::case_2_1_1)) {
        fail(ErrorCode::pattern_mismatch, std::string(to_string(variant)) + ": wrong endpoint order on I_b");
      }
      append(seq, c.arc(xa, p.z1));
      if (crossing) {
        append(seq, back_arc(c, p.w1, p.w2));
        claimed = c.length() - c.arc_length(p.z1, p.z2) - c.arc_length(xb, p.w2) -
                  c.arc_length(p.w1, xb1) + d.p_bar + 4;
        kind = mirrored ? Construction::case_2_1_1_mirror : Construction::case_2_1_1;
      } else {
        append(seq, c.arc(p.w1, p.w2));
        claimed = c.length() - c.arc_length(p.z1, p.z2) - c.arc_length(xb, p.w1) -
                  c.arc_length(p.w2, xb1) + d.p_bar + 4;
        kind = mirrored ? Construction::case_2_1_2_mirror : Construction::case_2_1_2;
      }
      append(seq, c.arc(p.z2, xb));
      append(seq, path_seq(d.path));
      append(seq, closing_arc(c, xb1, xa));
      break;
    }
    case TwoEdgeVariant::case_2_2_prime:
    case TwoEdgeVariant::case_3_prime: {
      seq.push_back(xa);
      append(seq, path_seq(d.path));
      append(seq, back_arc(c, xb, p.z1));
      append(seq, closing_arc(c, p.w1, xa));
      claimed = c.length() - c.arc_length(xa, p.z1) - c.arc_length(xb, p.w1) + d.p_bar + 3;
      kind = variant == TwoEdgeVariant::case_2_2_prime ? Construction::case_2_2_prime : Construction::case_3_prime;
      break;
    }
    case TwoEdgeVariant::case_2_2_double_prime:
    case TwoEdgeVariant::case_3_double_prime: {
      append(seq, c.arc(xa, p.z2));
      append(seq, back_arc(c, p.w2, xa1));
      append(seq, path_seq(d.path));
      append(seq, closing_arc(c, xb1, xa));
      claimed = c.length() - c.arc_length(p.z2, xa1) - c.arc_length(p.w2, xb1) + d.p_bar + 3;
      kind = variant == TwoEdgeVariant::case_2_2_double_prime ? Construction::case_2_2_double_prime
                                                              : Construction::case_3_double_prime;
      break;
    }
  }
  return finish(g, kind, std::move(seq), claimed, segs, {used1, used2});
}

Construction mirror_of(Construction k) {
  switch (k) {
    case Construction::splice: return Construction::splice_mirror;
    case Construction::claim1: return Construction::claim1_mirror;
    case Construction::case_2_1_1: return Construction::case_2_1_1_mirror;
    case Construction::case_2_1_2: return Construction::case_2_1_2_mirror;
    default: return k;
  }
}

}  // namespace

const char* to_string(Construction c) noexcept {
  switch (c) {
    case Construction::segment_insertion: return "segment_insertion";
    case Construction::splice: return "splice";
    case Construction::splice_mirror: return "splice_mirror";
    case Construction::case_2_1_1: return "case_2.1.1";
    case Construction::case_2_1_1_mirror: return "case_2.1.1_mirror";
    case Construction::case_2_1_2: return "case_2.1.2";
    case Construction::case_2_1_2_mirror: return "case_2.1.2_mirror";
    case Construction::case_2_2_prime: return "case_2.2_prime";
    case Construction::case_2_2_double_prime: return "case_2.2_double_prime";
    case Construction::case_3_prime: return "case_3_prime";
    case Construction::case_3_double_prime: return "case_3_double_prime";
    case Construction::claim1: return "claim1";
    case Construction::claim1_mirror: return "claim1_mirror";
    case Construction::claim2_xi_a: return "claim2_xi_a";
    case Construction::claim2_xi_b: return "claim2_xi_b";
  }
  return "unknown";
}

const char* to_string(TwoEdgeVariant v) noexcept {
  switch (v) {
    case TwoEdgeVariant::case_2_1_1: return "2.1.1";
    case TwoEdgeVariant::case_2_1_2: return "2.1.2";
    case TwoEdgeVariant::case_2_2_prime: return "2.2-prime";
    case TwoEdgeVariant::case_2_2_double_prime: return "2.2-doubleprime";
    case TwoEdgeVariant::case_3_prime: return "3-prime";
    case TwoEdgeVariant::case_3_double_prime: return "3-doubleprime";
  }
  return "unknown";
}

RewireCandidate insert_path(const Graph& g, const SegmentDecomposition& d, int segment) {
  if (segment < 0 || segment >= d.s()) fail(ErrorCode::invalid_argument, "segment index out of range");
  if (d.s() < 2) fail(ErrorCode::pattern_mismatch, "a single attachment leaves nothing to bridge");
  const Segment& seg = d.segments[static_cast<std::size_t>(segment)];
  const Cycle& c = d.cycle;
  Seq body = path_seq(d.path);
  const bool forward = g.adjacent(seg.from, d.x()) && g.adjacent(seg.to, d.y());
  const bool backward = g.adjacent(seg.from, d.y()) && g.adjacent(seg.to, d.x());
  if (!forward && !backward) fail(ErrorCode::pattern_mismatch, "path ends do not match the segment ends");
  if (!forward) std::reverse(body.begin(), body.end());
  Seq seq{seg.from};
  append(seq, body);
  append(seq, closing_arc(c, seg.to, seg.from));
  const int claimed = c.length() - seg.length + d.p_bar + 2;
  return finish(g, Construction::segment_insertion, std::move(seq), claimed, {segment}, {});
}

RewireCandidate splice_basic(const Graph& g, const SegmentDecomposition& d,
                             const IntermediatePath& l, bool mirror) {
  if (!mirror) return splice_main(g, d, l, Construction::splice);
  locate(d, l);
  const SegmentDecomposition rev = decompose(g, d.cycle.reversed(), d.path);
  return splice_main(g, rev, remap(rev, l), Construction::splice_mirror);
}

RewireCandidate rewire_two_edges(const Graph& g, const SegmentDecomposition& d,
                                 const IntermediatePath& e1, const IntermediatePath& e2,
                                 TwoEdgeVariant variant, bool mirror) {
  if (!mirror) return two_edges_main(g, d, e1, e2, variant, false);
  locate(d, e1);
  locate(d, e2);
  const SegmentDecomposition rev = decompose(g, d.cycle.reversed(), d.path);
  return two_edges_main(g, rev, remap(rev, e1), remap(rev, e2), variant, true);
}

std::vector<RewireCandidate> claim_rewires(const Graph& g, const SegmentDecomposition& d) {
  std::vector<RewireCandidate> out;
  if (!d.equal_neighborhoods() || d.s() < 2) return out;
  const Cycle& c = d.cycle;
  const SegmentDecomposition rev = decompose(g, c.reversed(), d.path);
  for (int a = 0; a < d.s(); ++a) {
    for (int b = 0; b < d.s(); ++b) {
      if (a == b) continue;
      for (const auto& l : intermediate_paths(g, d, a, b, 0)) {
        RewireCandidate main = splice_main(g, d, l, Construction::claim1);
        out.push_back(std::move(main));
        out.push_back(splice_main(g, rev, remap(rev, l), mirror_of(Construction::claim1)));
      }
    }
  }
  const int s = d.s();
  for (int a = 0; a < s; ++a) {
    for (int step_b = 1; step_b < s; ++step_b) {
      for (int step_f = step_b + 1; step_f < s; ++step_f) {
        const int b = (a + step_b) % s;
        const int f = (a + step_f) % s;
        const Vertex xa = xi(d, a);
        const Vertex xb = xi(d, b);
        const Vertex xf = xi(d, f);
        const Vertex before = c.pred(xa);
        const Vertex after = c.succ(xb);
        if (before == after || !g.adjacent(before, after)) continue;
        for (Vertex y : d.segments[static_cast<std::size_t>(f)].interior) {
          const int claimed = c.length() - c.arc_length(xf, y) + d.p_bar + 2;
          const Seq tail = [&] {
            Seq t = c.arc(y, before);
            append(t, closing_arc(c, after, xf));
            return t;
          }();
          if (g.adjacent(y, xa)) {
            Seq seq{xf};
            append(seq, path_seq(d.path));
            append(seq, back_arc(c, xb, xa));
            append(seq, tail);
            out.push_back(finish(g, Construction::claim2_xi_a, std::move(seq), claimed, {a, b, f}, {}));
          }
          if (g.adjacent(y, xb)) {
            Seq seq{xf};
            append(seq, path_seq(d.path));
            append(seq, c.arc(xa, xb));
            append(seq, tail);
            out.push_back(finish(g, Construction::claim2_xi_b, std::move(seq), claimed, {a, b, f}, {}));
          }
        }
      }
    }
  }
  return out;
}

std::vector<RewireCandidate> rewire_candidates(const Graph& g, const SegmentDecomposition& d,
                                               int max_internal) {
  std::vector<RewireCandidate> out;
  const int s = d.s();
  if (s < 2) return out;
  for (int i = 0; i < s; ++i) {
    const Segment& seg = d.segments[static_cast<std::size_t>(i)];
    const bool forward = g.adjacent(seg.from, d.x()) && g.adjacent(seg.to, d.y());
    const bool backward = g.adjacent(seg.from, d.y()) && g.adjacent(seg.to, d.x());
    if (forward || backward) out.push_back(insert_path(g, d, i));
  }
  if (!d.equal_neighborhoods()) return out;

  const SegmentDecomposition rev = decompose(g, d.cycle.reversed(), d.path);
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (a == b) continue;
      for (const auto& l : intermediate_paths(g, d, a, b, max_internal)) {
        out.push_back(splice_main(g, d, l, Construction::splice));
        out.push_back(splice_main(g, rev, remap(rev, l), Construction::splice_mirror));
      }
    }
  }
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      const auto edges = intermediate_paths(g, d, a, b, 0);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          const IntermediatePath& e1 = edges[i];
          const IntermediatePath& e2 = edges[j];
          const bool independent = e1.path.front() != e2.path.front() && e1.path.back() != e2.path.back();
          std::vector<TwoEdgeVariant> variants;
          if (independent) {
            const Cycle& c = d.cycle;
            const Vertex xa = xi(d, a);
            const Vertex xb = xi(d, b);
            const bool z_order = c.arc_length(xa, e1.path.front()) < c.arc_length(xa, e2.path.front());
            const bool w_order = c.arc_length(xb, e1.path.back()) < c.arc_length(xb, e2.path.back());
            variants.push_back(z_order != w_order ? TwoEdgeVariant::case_2_1_1 : TwoEdgeVariant::case_2_1_2);
          } else {
            variants = {TwoEdgeVariant::case_2_2_prime, TwoEdgeVariant::case_2_2_double_prime};
          }
          for (TwoEdgeVariant v : variants) {
            out.push_back(two_edges_main(g, d, e1, e2, v, false));
            out.push_back(two_edges_main(g, rev, remap(rev, e1), remap(rev, e2), v, true));
          }
        }
      }
      // Three edges on a common end: the outer two drive Case 3.
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          for (std::size_t k = j + 1; k < edges.size(); ++k) {
            const Vertex zi = edges[i].path.front(), zj = edges[j].path.front(), zk = edges[k].path.front();
            const Vertex wi = edges[i].path.back(), wj = edges[j].path.back(), wk = edges[k].path.back();
            const bool fan_w = wi == wj && wj == wk && zi != zj && zj != zk && zi != zk;
            const bool fan_z = zi == zj && zj == zk && wi != wj && wj != wk && wi != wk;
            if (!fan_w && !fan_z) continue;
            // The outer pair is the one spanning the middle edge; try all
            // pairs and keep the ones whose shape matches.
            const IntermediatePath* trio[3] = {&edges[i], &edges[j], &edges[k]};
            const Cycle& c = d.cycle;
            auto key = [&](const IntermediatePath* e) {
              return fan_w ? c.arc_length(xi(d, a), e->path.front()) : c.arc_length(xi(d, b), e->path.back());
            };
            std::sort(std::begin(trio), std::end(trio),
                      [&](const IntermediatePath* l, const IntermediatePath* r) { return key(l) < key(r); });
            for (TwoEdgeVariant v : {TwoEdgeVariant::case_3_prime, TwoEdgeVariant::case_3_double_prime}) {
              out.push_back(two_edges_main(g, d, *trio[0], *trio[2], v, false));
              out.push_back(two_edges_main(g, rev, remap(rev, *trio[0]), remap(rev, *trio[2]), v, true));
            }
          }
        }
      }
    }
  }
  for (auto& r : claim_rewires(g, d)) out.push_back(std::move(r));
  return out;
}

ExtendResult greedy_extend(const Graph& g, const Cycle& start, int budget, bool best_improvement) {
  if (budget < 1) fail(ErrorCode::invalid_argument, "budget must be >= 1");
  if (start.degenerate()) fail(ErrorCode::domain, "start cycle must have length >= 3");
  require_valid_cycle(g, start);
  ExtendResult r;
  r.cycle = start;
  r.lengths.push_back(start.length());
  for (int step = 0; step < budget; ++step) {
    const auto p = longest_path_outside(g, r.cycle);
    if (!p) break;
    SegmentDecomposition d;
    try {
      d = decompose(g, r.cycle, *p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::no_attachments) break;
      throw;
    }
    const auto candidates = rewire_candidates(g, d, 2);
    const RewireCandidate* pick = nullptr;
    for (const auto& cand : candidates) {
      if (cand.cycle.length() <= r.cycle.length()) continue;
      if (!pick || (best_improvement && cand.cycle.length() > pick->cycle.length())) pick = &cand;
      if (!best_improvement) break;
    }
    if (!pick) break;
    r.cycle = pick->cycle;
    ++r.iterations;
    r.lengths.push_back(r.cycle.length());
  }
  return r;
}

}  // namespace tc
