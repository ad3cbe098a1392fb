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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tc/error.hpp"
#include "tc/graph.hpp"
#include "tc/invariants.hpp"
#include "tc/structure.hpp"

using namespace tc;

namespace {

Graph random_connected(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

struct PetersenSetup {
  Graph g = petersen();
  Cycle c;
  Path p;
  PetersenSetup() {
    c = circumference(g).witness;
    p = *longest_path_outside(g, c);
  }
};

Graph c6_with(std::initializer_list<Edge> extra, int n) {
  Graph g(n);
  for (Vertex v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6);
  for (auto [u, v] : extra) g.add_edge(u, v);
  return g;
}

const Cycle kHex({0, 1, 2, 3, 4, 5});

}  // namespace

TEST_CASE("decompose: Petersen") {
  PetersenSetup ps;
  for (const Cycle& c : enumerate_longest_cycles(ps.g, 100).cycles) {
    const Path p = *longest_path_outside(ps.g, c);
    const SegmentDecomposition d = decompose(ps.g, c, p);
    CHECK(d.s() == 3);
    CHECK(d.p_bar == 0);
    CHECK(d.shared == 3);
    for (const Segment& seg : d.segments) {
      CHECK(seg.length == 3);
      CHECK(seg.interior.size() == 2);
    }
  }
}

TEST_CASE("decompose: single attachment and trivial segments") {
  const Graph pendant = c6_with({{0, 6}}, 7);
  const SegmentDecomposition d = decompose(pendant, kHex, Path({6}));
  CHECK(d.s() == 1);
  CHECK(d.segments[0].length == 6);
  CHECK(d.segments[0].interior.size() == 5);
  CHECK_THROWS_AS(intermediate_paths(pendant, d, 0, 1, 0), Error);

  const SegmentDecomposition k4 = decompose(graphs::complete(4), Cycle({0, 1, 2}), Path({3}));
  CHECK(k4.s() == 3);
  for (const Segment& seg : k4.segments) {
    CHECK(seg.length == 1);
    CHECK(seg.interior.empty());
  }
}

TEST_CASE("decompose: errors") {
  const Graph g = c6_with({{0, 6}}, 8);
  CHECK_THROWS_AS(decompose(g, kHex, Path({0})), Error);
  try {
    decompose(g, kHex, Path({7}));
    FAIL("expected no_attachments");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_attachments);
  }
  CHECK_THROWS_AS(decompose(g, Cycle({0, 1}), Path({6})), Error);
}

TEST_CASE("decomposition conservation on random graphs") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected(rng, 9, 0.35);
    const Circumference c = circumference(g);
    if (c.length < 3 || c.length == g.order()) continue;
    const Path p = *longest_path_outside(g, c.witness);
    SegmentDecomposition d;
    try {
      d = decompose(g, c.witness, p);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::no_attachments);
      continue;
    }
    int total = 0;
    VertexSet interiors;
    for (const Segment& seg : d.segments) {
      total += seg.length;
      const VertexSet in = VertexSet::of(seg.interior);
      CHECK_FALSE(in.intersects(interiors));
      interiors |= in;
    }
    CHECK(total == c.length);
    CHECK(d.s() == d.sigma1 + d.sigma2 + d.shared);
    CHECK((interiors | VertexSet::of(d.xi)) == c.witness.vertex_set());
    CHECK_FALSE(interiors.intersects(VertexSet::of(d.xi)));
    for (int a = 0; a < d.s(); ++a) {
      for (int b = 0; b < d.s(); ++b) {
        if (a == b) continue;
        const auto ab = intermediate_paths(g, d, a, b, 3);
        const auto ba = intermediate_paths(g, d, b, a, 3);
        REQUIRE(ab.size() == ba.size());
        std::vector<Path> reversed;
        for (const auto& l : ba) reversed.push_back(l.path.reversed());
        for (const auto& l : ab) {
          CHECK(std::find(reversed.begin(), reversed.end(), l.path) != reversed.end());
        }
      }
    }
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("intermediate paths") {
  PetersenSetup ps;
  const SegmentDecomposition d = decompose(ps.g, ps.c, ps.p);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const auto ups = intermediate_paths(ps.g, d, a, b, 10);
      REQUIRE(ups.size() == 1);
      CHECK(ups[0].path.length() == 1);
      CHECK_FALSE(has_independent_pair(ups));
      // The chord leaves each interior from its second vertex or first;
      // either way both ends are interior vertices.
      CHECK(d.segment_of(ups[0].path.front()) == a);
      CHECK(d.segment_of(ups[0].path.back()) == b);
    }
  }
  CHECK_THROWS_AS(intermediate_paths(ps.g, d, 1, 1, 0), Error);
  CHECK_THROWS_AS(intermediate_paths(ps.g, d, 0, 3, 0), Error);

  // C6 with P = 6 on 0 and 3; 7 bridges 1 and 4 outside C and P.
  const Graph bridge = c6_with({{6, 0}, {6, 3}, {7, 1}, {7, 4}}, 8);
  const SegmentDecomposition db = decompose(bridge, kHex, Path({6}));
  CHECK(db.s() == 2);
  CHECK(intermediate_paths(bridge, db, 0, 1, 0).empty());
  const auto one = intermediate_paths(bridge, db, 0, 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].path == Path({1, 7, 4}));
}

TEST_CASE("independent pairs") {
  const IntermediatePath e1{Path({1, 4}), 0, 1};
  const IntermediatePath e2{Path({2, 5}), 0, 1};
  const IntermediatePath e3{Path({1, 5}), 0, 1};
  const std::vector<IntermediatePath> indep{e1, e2};
  const std::vector<IntermediatePath> shared{e1, e3};
  CHECK(has_independent_pair(indep));
  CHECK_FALSE(has_independent_pair(shared));
  const std::vector<IntermediatePath> longer{IntermediatePath{Path({1, 7, 4}), 0, 1}};
  CHECK_THROWS_AS(has_independent_pair(longer), Error);
}

TEST_CASE("lemma 1") {
  const Graph k5 = graphs::complete(5);
  const LemmaVerdict v = check_lemma1(k5, Cycle({0, 1, 2}), Path({3, 4}));
  CHECK_FALSE(v.hypothesis_met);
  CHECK(v.holds);

  // Random pairs rarely meet the hypothesis below 11 vertices; they must
  // still hold whenever they do.
  std::mt19937 rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = random_connected(rng, 8 + trial % 3, 0.25 + 0.05 * (trial % 4));
    const Circumference c = circumference(g);
    if (c.length < 3 || c.length == g.order()) continue;
    for (const Path& p : enumerate_longest_paths(g, g.vertices() - c.witness.vertex_set(), 100).paths) {
      const LemmaVerdict l = check_lemma1(g, c.witness, p, true);
      CHECK(l.holds);
    }
  }
  // C9 with the edge xy outside, x on {0, 3} and y on {0, 6}.
  Graph g(11);
  for (Vertex v = 0; v < 9; ++v) g.add_edge(v, (v + 1) % 9);
  for (auto [u, v] : {Edge{9, 0}, Edge{9, 3}, Edge{10, 0}, Edge{10, 6}, Edge{9, 10}}) g.add_edge(u, v);
  const Cycle c9({0, 1, 2, 3, 4, 5, 6, 7, 8});
  REQUIRE(circumference(g).length == 9);
  const LemmaVerdict l = check_lemma1(g, c9, Path({9, 10}), true);
  CHECK(l.hypothesis_met);
  CHECK(l.holds);
  CHECK(l.bound_required == 3 * 2 + 1 - 1);
  CHECK(l.bound_observed == 9);
  CHECK(l.witness == std::vector<int>{1, 1});
  CHECK_THROWS_AS(check_lemma1(k5, Cycle({0, 1, 2}), Path({3}), true), Error);
}

TEST_CASE("lemma 2 on Petersen is tight") {
  PetersenSetup ps;
  const auto verdicts = check_lemma2(ps.g, ps.c, ps.p, true);
  int a2 = 0;
  for (const LemmaVerdict& v : verdicts) {
    CHECK(v.hypothesis_met);
    CHECK(v.holds);
    if (v.lemma == "lemma2.a2") {
      ++a2;
      CHECK(v.bound_required == 6);
      CHECK(v.bound_observed == 6);
    }
    CHECK(v.lemma != "lemma2.a3");
  }
  CHECK(a2 == 3);
}

TEST_CASE("lemma 2 vacuous without shared neighbourhoods") {
  const Graph g = c6_with({{6, 0}, {7, 3}, {6, 7}}, 8);
  const auto v = check_lemma2(g, kHex, Path({6, 7}));
  REQUIRE(v.size() == 1);
  CHECK_FALSE(v[0].hypothesis_met);
  CHECK(v[0].holds);
}

TEST_CASE("lemma 3") {
  const LemmaVerdict p = check_lemma3(petersen());
  CHECK(p.hypothesis_met);
  CHECK(p.holds);
  CHECK(p.bound_required == 20);
  CHECK(p.bound_observed == 20);
  CHECK(p.witness == std::vector<Vertex>{12});
  const LemmaVerdict k5 = check_lemma3(graphs::complete(5));
  CHECK_FALSE(k5.hypothesis_met);
  CHECK(k5.holds);
}

TEST_CASE("claims 1 and 2") {
  PetersenSetup ps;
  const SegmentDecomposition d = decompose(ps.g, ps.c, ps.p);
  int claim1 = 0;
  for (const LemmaVerdict& v : check_claims_1_2(ps.g, d)) {
    CHECK(v.holds);
    if (v.lemma == "claim1" && v.hypothesis_met) ++claim1;
  }
  CHECK(claim1 > 0);

  // One attachment pair and no eligible vertices: everything is vacuous.
  const Graph g = c6_with({{6, 0}, {6, 3}}, 7);
  for (const LemmaVerdict& v : check_claims_1_2(g, decompose(g, kHex, Path({6})))) {
    CHECK(v.holds);
  }
}

TEST_CASE("claims 3 and 4") {
  PetersenSetup ps;
  const InvariantReport report = compute_invariants(ps.g);
  const SegmentDecomposition d = decompose(ps.g, ps.c, ps.p);
  int pairs = 0;
  for (const LemmaVerdict& v : check_claims_3_4(report, d)) {
    CHECK(v.holds);
    if (v.lemma == "claim3.1") {
      ++pairs;
      CHECK(v.bound_observed == 6);
      CHECK(v.bound_required == 7);
      CHECK(v.relation == Relation::at_most);
    }
  }
  CHECK(pairs == 3);

  // c >= 2 delta + 4 switches the gate off.
  InvariantReport wide = report;
  wide.delta = 2;
  for (const LemmaVerdict& v : check_claims_3_4(wide, d)) CHECK_FALSE(v.hypothesis_met);
  InvariantReport weak = report;
  weak.toughness = ExactRational(1, 1);
  for (const LemmaVerdict& v : check_claims_3_4(weak, d)) CHECK_FALSE(v.hypothesis_met);
  bool any = false;
  for (const LemmaVerdict& v : check_claims_3_4(weak, d, false)) any = any || v.hypothesis_met;
  CHECK(any);
}

TEST_CASE("segment floor") {
  PetersenSetup ps;
  const auto v = check_segment_floor(decompose(ps.g, ps.c, ps.p));
  CHECK(v.size() == 3);
  for (const LemmaVerdict& f : v) {
    CHECK(f.holds);
    CHECK(f.bound_required == 2);
  }
}

TEST_CASE("voss") {
  CHECK(check_voss(graphs::complete(5), 3, VertexSet::of({0, 1, 2})));
  CHECK(check_voss(graphs::cycle(6), 2, VertexSet::of({0, 3})));
  CHECK_THROWS_AS(check_voss(petersen(), 3, VertexSet::of({0, 1, 2})), Error);
  CHECK_THROWS_AS(check_voss(graphs::cycle(6), 3, VertexSet::of({0, 1, 2})), Error);
  CHECK_THROWS_AS(check_voss(graphs::cycle(6), 2, VertexSet::of({0})), Error);
}
