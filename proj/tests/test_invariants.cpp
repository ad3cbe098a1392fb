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

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tc/error.hpp"
#include "tc/graph.hpp"
#include "tc/invariants.hpp"

using namespace tc;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

std::vector<Vertex> shuffled(std::mt19937& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

ExactRational frac(std::uint64_t a, std::uint64_t b) { return {a, b}; }

bool same(const ExactRational& r, const oracle::Fraction& f) {
  if (f.infinite) return r.is_infinite();
  return !r.is_infinite() && r == frac(static_cast<std::uint64_t>(f.num), static_cast<std::uint64_t>(f.den));
}

void check_cut(const Graph& g, const Toughness& t) {
  if (!t.cut) return;
  const int parts = component_count(delete_vertices(g, *t.cut).graph);
  CHECK(parts == t.components);
  CHECK(parts >= 2);
  CHECK(frac(static_cast<std::uint64_t>(t.cut->size()), static_cast<std::uint64_t>(parts)) == t.value);
}

}  // namespace

TEST_CASE("rational order") {
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(2, 4).num() == 1);
  CHECK(frac(4, 3) > frac(1, 1));
  CHECK(ExactRational::infinity() > frac(1000000, 1));
  CHECK(ExactRational::infinity() == ExactRational::infinity());
  CHECK(frac(4, 3).to_string() == "4/3");
  CHECK(ExactRational::infinity().to_string() == "inf");
  CHECK_THROWS_AS(frac(1, 0), Error);
}

TEST_CASE("minimum degree") {
  CHECK(min_degree(graphs::complete(4)) == 3);
  CHECK(min_degree(petersen()) == 3);
  CHECK(min_degree(graphs::star(4)) == 1);
}

TEST_CASE("connectivity") {
  CHECK(connectivity(graphs::cycle(5)) == 2);
  CHECK(connectivity(petersen()) == 3);
  CHECK(connectivity(graphs::complete(4)) == 3);
  CHECK(connectivity(graphs::complete(1)) == 0);
  CHECK(connectivity(graphs::empty(3)) == 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 8, 0.55);
    CHECK(connectivity(g) == oracle::connectivity(g));
    CHECK(connectivity(g) <= min_degree(g));
  }
}

TEST_CASE("toughness examples") {
  CHECK(toughness(graphs::complete(5)).value.is_infinite());
  CHECK_FALSE(toughness(graphs::complete(5)).cut);
  const Toughness c5 = toughness(graphs::cycle(5));
  CHECK(c5.value == frac(1, 1));
  REQUIRE(c5.cut);
  CHECK(c5.cut->size() == 2);
  const Toughness p = toughness(petersen());
  CHECK(p.value == frac(4, 3));
  REQUIRE(p.cut);
  CHECK(p.cut->size() == 4);
  CHECK(p.components == 3);
  CHECK(toughness(graphs::complete_bipartite(2, 3)).value == frac(2, 3));
  const Toughness split = toughness(graphs::empty(2));
  CHECK(split.value == frac(0, 1));
  CHECK(split.cut->empty());
  for (int n = 4; n <= 10; ++n) CHECK(toughness(graphs::cycle(n)).value == frac(1, 1));
  check_cut(petersen(), p);
}

TEST_CASE("t-tough") {
  CHECK(is_t_tough(petersen(), frac(1, 1)));
  CHECK(is_t_tough(petersen(), frac(4, 3)));
  CHECK_FALSE(is_t_tough(graphs::cycle(5), frac(4, 3)));
  CHECK_THROWS_AS(is_t_tough(petersen(), ExactRational::infinity()), Error);
}

TEST_CASE("toughness against subset enumeration") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 10, 0.5);
    const Toughness t = toughness(g);
    CHECK(same(t.value, oracle::toughness(g)));
    CHECK(toughness_by_enumeration(g).value == t.value);
    check_cut(g, t);
  }
}

TEST_CASE("circumference examples") {
  CHECK(circumference(graphs::cycle(5)).length == 5);
  const Circumference p = circumference(petersen());
  CHECK(p.length == 9);
  CHECK(is_valid_cycle(petersen(), p.witness));
  CHECK(p.witness.length() == 9);
  CHECK(circumference(graphs::star(4)).length == 2);
  CHECK(circumference(graphs::path(6)).length == 2);
  CHECK(circumference(graphs::path(6)).witness == Cycle({0, 1}));
  CHECK(circumference(graphs::empty(3)).length == 1);
  CHECK(circumference(graphs::empty(3)).witness == Cycle({0}));
  CHECK(circumference_by_subset_dp(petersen()) == 9);
}

TEST_CASE("circumference against oracles") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 8;
    const Graph g = random_graph(rng, n, 0.35);
    const Circumference c = circumference(g);
    CHECK(c.length == oracle::circumference(g));
    CHECK(c.length == circumference_by_subset_dp(g));
    CHECK(is_valid_cycle(g, c.witness));
    CHECK(c.witness.length() == c.length);
    CHECK(c.witness == c.witness.canonical());
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 8 + trial % 7;
    const Graph g = random_connected(rng, n, 0.25);
    CHECK(circumference(g).length == circumference_by_subset_dp(g));
  }
}

TEST_CASE("hamiltonicity") {
  CHECK(is_hamiltonian(graphs::complete(4)));
  CHECK_FALSE(is_hamiltonian(petersen()));
  CHECK(is_hamiltonian(graphs::cycle(6)));
  CHECK_THROWS_AS(is_hamiltonian(graphs::complete(2)), Error);
}

TEST_CASE("dominating cycles") {
  const Circumference p = circumference(petersen());
  CHECK(is_dominating_cycle(petersen(), p.witness));
  CHECK(is_dominating_cycle(graphs::complete(4), Cycle({0, 1, 2})));
  CHECK(is_dominating_cycle(graphs::cycle(6), Cycle({0, 1, 2, 3, 4, 5})));
  CHECK_FALSE(is_dominating_cycle(graphs::complete(5), Cycle({0, 1, 2})));
  CHECK_THROWS_AS(is_dominating_cycle(graphs::cycle(6), Cycle({0, 1, 3})), Error);
}

TEST_CASE("longest path outside a cycle") {
  const Graph p = petersen();
  const Circumference c = circumference(p);
  const auto rest = longest_path_outside(p, c.witness);
  REQUIRE(rest);
  CHECK(rest->length() == 0);
  const auto k4 = longest_path_outside(graphs::complete(4), Cycle({0, 1, 2}));
  REQUIRE(k4);
  CHECK(k4->length() == 0);
  CHECK(k4->front() == 3);
  CHECK_FALSE(longest_path_outside(graphs::cycle(6), Cycle({0, 1, 2, 3, 4, 5})));
}

TEST_CASE("longest cycle enumeration") {
  CHECK(enumerate_longest_cycles(graphs::cycle(5), 100).cycles.size() == 1);
  CHECK(enumerate_longest_cycles(graphs::complete(4), 100).cycles.size() == 3);
  const CycleList p = enumerate_longest_cycles(petersen(), 10000);
  CHECK_FALSE(p.truncated);
  CHECK(static_cast<int>(p.cycles.size()) == oracle::count_cycles_of_length(petersen(), 9));
  CHECK(p.cycles.size() == 20);
  for (const Cycle& c : p.cycles) {
    CHECK(c.length() == 9);
    CHECK(is_valid_cycle(petersen(), c));
  }
  const CycleList capped = enumerate_longest_cycles(petersen(), 5);
  CHECK(capped.truncated);
  CHECK(capped.cycles.size() == 5);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 6, 0.5);
    const CycleList list = enumerate_longest_cycles(g, 100000);
    const int c = oracle::circumference(g);
    if (c >= 3) CHECK(static_cast<int>(list.cycles.size()) == oracle::count_cycles_of_length(g, c));
  }
}

TEST_CASE("longest paths") {
  const Graph g = graphs::cycle(6);
  const auto p = longest_path(g, g.vertices());
  REQUIRE(p);
  CHECK(p->length() == 5);
  CHECK(enumerate_longest_paths(g, g.vertices(), 100).paths.size() == 6);
  CHECK(enumerate_longest_paths(graphs::complete(3), VertexSet::of({0, 1, 2}), 100).paths.size() == 3);
  CHECK(enumerate_longest_paths(graphs::empty(3), VertexSet::of({0, 2}), 100).paths.size() == 2);
  CHECK_FALSE(longest_path(g, VertexSet{}));
  CHECK(longest_path_between(g, 0, 3) == 3);
  CHECK(longest_path_between(g, 0, 1) == 5);
  CHECK(longest_path_between(graphs::empty(2), 0, 1) == -1);
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph h = random_graph(rng, 3 + trial % 6, 0.4);
    const Vertex u = 0;
    const Vertex v = h.order() - 1;
    CHECK(longest_path_between(h, u, v) == oracle::longest_path_between(h, u, v));
  }
}

TEST_CASE("invariant report and relabelling") {
  const InvariantReport r = compute_invariants(petersen());
  CHECK(r.n == 10);
  CHECK(r.delta == 3);
  CHECK(r.kappa == 3);
  CHECK(r.circumference == 9);
  CHECK(r.toughness == frac(4, 3));
  CHECK_FALSE(r.hamiltonian);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 7;
    const Graph g = random_graph(rng, n, 0.5);
    const Graph h = relabel(g, shuffled(rng, n));
    const InvariantReport a = compute_invariants(g);
    const InvariantReport b = compute_invariants(h);
    CHECK(a.delta == b.delta);
    CHECK(a.kappa == b.kappa);
    CHECK(a.circumference == b.circumference);
    CHECK(a.toughness == b.toughness);
    CHECK(a.hamiltonian == b.hamiltonian);
    CHECK(a.kappa <= a.delta);
    CHECK(a.circumference <= a.n);
    if (a.toughness > frac(1, 1) && g.size() < n * (n - 1) / 2) CHECK(a.kappa >= 3);
  }
}
