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

#include <span>
#include <string>
#include <vector>

#include "tc/cycle.hpp"
#include "tc/graph.hpp"
#include "tc/invariants.hpp"

namespace tc {

// Cap on longest-cycle and longest-path enumerations in the lemma checks.
inline constexpr int kEnumerationCap = 10000;

// I_i = xi_i -C-> xi_{i+1}; `interior` is I_i* in cycle order.
struct Segment {
  Vertex from = 0;
  Vertex to = 0;
  int length = 0;
  std::vector<Vertex> interior;
};

// Elementary segments of C created by N_C(x) u N_C(y), where x and y are
// the ends of a path P in G \ C.
struct SegmentDecomposition {
  Cycle cycle;
  Path path;
  std::vector<Vertex> xi;  // attachments in the cycle's orientation
  std::vector<Segment> segments;
  VertexSet nx;  // N_C(x)
  VertexSet ny;  // N_C(y)
  int p_bar = 0;
  int sigma1 = 0;  // |N_C(x) \ N_C(y)|
  int sigma2 = 0;  // |N_C(y) \ N_C(x)|
  int shared = 0;  // |N_C(x) n N_C(y)|

  int s() const { return static_cast<int>(xi.size()); }
  Vertex x() const { return path.front(); }
  Vertex y() const { return path.back(); }
  bool equal_neighborhoods() const { return nx == ny; }
  int next(int i) const { return (i + 1) % s(); }
  // Index of the segment whose interior holds v, or -1.
  int segment_of(Vertex v) const;
  // Index i with xi[i] == v, or -1.
  int attachment_index(Vertex v) const;
};

// Fails with domain for degenerate cycles, invalid_cycle / invalid_path for
// objects that are not valid in g, invalid_path when P meets C and
// no_attachments when neither end of P has a neighbour on C.
SegmentDecomposition decompose(const Graph& g, const Cycle& c, const Path& p);

// z -> w with z in I_a*, w in I_b*, internal vertices outside C and P.
struct IntermediatePath {
  Path path;
  int seg_a = 0;
  int seg_b = 0;
};

// All intermediate paths between I_a and I_b with at most `max_internal`
// internal vertices, oriented from I_a to I_b, sorted by vertex sequence.
std::vector<IntermediatePath> intermediate_paths(const Graph& g,
                                                 const SegmentDecomposition& d,
                                                 int a, int b, int max_internal);
// Fails with invalid_argument if some path is longer than one edge.
bool has_independent_pair(std::span<const IntermediatePath> paths);

enum class Relation { at_least, at_most, equal };
const char* to_string(Relation r) noexcept;

struct LemmaVerdict {
  std::string lemma;  // "lemma1", "lemma2.a1", "claim3.4", ...
  bool hypothesis_met = false;
  int bound_required = 0;
  int bound_observed = 0;
  Relation relation = Relation::at_least;
  bool holds = true;
  Cycle cycle;
  Path path;
  std::vector<Vertex> witness;  // lemma-specific: segment ids or vertices
};

// Family name used for coverage counts: "lemma2.a3" -> "lemma2".
std::string lemma_family(const std::string& lemma);

// In strict mode each checker first confirms that C is a longest cycle and
// P a longest path of G \ C, failing with hypothesis otherwise.
LemmaVerdict check_lemma1(const Graph& g, const Cycle& c, const Path& p,
                          bool strict = false);
std::vector<LemmaVerdict> check_lemma2(const Graph& g, const Cycle& c,
                                       const Path& p, bool strict = false);
// Over every longest cycle of g (enumeration capped as for the suites).
LemmaVerdict check_lemma3(const Graph& g);
// One longest cycle, given every longest path of G \ C.
LemmaVerdict check_lemma3(const Graph& g, const Cycle& c,
                          std::span<const Path> longest_paths, int kappa,
                          int delta);

std::vector<LemmaVerdict> check_claims_1_2(const Graph& g,
                                           const SegmentDecomposition& d);
// require_tough keeps the tau > 1 gate. Without it only the arithmetic
// gates remain (extreme C, p_bar, s, c <= 2 delta + 3).
std::vector<LemmaVerdict> check_claims_3_4(const InvariantReport& report,
                                           const SegmentDecomposition& d,
                                           bool require_tough = true);
// |I_i| >= p_bar + 2 whenever the ends of I_i allow P to be inserted.
std::vector<LemmaVerdict> check_segment_floor(const SegmentDecomposition& d);

// Every pair of vertices joined by a path of length >= t. Fails with
// hypothesis when g is not hamiltonian or a witness has degree < t, and
// with invalid_argument when |witnesses| != t.
bool check_voss(const Graph& g, int t, VertexSet witnesses);

}  // namespace tc
