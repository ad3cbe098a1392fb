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

#include <vector>

#include "tc/cycle.hpp"
#include "tc/graph.hpp"
#include "tc/structure.hpp"

namespace tc {

enum class Construction {
  segment_insertion,  // xi_i x P y xi_{i+1} in place of I_i
  splice,             // xi_a x P y xi_b <-C- z L w -C-> xi_a
  splice_mirror,
  case_2_1_1,  // crossing pair: xi_a -C-> z1 w1 <-C- w2 z2 -C-> xi_b x P y xi_{b+1} -C-> xi_a
  case_2_1_1_mirror,
  case_2_1_2,  // parallel pair: xi_a -C-> z1 w1 -C-> w2 z2 -C-> xi_b x P y xi_{b+1} -C-> xi_a
  case_2_1_2_mirror,
  case_2_2_prime,         // shared w: xi_a x P y xi_b <-C- z1 w1 -C-> xi_a
  case_2_2_double_prime,  // shared w: xi_a -C-> z2 w1 <-C- xi_{a+1} x P y xi_{b+1} -C-> xi_a
  case_3_prime,           // as 2.2' on the outer edges of a three-edge fan
  case_3_double_prime,
  claim1,  // splice with L = yz
  claim1_mirror,
  claim2_xi_a,  // xi_f x P y xi_b <-C- xi_a y -C-> xi_a^- xi_b^+ -C-> xi_f
  claim2_xi_b,  // xi_f x P y xi_a -C-> xi_b y -C-> xi_a^- xi_b^+ -C-> xi_f
};
const char* to_string(Construction c) noexcept;

// Not implemented as operators: the one-off swap cycles of the p_bar = 0 and
// p_bar = 1 case analysis, e.g. "xi_a x1 xi_{a+1} -C-> w3 w1 w4 -C-> xi_a",
// which move an interior vertex w1 between two consecutive cycle vertices
// adjacent to it and put x1 in its place.

struct RewireCandidate {
  Construction construction = Construction::splice;
  Cycle cycle;
  int claimed_length = 0;    // from the displayed formula
  std::vector<int> segments; // segment indices consumed
  std::vector<Path> paths;   // intermediate paths used
};

// The caller's cycle orientation decides which arcs are dropped; `mirror`
// applies the same construction to the reversed cycle. Every constructor
// builds the vertex sequence, revalidates it in g and checks the measured
// length against the formula, failing with construction on any mismatch.
// Pattern errors (wrong segments, wrong endpoint shape) fail with
// pattern_mismatch; splices need N_C(x) = N_C(y) (hypothesis otherwise).
RewireCandidate insert_path(const Graph& g, const SegmentDecomposition& d, int segment);
RewireCandidate splice_basic(const Graph& g, const SegmentDecomposition& d,
                             const IntermediatePath& l, bool mirror = false);

enum class TwoEdgeVariant {
  case_2_1_1,
  case_2_1_2,
  case_2_2_prime,
  case_2_2_double_prime,
  case_3_prime,
  case_3_double_prime,
};
const char* to_string(TwoEdgeVariant v) noexcept;

RewireCandidate rewire_two_edges(const Graph& g, const SegmentDecomposition& d,
                                 const IntermediatePath& e1, const IntermediatePath& e2,
                                 TwoEdgeVariant variant, bool mirror = false);

// Claim-1 splices for every intermediate edge yz and Claim-2 cycles for
// every triple with xi_a^- xi_b^+ in E(G) and y adjacent to xi_a or xi_b.
std::vector<RewireCandidate> claim_rewires(const Graph& g, const SegmentDecomposition& d);

// Every applicable construction on d, in a fixed order: insertions, splices
// (intermediate paths up to max_internal internal vertices), two-edge
// rewirings, claim rewirings.
std::vector<RewireCandidate> rewire_candidates(const Graph& g, const SegmentDecomposition& d,
                                               int max_internal);

struct ExtendResult {
  Cycle cycle;
  int iterations = 0;
  std::vector<int> lengths;  // length after each iteration, starting value first
};

// Local search: take a longest path outside the current cycle, decompose,
// adopt the first strictly longer candidate (or the longest one with
// best_improvement), repeat until nothing improves or the budget runs out.
ExtendResult greedy_extend(const Graph& g, const Cycle& start, int budget,
                           bool best_improvement = false);

}  // namespace tc
