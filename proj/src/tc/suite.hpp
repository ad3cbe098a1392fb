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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tc/graph.hpp"
#include "tc/structure.hpp"

namespace tc {

struct InstanceCount {
  std::uint64_t instances = 0;  // verdicts with the hypothesis met
  std::uint64_t violations = 0;
};

struct ConstructionCount {
  std::uint64_t built = 0;
  std::uint64_t formula_mismatch = 0;
  std::uint64_t longer = 0;  // longer than the verified-longest cycle
};

struct SuiteViolation {
  std::string check;  // lemma id, construction name or "greedy"
  std::string graph6;
  int bound_required = 0;
  int bound_observed = 0;
  std::string relation;
  auto operator<=>(const SuiteViolation&) const = default;
};

struct SuiteStats {
  std::uint64_t graphs = 0;          // graphs with 3 <= c < n
  std::uint64_t cycles = 0;          // longest cycles examined
  std::uint64_t pairs = 0;           // oriented (C, P) pairs decomposed
  std::uint64_t no_attachments = 0;  // pairs whose path ends miss C
  std::uint64_t truncated = 0;       // enumerations that hit the cap
  std::uint64_t greedy_runs = 0;
  std::map<std::string, InstanceCount> checks;  // by verdict id
  std::map<std::string, ConstructionCount> constructions;
  std::vector<SuiteViolation> violations;

  void merge(const SuiteStats& other);
  // Sum over verdict ids of one family ("lemma2" covers lemma2.a1..a3).
  InstanceCount family(const std::string& name) const;
  std::uint64_t construction_failures() const;
};

inline constexpr const char* kLemmaFamilies[] = {"lemma1", "lemma2", "lemma3", "claim1",
                                                  "claim2", "claim3", "claim4"};

// Every longest cycle C of g, every longest path P of G \ C in both
// orientations: Lemmas 1-3, Claims 1-4 (arithmetic gates), the segment
// floor, and every rewiring construction, whose output must match its
// formula and may not beat |C|. Also one greedy_extend run from a shortest
// cycle, which must be monotone, take at most n iterations and stay <= c.
void run_lemma_suite(const Graph& g, SuiteStats& stats);

}  // namespace tc
