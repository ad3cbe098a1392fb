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
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tc/suite.hpp"
#include "tc/theorems.hpp"

namespace tc {

struct SweepConfig {
  // Internal source: every connected graph with min_n <= n <= max_n.
  int min_n = 1;
  int max_n = 0;
  // graph6 source instead of the enumerator (one record per line).
  std::optional<std::string> graph6_file;
  std::vector<Theorem> theorems{Theorem::T1};
  bool lemmas = false;
  int workers = 1;
  // Only d-regular graphs; the enumerator prunes to maximum degree d.
  int regular = -1;
  // Required for an unrestricted n = 10 run.
  bool allow_slow = false;
};

struct SweepCounts {
  std::uint64_t seen = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t holds = 0;
  std::uint64_t exceptions = 0;
  std::uint64_t violations = 0;
  std::uint64_t tough_boundary = 0;  // T1 graphs with tau == 1 exactly

  void add(const SweepCounts& other);
};

struct SweepRecord {
  Theorem theorem = Theorem::T1;
  int n = 0;
  std::string graph6;
  int bound_required = 0;
  int bound_observed = 0;
  bool confirmed = true;  // reproduced by the plain oracles
  auto operator<=>(const SweepRecord&) const = default;
};

struct RejectedRecord {
  std::size_t line = 0;  // 1-based
  std::string record;
  std::string reason;
  auto operator<=>(const RejectedRecord&) const = default;
};

struct SweepReport {
  SweepConfig config;
  std::string source = "internal";  // or "graph6"
  int workers_used = 1;
  double elapsed_seconds = 0;
  std::uint64_t processed = 0;
  std::map<std::pair<Theorem, int>, SweepCounts> counts;
  std::vector<SweepRecord> violations;  // sorted
  std::vector<SweepRecord> exceptions;  // sorted
  std::vector<RejectedRecord> rejected;  // by line
  std::optional<SuiteStats> suite;

  SweepCounts total(Theorem t) const;
  std::uint64_t violation_count() const;  // theorem and lemma-suite violations
};

// TOUGH_CYCLES_WORKERS, when set to a positive integer, replaces `requested`.
int effective_workers(int requested);

// Fails with invalid_argument on a bad configuration (range outside 1..10,
// n = 10 without allow_slow or a degree filter, no theorems) and with io
// when the graph6 file cannot be read. Malformed records are rejected and
// listed, not fatal.
SweepReport sweep(const SweepConfig& config);
SweepReport sweep_stream(std::istream& in, const SweepConfig& config);

}  // namespace tc
