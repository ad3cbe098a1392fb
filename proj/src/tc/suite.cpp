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

#include "tc/suite.hpp"

#include <algorithm>

#include "tc/error.hpp"
#include "tc/extension.hpp"
#include "tc/graph6.hpp"
#include "tc/invariants.hpp"

namespace tc {
namespace {

void record(SuiteStats& stats, const Graph& g, const LemmaVerdict& v) {
  if (!v.hypothesis_met) return;
  InstanceCount& count = stats.checks[v.lemma];
  ++count.instances;
  if (v.holds) return;
  ++count.violations;
  stats.violations.push_back(
      {v.lemma, write_graph6(g), v.bound_required, v.bound_observed, to_string(v.relation)});
}

void check_constructions(const Graph& g, const SegmentDecomposition& d, SuiteStats& stats) {
  std::vector<RewireCandidate> candidates;
  try {
    candidates = rewire_candidates(g, d, g.order());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::construction) throw;
    ++stats.constructions["unknown"].formula_mismatch;
    stats.violations.push_back({"construction", write_graph6(g), 0, 0, e.what()});
    return;
  }
  const int length = d.cycle.length();
  for (const RewireCandidate& r : candidates) {
    ConstructionCount& count = stats.constructions[to_string(r.construction)];
    ++count.built;
    if (r.cycle.length() != r.claimed_length) {
      ++count.formula_mismatch;
      stats.violations.push_back(
          {to_string(r.construction), write_graph6(g), r.claimed_length, r.cycle.length(), "equal"});
    }
    if (r.cycle.length() > length) {
      ++count.longer;
      stats.violations.push_back(
          {to_string(r.construction), write_graph6(g), length, r.cycle.length(), "at_most"});
    }
  }
}

void check_greedy(const Graph& g, int c, SuiteStats& stats) {
  const auto start = shortest_cycle(g);
  if (!start) return;
  ++stats.greedy_runs;
  const ExtendResult r = greedy_extend(g, *start, g.order());
  bool ok = r.iterations <= g.order() && r.cycle.length() <= c && is_valid_cycle(g, r.cycle);
  for (std::size_t i = 1; i < r.lengths.size(); ++i) ok = ok && r.lengths[i] > r.lengths[i - 1];
  if (!ok) stats.violations.push_back({"greedy", write_graph6(g), c, r.cycle.length(), "at_most"});
}

}  // namespace

void SuiteStats::merge(const SuiteStats& other) {
  graphs += other.graphs;
  cycles += other.cycles;
  pairs += other.pairs;
  no_attachments += other.no_attachments;
  truncated += other.truncated;
  greedy_runs += other.greedy_runs;
  for (const auto& [id, c] : other.checks) {
    checks[id].instances += c.instances;
    checks[id].violations += c.violations;
  }
  for (const auto& [id, c] : other.constructions) {
    ConstructionCount& mine = constructions[id];
    mine.built += c.built;
    mine.formula_mismatch += c.formula_mismatch;
    mine.longer += c.longer;
  }
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

InstanceCount SuiteStats::family(const std::string& name) const {
  InstanceCount out;
  for (const auto& [id, c] : checks) {
    if (lemma_family(id) != name) continue;
    out.instances += c.instances;
    out.violations += c.violations;
  }
  return out;
}

std::uint64_t SuiteStats::construction_failures() const {
  std::uint64_t total = 0;
  for (const auto& [id, c] : constructions) total += c.formula_mismatch + c.longer;
  return total;
}

void run_lemma_suite(const Graph& g, SuiteStats& stats) {
  if (g.order() < 4 || !is_connected(g)) return;
  const InvariantReport report = compute_invariants(g);
  if (report.circumference < 3 || report.circumference == g.order()) {
    if (report.circumference >= 3) check_greedy(g, report.circumference, stats);
    return;
  }
  ++stats.graphs;
  const CycleList cycles = enumerate_longest_cycles(g, kEnumerationCap);
  if (cycles.truncated) ++stats.truncated;
  for (const Cycle& c : cycles.cycles) {
    ++stats.cycles;
    const PathList paths = enumerate_longest_paths(g, g.vertices() - c.vertex_set(), kEnumerationCap);
    if (paths.truncated) ++stats.truncated;
    record(stats, g, check_lemma3(g, c, paths.paths, report.kappa, report.delta));
    for (const Path& forward : paths.paths) {
      std::vector<Path> orientations{forward};
      if (forward.length() > 0) orientations.push_back(forward.reversed());
      for (const Path& p : orientations) {
        ++stats.pairs;
        record(stats, g, check_lemma1(g, c, p));
        for (const auto& v : check_lemma2(g, c, p)) record(stats, g, v);
        SegmentDecomposition d;
        try {
          d = decompose(g, c, p);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::no_attachments) throw;
          ++stats.no_attachments;
          continue;
        }
        for (const auto& v : check_claims_1_2(g, d)) record(stats, g, v);
        for (const auto& v : check_claims_3_4(report, d, false)) record(stats, g, v);
        for (const auto& v : check_segment_floor(d)) record(stats, g, v);
        check_constructions(g, d, stats);
      }
    }
  }
  check_greedy(g, report.circumference, stats);
}

}  // namespace tc
