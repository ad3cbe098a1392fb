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

#include "tc/report.hpp"

#include <sstream>

#include "tc/error.hpp"
#include "tc/graph6.hpp"

namespace tc {
namespace {

using nlohmann::json;

json vertices(std::span<const Vertex> vs) { return json(std::vector<Vertex>(vs.begin(), vs.end())); }

json counts_json(const SweepCounts& c) {
  return {{"seen", c.seen},         {"vacuous", c.vacuous},
          {"holds", c.holds},       {"exceptions", c.exceptions},
          {"violations", c.violations}, {"tau_equal_one", c.tough_boundary}};
}

json record_json(const SweepRecord& r) {
  return {{"theorem", to_string(r.theorem)}, {"n", r.n}, {"graph6", r.graph6},
          {"bound_required", r.bound_required}, {"bound_observed", r.bound_observed},
          {"confirmed", r.confirmed}};
}

}  // namespace

json to_json(const ExactRational& r) {
  if (r.is_infinite()) return {{"infinite", true}, {"num", nullptr}, {"den", nullptr}, {"text", "inf"}};
  return {{"infinite", false}, {"num", r.num()}, {"den", r.den()}, {"text", r.to_string()}};
}

json to_json(const InvariantReport& r, const Graph& g) {
  json j = {{"graph6", write_graph6(g)},
            {"n", r.n},
            {"delta", r.delta},
            {"kappa", r.kappa},
            {"circumference", r.circumference},
            {"toughness", to_json(r.toughness)},
            {"hamiltonian", r.hamiltonian},
            {"circumference_witness", vertices(r.circumference_witness.vertices())}};
  if (r.toughness_witness) {
    j["toughness_witness"] = std::vector<Vertex>(r.toughness_witness->begin(), r.toughness_witness->end());
  } else {
    j["toughness_witness"] = nullptr;
  }
  return j;
}

json to_json(const TheoremVerdict& v, const Graph& g) {
  json j = {{"graph6", write_graph6(g)},
            {"theorem", to_string(v.theorem)},
            {"status", to_string(v.status)},
            {"bound_required", v.bound_required},
            {"bound_observed", nullptr},
            {"toughness", nullptr},
            {"tau_equal_one", v.tough_boundary}};
  if (v.bound_observed) j["bound_observed"] = *v.bound_observed;
  if (v.toughness) j["toughness"] = to_json(*v.toughness);
  return j;
}

json to_json(const LemmaVerdict& v, const Graph& g) {
  return {{"type", "verdict"},
          {"lemma", v.lemma},
          {"graph6", write_graph6(g)},
          {"hypothesis_met", v.hypothesis_met},
          {"bound_required", v.bound_required},
          {"bound_observed", v.bound_observed},
          {"relation", to_string(v.relation)},
          {"holds", v.holds},
          {"witness", v.witness},
          {"cycle", vertices(v.cycle.vertices())},
          {"path", vertices(v.path.vertices())}};
}

json to_json(const SegmentDecomposition& d) {
  json segments = json::array();
  for (const Segment& s : d.segments) {
    segments.push_back({{"from", s.from}, {"to", s.to}, {"length", s.length}, {"interior", s.interior}});
  }
  return {{"type", "decomposition"},
          {"cycle", vertices(d.cycle.vertices())},
          {"path", vertices(d.path.vertices())},
          {"xi", d.xi},
          {"segments", segments},
          {"p_bar", d.p_bar},
          {"s", d.s()},
          {"sigma1", d.sigma1},
          {"sigma2", d.sigma2},
          {"shared", d.shared},
          {"equal_neighborhoods", d.equal_neighborhoods()}};
}

json to_json(const ExtendResult& r, const Cycle& start) {
  return {{"start", vertices(start.vertices())},
          {"cycle", vertices(r.cycle.vertices())},
          {"length", r.cycle.length()},
          {"iterations", r.iterations},
          {"lengths", r.lengths}};
}

json to_json(const SuiteStats& s) {
  json checks = json::object();
  for (const auto& [id, c] : s.checks) checks[id] = {{"instances", c.instances}, {"violations", c.violations}};
  json families = json::object();
  for (const char* f : kLemmaFamilies) {
    const InstanceCount c = s.family(f);
    families[f] = {{"instances", c.instances}, {"violations", c.violations}};
  }
  json constructions = json::object();
  for (const auto& [id, c] : s.constructions) {
    constructions[id] = {{"built", c.built}, {"formula_mismatch", c.formula_mismatch}, {"longer", c.longer}};
  }
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"check", v.check}, {"graph6", v.graph6}, {"bound_required", v.bound_required},
                          {"bound_observed", v.bound_observed}, {"relation", v.relation}});
  }
  return {{"graphs", s.graphs},       {"cycles", s.cycles},
          {"pairs", s.pairs},         {"no_attachments", s.no_attachments},
          {"truncated", s.truncated}, {"greedy_runs", s.greedy_runs},
          {"families", families},     {"checks", checks},
          {"constructions", constructions}, {"violations", violations}};
}

json to_json(const SweepReport& r) {
  const SweepConfig& c = r.config;
  json theorems = json::array();
  for (Theorem t : c.theorems) theorems.push_back(to_string(t));
  json config = {{"source", r.source},
                 {"theorems", theorems},
                 {"lemmas", c.lemmas},
                 {"workers", r.workers_used},
                 {"regular", c.regular < 0 ? json(nullptr) : json(c.regular)},
                 {"allow_slow", c.allow_slow}};
  if (r.source == "graph6") {
    config["file"] = c.graph6_file ? json(*c.graph6_file) : json(nullptr);
  } else {
    config["min_n"] = c.min_n;
    config["max_n"] = c.max_n;
  }
  json counts = json::array();
  for (const auto& [key, cnt] : r.counts) {
    json row = counts_json(cnt);
    row["theorem"] = to_string(key.first);
    row["n"] = key.second;
    counts.push_back(row);
  }
  json totals = json::object();
  for (Theorem t : c.theorems) totals[to_string(t)] = counts_json(r.total(t));
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(record_json(v));
  json exceptions = json::array();
  for (const auto& v : r.exceptions) exceptions.push_back(record_json(v));
  json rejected = json::array();
  for (const auto& v : r.rejected) {
    rejected.push_back({{"line", v.line}, {"record", v.record}, {"reason", v.reason}});
  }
  json j = {{"schema", kReportSchema},
            {"config", config},
            {"elapsed_seconds", r.elapsed_seconds},
            {"processed", r.processed},
            {"rejected_count", r.rejected.size()},
            {"rejected", rejected},
            {"counts", counts},
            {"totals", totals},
            {"violation_count", r.violation_count()},
            {"violations", violations},
            {"exceptions", exceptions}};
  j["lemma_suite"] = r.suite ? to_json(*r.suite) : json(nullptr);
  return j;
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "theorem,n,seen,vacuous,holds,exceptions,violations\n";
  for (const auto& [key, c] : r.counts) {
    out << to_string(key.first) << ',' << key.second << ',' << c.seen << ',' << c.vacuous << ','
        << c.holds << ',' << c.exceptions << ',' << c.violations << '\n';
  }
  return out.str();
}

std::vector<json> analyze(const Graph& g) {
  std::vector<json> out;
  const InvariantReport report = compute_invariants(g);
  const Cycle& c = report.circumference_witness;
  const auto p = report.circumference >= 3 ? longest_path_outside(g, c) : std::nullopt;
  std::optional<SegmentDecomposition> d;
  if (p) {
    try {
      d = decompose(g, c, *p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_attachments) throw;
    }
  }
  if (d) {
    out.push_back(to_json(*d));
  } else {
    out.push_back({{"type", "decomposition"},
                   {"cycle", vertices(c.vertices())},
                   {"path", p ? vertices(p->vertices()) : json(nullptr)},
                   {"reason", !p ? (report.circumference < 3 ? "no cycle of length >= 3"
                                                             : "cycle covers every vertex")
                                 : "path ends have no neighbour on the cycle"}});
  }
  std::vector<LemmaVerdict> verdicts;
  if (p) {
    verdicts.push_back(check_lemma1(g, c, *p));
    for (auto& v : check_lemma2(g, c, *p)) verdicts.push_back(std::move(v));
  }
  if (d) {
    for (auto& v : check_claims_1_2(g, *d)) verdicts.push_back(std::move(v));
    for (auto& v : check_claims_3_4(report, *d)) verdicts.push_back(std::move(v));
    for (auto& v : check_segment_floor(*d)) verdicts.push_back(std::move(v));
  }
  verdicts.push_back(check_lemma3(g));
  for (const auto& v : verdicts) out.push_back(to_json(v, g));
  return out;
}

}  // namespace tc
