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

#include "toughcycles/toughcycles.h"

#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "tc/enumerate.hpp"
#include "tc/error.hpp"
#include "tc/graph6.hpp"
#include "tc/report.hpp"

struct tc_graph {
  tc::Graph g;
};

struct tc_sweep {
  tc::SweepConfig config;
  std::optional<std::string> text;
  std::optional<tc::SweepReport> report;
};

namespace {

thread_local std::string last_error;

tc_status status_of(tc::ErrorCode code) {
  using tc::ErrorCode;
  switch (code) {
    case ErrorCode::graph6_header:
    case ErrorCode::graph6_length_prefix:
    case ErrorCode::graph6_character:
    case ErrorCode::graph6_body_length:
    case ErrorCode::graph6_padding:
    case ErrorCode::edge_list_syntax:
      return TC_ERR_PARSE;
    case ErrorCode::too_many_vertices:
    case ErrorCode::domain:
      return TC_ERR_DOMAIN;
    case ErrorCode::hypothesis:
    case ErrorCode::pattern_mismatch:
    case ErrorCode::no_attachments:
      return TC_ERR_HYPOTHESIS;
    case ErrorCode::io:
      return TC_ERR_IO;
    case ErrorCode::invalid_argument:
    case ErrorCode::invalid_cycle:
    case ErrorCode::invalid_path:
      return TC_ERR_INVALID_ARGUMENT;
    case ErrorCode::construction:
      return TC_ERR_INTERNAL;
  }
  return TC_ERR_INTERNAL;
}

tc_status failure(tc_status s, const char* what) {
  last_error = what;
  return s;
}

template <typename F>
tc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TC_OK;
  } catch (const tc::Error& e) {
    return failure(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return failure(TC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return failure(TC_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define TC_REQUIRE(cond)                                                            \
  do {                                                                              \
    if (!(cond)) return failure(TC_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

std::optional<tc::Theorem> theorem_of(tc_theorem t) {
  switch (t) {
    case TC_THEOREM_A: return tc::Theorem::A;
    case TC_THEOREM_B: return tc::Theorem::B;
    case TC_THEOREM_T1: return tc::Theorem::T1;
  }
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "0.1.0"; }

const char* tc_last_error(void) { return last_error.c_str(); }

void tc_string_free(char* s) { delete[] s; }

tc_status tc_graph_from_graph6(const char* text, tc_graph** out) {
  TC_REQUIRE(text && out);
  return guarded([&] { *out = new tc_graph{tc::parse_graph6(text)}; });
}

tc_status tc_graph_from_edge_list(const char* text, tc_graph** out) {
  TC_REQUIRE(text && out);
  return guarded([&] { *out = new tc_graph{tc::parse_edge_list(text)}; });
}

void tc_graph_free(tc_graph* g) { delete g; }

int tc_graph_order(const tc_graph* g) { return g ? g->g.order() : -1; }

int tc_graph_size(const tc_graph* g) { return g ? g->g.size() : -1; }

tc_status tc_graph_to_graph6(const tc_graph* g, char** out) {
  TC_REQUIRE(g && out);
  return guarded([&] { *out = copy_out(tc::write_graph6(g->g)); });
}

tc_status tc_invariants_json(const tc_graph* g, char** out) {
  TC_REQUIRE(g && out);
  return guarded([&] { *out = copy_out(tc::to_json(tc::compute_invariants(g->g), g->g).dump()); });
}

tc_status tc_analyze_jsonl(const tc_graph* g, char** out, int* failed) {
  TC_REQUIRE(g && out);
  return guarded([&] {
    std::string text;
    int bad = 0;
    for (const auto& record : tc::analyze(g->g)) {
      if (record.value("type", "") == "verdict" && !record.at("holds").get<bool>()) bad = 1;
      text += record.dump();
      text += '\n';
    }
    if (failed) *failed = bad;
    *out = copy_out(text);
  });
}

tc_status tc_verify_json(const tc_graph* g, tc_theorem theorem, char** out, int* violation) {
  TC_REQUIRE(g && out);
  const auto t = theorem_of(theorem);
  if (!t) return failure(TC_ERR_INVALID_ARGUMENT, "theorem must be exactly one of A, B, T1");
  return guarded([&] {
    tc::LazyInvariants inv(g->g);
    const tc::TheoremVerdict v = tc::verify(*t, inv);
    if (violation) *violation = v.status == tc::Status::violation ? 1 : 0;
    *out = copy_out(tc::to_json(v, g->g).dump());
  });
}

tc_status tc_extend_json(const tc_graph* g, const int* start, size_t len, int budget,
                         int best_improvement, char** out) {
  TC_REQUIRE(g && out);
  TC_REQUIRE(start || len == 0);
  return guarded([&] {
    tc::Cycle c;
    if (start) {
      c = tc::Cycle(std::vector<tc::Vertex>(start, start + len));
      tc::require_valid_cycle(g->g, c);
    } else {
      const auto s = tc::shortest_cycle(g->g);
      if (!s) tc::fail(tc::ErrorCode::hypothesis, "graph has no cycle to extend");
      c = *s;
    }
    const tc::ExtendResult r = tc::greedy_extend(g->g, c, budget, best_improvement != 0);
    *out = copy_out(tc::to_json(r, c).dump());
  });
}

tc_status tc_count_graphs(int n, int connected, int workers, uint64_t* out) {
  TC_REQUIRE(out);
  return guarded([&] {
    tc::EnumerationOptions opts;
    opts.connected_only = connected != 0;
    *out = tc::enumerate_graphs(n, opts, tc::effective_workers(workers)).size();
  });
}

tc_status tc_sweep_new(tc_sweep** out) {
  TC_REQUIRE(out);
  return guarded([&] { *out = new tc_sweep{}; });
}

void tc_sweep_free(tc_sweep* s) { delete s; }

tc_status tc_sweep_set_range(tc_sweep* s, int min_n, int max_n) {
  TC_REQUIRE(s);
  s->config.min_n = min_n;
  s->config.max_n = max_n;
  s->config.graph6_file.reset();
  s->text.reset();
  return TC_OK;
}

tc_status tc_sweep_set_graph6_file(tc_sweep* s, const char* path) {
  TC_REQUIRE(s && path);
  s->config.graph6_file = path;
  s->text.reset();
  return TC_OK;
}

tc_status tc_sweep_set_graph6_text(tc_sweep* s, const char* text) {
  TC_REQUIRE(s && text);
  s->text = text;
  s->config.graph6_file.reset();
  return TC_OK;
}

tc_status tc_sweep_set_theorems(tc_sweep* s, unsigned mask) {
  TC_REQUIRE(s);
  if ((mask & ~7U) != 0) return failure(TC_ERR_INVALID_ARGUMENT, "unknown theorem flag");
  s->config.theorems.clear();
  if (mask & TC_THEOREM_A) s->config.theorems.push_back(tc::Theorem::A);
  if (mask & TC_THEOREM_B) s->config.theorems.push_back(tc::Theorem::B);
  if (mask & TC_THEOREM_T1) s->config.theorems.push_back(tc::Theorem::T1);
  return TC_OK;
}

tc_status tc_sweep_set_lemmas(tc_sweep* s, int enabled) {
  TC_REQUIRE(s);
  s->config.lemmas = enabled != 0;
  return TC_OK;
}

tc_status tc_sweep_set_workers(tc_sweep* s, int workers) {
  TC_REQUIRE(s && workers > 0);
  s->config.workers = workers;
  return TC_OK;
}

tc_status tc_sweep_set_regular(tc_sweep* s, int degree) {
  TC_REQUIRE(s && degree >= -1);
  s->config.regular = degree;
  return TC_OK;
}

tc_status tc_sweep_set_allow_slow(tc_sweep* s, int enabled) {
  TC_REQUIRE(s);
  s->config.allow_slow = enabled != 0;
  return TC_OK;
}

tc_status tc_sweep_run(tc_sweep* s) {
  TC_REQUIRE(s);
  return guarded([&] {
    s->report.reset();
    if (s->text) {
      std::istringstream in(*s->text);
      s->report = tc::sweep_stream(in, s->config);
    } else {
      s->report = tc::sweep(s->config);
    }
  });
}

tc_status tc_sweep_report_json(const tc_sweep* s, char** out) {
  TC_REQUIRE(s && out);
  if (!s->report) return failure(TC_ERR_INVALID_ARGUMENT, "sweep has not run");
  return guarded([&] { *out = copy_out(tc::to_json(*s->report).dump(2)); });
}

tc_status tc_sweep_report_csv(const tc_sweep* s, char** out) {
  TC_REQUIRE(s && out);
  if (!s->report) return failure(TC_ERR_INVALID_ARGUMENT, "sweep has not run");
  return guarded([&] { *out = copy_out(tc::to_csv(*s->report)); });
}

tc_status tc_sweep_violation_count(const tc_sweep* s, uint64_t* out) {
  TC_REQUIRE(s && out);
  if (!s->report) return failure(TC_ERR_INVALID_ARGUMENT, "sweep has not run");
  *out = s->report->violation_count();
  return TC_OK;
}

}  // extern "C"
