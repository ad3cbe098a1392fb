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

#include "tc/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "tc/enumerate.hpp"
#include "tc/error.hpp"
#include "tc/graph6.hpp"

namespace tc {
namespace {

// Each worker owns a contiguous slice of task ids and takes from its front;
// an idle worker steals the back half of the largest remaining slice.
class WorkStealingPool {
 public:
  explicit WorkStealingPool(int workers) : workers_(std::max(1, workers)) {}

  void run(std::size_t tasks, const std::function<void(int, std::size_t)>& body) {
    const int w = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers_), std::max<std::size_t>(tasks, 1)));
    if (w == 1) {
      for (std::size_t i = 0; i < tasks; ++i) body(0, i);
      return;
    }
    slices_ = std::deque<Slice>(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) {
      Slice& s = slices_[static_cast<std::size_t>(i)];
      s.begin = tasks * static_cast<std::size_t>(i) / static_cast<std::size_t>(w);
      s.end = tasks * static_cast<std::size_t>(i + 1) / static_cast<std::size_t>(w);
    }
    std::vector<std::thread> threads;
    for (int i = 0; i < w; ++i) {
      threads.emplace_back([this, i, &body] {
        std::size_t task = 0;
        while (take(i, task) || steal(i, task)) body(i, task);
      });
    }
    for (auto& t : threads) t.join();
  }

  int size() const { return workers_; }

 private:
  struct Slice {
    std::mutex mu;
    std::size_t begin = 0;
    std::size_t end = 0;
  };

  bool take(int i, std::size_t& task) {
    Slice& s = slices_[static_cast<std::size_t>(i)];
    std::lock_guard lock(s.mu);
    if (s.begin == s.end) return false;
    task = s.begin++;
    return true;
  }

  bool steal(int i, std::size_t& task) {
    for (;;) {
      int victim = -1;
      std::size_t most = 0;
      for (std::size_t j = 0; j < slices_.size(); ++j) {
        std::lock_guard lock(slices_[j].mu);
        const std::size_t left = slices_[j].end - slices_[j].begin;
        if (left > most) {
          most = left;
          victim = static_cast<int>(j);
        }
      }
      if (victim < 0) return false;
      std::size_t begin = 0;
      std::size_t end = 0;
      {
        Slice& v = slices_[static_cast<std::size_t>(victim)];
        std::lock_guard lock(v.mu);
        if (v.begin == v.end) continue;
        const std::size_t half = (v.end - v.begin + 1) / 2;
        end = v.end;
        begin = v.end - half;
        v.end = begin;
      }
      Slice& mine = slices_[static_cast<std::size_t>(i)];
      std::lock_guard lock(mine.mu);
      mine.begin = begin + 1;
      mine.end = end;
      task = begin;
      return true;
    }
  }

  int workers_;
  std::deque<Slice> slices_;
};

struct Partial {
  std::uint64_t processed = 0;
  std::map<std::pair<Theorem, int>, SweepCounts> counts;
  std::vector<SweepRecord> violations;
  std::vector<SweepRecord> exceptions;
  std::vector<RejectedRecord> rejected;
  SuiteStats suite;
};

void evaluate(const Graph& g, const SweepConfig& config, Partial& out) {
  ++out.processed;
  LazyInvariants inv(g);
  for (Theorem t : config.theorems) {
    const TheoremVerdict v = verify(t, inv);
    SweepCounts& c = out.counts[{t, g.order()}];
    ++c.seen;
    if (v.tough_boundary) ++c.tough_boundary;
    switch (v.status) {
      case Status::vacuous: ++c.vacuous; break;
      case Status::holds: ++c.holds; break;
      case Status::exception_petersen:
        ++c.exceptions;
        out.exceptions.push_back({t, g.order(), write_graph6(g), v.bound_required, v.bound_observed.value_or(0), true});
        break;
      case Status::violation:
        ++c.violations;
        out.violations.push_back({t, g.order(), write_graph6(g), v.bound_required, v.bound_observed.value_or(0),
                                  reverify_violation(g, v)});
        break;
    }
  }
  if (config.lemmas) run_lemma_suite(g, out.suite);
}

bool regular_of(const Graph& g, int d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

void validate(const SweepConfig& config, bool internal) {
  if (config.theorems.empty() && !config.lemmas) {
    fail(ErrorCode::invalid_argument, "nothing to check: no theorems and no lemma suite");
  }
  if (!internal) return;
  if (config.max_n < 1 || config.max_n > kEnumerationMaxOrder) {
    fail(ErrorCode::invalid_argument, "max n must be in 1..10 (larger orders need a graph6 stream)");
  }
  if (config.min_n < 1 || config.min_n > config.max_n) {
    fail(ErrorCode::invalid_argument, "min n must be in 1..max n");
  }
  if (config.max_n == kEnumerationMaxOrder && config.regular < 0 && !config.allow_slow) {
    fail(ErrorCode::invalid_argument,
         "an unrestricted n = 10 sweep covers about 11.7 million graphs and takes hours; "
         "set allow_slow (CLI: --i-know-this-is-slow) to proceed");
  }
}

SweepReport finish(const SweepConfig& config, int workers, std::vector<Partial>& parts,
                   std::chrono::steady_clock::time_point start) {
  SweepReport r;
  r.config = config;
  r.workers_used = workers;
  if (config.lemmas) r.suite.emplace();
  for (Partial& p : parts) {
    r.processed += p.processed;
    for (const auto& [key, c] : p.counts) r.counts[key].add(c);
    r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
    r.exceptions.insert(r.exceptions.end(), p.exceptions.begin(), p.exceptions.end());
    r.rejected.insert(r.rejected.end(), p.rejected.begin(), p.rejected.end());
    if (r.suite) r.suite->merge(p.suite);
  }
  std::sort(r.violations.begin(), r.violations.end());
  std::sort(r.exceptions.begin(), r.exceptions.end());
  std::sort(r.rejected.begin(), r.rejected.end());
  if (r.suite) std::sort(r.suite->violations.begin(), r.suite->violations.end());
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SweepReport sweep_lines(const std::vector<std::string>& lines, const SweepConfig& config,
                        std::chrono::steady_clock::time_point start) {
  WorkStealingPool pool(effective_workers(config.workers));
  std::vector<Partial> parts(static_cast<std::size_t>(pool.size()));
  pool.run(lines.size(), [&](int w, std::size_t i) {
    Partial& out = parts[static_cast<std::size_t>(w)];
    const std::string& line = lines[i];
    Graph g;
    try {
      g = parse_graph6(line);
      if (config.regular >= 0 && !regular_of(g, config.regular)) return;
      Partial attempt;
      evaluate(g, config, attempt);
      out.processed += attempt.processed;
      for (const auto& [key, c] : attempt.counts) out.counts[key].add(c);
      out.violations.insert(out.violations.end(), attempt.violations.begin(), attempt.violations.end());
      out.exceptions.insert(out.exceptions.end(), attempt.exceptions.begin(), attempt.exceptions.end());
      out.suite.merge(attempt.suite);
    } catch (const Error& e) {
      out.rejected.push_back({i + 1, line.substr(0, 80), e.what()});
    }
  });
  return finish(config, pool.size(), parts, start);
}

}  // namespace

void SweepCounts::add(const SweepCounts& o) {
  seen += o.seen;
  vacuous += o.vacuous;
  holds += o.holds;
  exceptions += o.exceptions;
  violations += o.violations;
  tough_boundary += o.tough_boundary;
}

SweepCounts SweepReport::total(Theorem t) const {
  SweepCounts out;
  for (const auto& [key, c] : counts) {
    if (key.first == t) out.add(c);
  }
  return out;
}

std::uint64_t SweepReport::violation_count() const {
  std::uint64_t total = violations.size();
  if (suite) total += suite->violations.size();
  return total;
}

int effective_workers(int requested) {
  if (const char* env = std::getenv("TOUGH_CYCLES_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return std::max(1, requested);
}

SweepReport sweep_stream(std::istream& in, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  validate(config, false);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) fail(ErrorCode::io, "error while reading the graph6 stream");
  // Blank lines are separators, not records; keep numbering by position.
  std::vector<std::string> records;
  std::vector<std::size_t> numbers;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(lines[i]);
    numbers.push_back(i + 1);
  }
  SweepReport r = sweep_lines(records, config, start);
  r.source = "graph6";
  for (RejectedRecord& rej : r.rejected) rej.line = numbers[rej.line - 1];
  return r;
}

SweepReport sweep(const SweepConfig& config) {
  if (config.graph6_file) {
    std::ifstream in(*config.graph6_file);
    if (!in) fail(ErrorCode::io, "cannot open " + *config.graph6_file);
    return sweep_stream(in, config);
  }
  const auto start = std::chrono::steady_clock::now();
  validate(config, true);
  WorkStealingPool pool(effective_workers(config.workers));
  std::vector<Partial> parts(static_cast<std::size_t>(pool.size()));
  EnumerationOptions opts;
  opts.max_degree = config.regular;
  auto wanted = [&](const Graph& g) { return config.regular < 0 || regular_of(g, config.regular); };

  std::vector<Graph> level;
  if (config.min_n == 1) {
    if (wanted(Graph(1))) evaluate(Graph(1), config, parts[0]);
    level = {Graph(1)};
  } else {
    level = enumerate_graphs(config.min_n - 1, opts, pool.size());
  }
  for (int n = std::max(2, config.min_n); n <= config.max_n; ++n) {
    const bool keep = n < config.max_n;
    std::vector<std::vector<Graph>> children(keep ? level.size() : 0);
    pool.run(level.size(), [&](int w, std::size_t i) {
      std::vector<Graph> kids = canonical_children(level[i], opts);
      for (const Graph& g : kids) {
        if (wanted(g)) evaluate(g, config, parts[static_cast<std::size_t>(w)]);
      }
      if (keep) children[i] = std::move(kids);
    });
    if (!keep) break;
    std::vector<Graph> next;
    for (auto& part : children) {
      for (auto& g : part) next.push_back(std::move(g));
    }
    level = std::move(next);
  }
  return finish(config, pool.size(), parts, start);
}

}  // namespace tc
