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

// Command-line front end. Results go to stdout, diagnostics to stderr.
// Exit status: 0 no violations, 1 violations found, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "toughcycles/toughcycles.h"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct InputError {
  std::string message;
};

class Owned {
 public:
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { tc_string_free(s_); }
  char** out() { return &s_; }
  const char* get() const { return s_ ? s_ : ""; }

 private:
  char* s_ = nullptr;
};

struct GraphHandle {
  tc_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(GraphHandle&& o) noexcept : g(o.g) { o.g = nullptr; }
  GraphHandle(const GraphHandle&) = delete;
  ~GraphHandle() { tc_graph_free(g); }
};

void check(tc_status s, const std::string& context) {
  if (s != TC_OK) throw InputError{context + ": " + tc_last_error()};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A graph6 string, or a file of graph6 lines, or a file holding one edge list.
std::vector<GraphHandle> load_graphs(const std::string& arg) {
  std::vector<GraphHandle> out;
  std::ifstream file(arg);
  if (!file) {
    GraphHandle h;
    check(tc_graph_from_graph6(arg.c_str(), &h.g), "graph6 '" + arg + "'");
    out.push_back(std::move(h));
    return out;
  }
  std::stringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!trim(line).empty()) lines.push_back(trim(line));
  }
  if (lines.empty()) throw InputError{arg + ": empty file"};
  GraphHandle first;
  if (tc_graph_from_graph6(lines.front().c_str(), &first.g) != TC_OK) {
    GraphHandle h;
    check(tc_graph_from_edge_list(text.c_str(), &h.g), arg + " (neither graph6 nor an edge list)");
    out.push_back(std::move(h));
    return out;
  }
  out.push_back(std::move(first));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    GraphHandle h;
    check(tc_graph_from_graph6(lines[i].c_str(), &h.g), arg + ":" + std::to_string(i + 1));
    out.push_back(std::move(h));
  }
  return out;
}

GraphHandle load_one(const std::string& arg) {
  auto graphs = load_graphs(arg);
  if (graphs.size() != 1) throw InputError{arg + ": expected a single graph"};
  return std::move(graphs.front());
}

unsigned theorem_mask(const std::vector<std::string>& names) {
  unsigned mask = 0;
  for (const auto& list : names) {
    std::istringstream in(list);
    for (std::string name; std::getline(in, name, ',');) {
      name = trim(name);
      if (name == "A") {
        mask |= TC_THEOREM_A;
      } else if (name == "B") {
        mask |= TC_THEOREM_B;
      } else if (name == "T1") {
        mask |= TC_THEOREM_T1;
      } else if (!name.empty()) {
        throw InputError{"unknown theorem '" + name + "' (expected A, B or T1)"};
      }
    }
  }
  return mask;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw InputError{"cannot write " + path};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness and circumference checks on small graphs"};
  app.set_version_flag("--version", tc_version());
  app.require_subcommand(1);

  std::string input;
  auto* invariants = app.add_subcommand("invariants", "print the invariant report as JSON");
  invariants->add_option("graph", input, "graph6 string or file (graph6 lines or an edge list)")->required();

  auto* analyze = app.add_subcommand("analyze", "decomposition and lemma verdicts as JSON lines");
  analyze->add_option("graph", input, "graph6 string or file")->required();

  std::vector<std::string> verify_theorems;
  auto* verify = app.add_subcommand("verify", "theorem verdicts as JSON lines");
  verify->add_option("graph", input, "graph6 string or file")->required();
  verify->add_option("--theorem", verify_theorems, "A, B or T1 (default: all three)");

  int max_n = 0;
  int min_n = 1;
  std::string from_file;
  std::vector<std::string> sweep_theorems;
  bool lemmas = false;
  int workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string out_path;
  std::string csv_path;
  int regular = -1;
  bool slow = false;
  auto* sweep = app.add_subcommand("sweep", "verify every connected graph in a range, or a graph6 stream");
  auto* max_opt = sweep->add_option("--max-n", max_n, "largest order (internal enumerator, <= 10)");
  sweep->add_option("--min-n", min_n, "smallest order")->needs(max_opt);
  auto* file_opt = sweep->add_option("--from-file", from_file, "graph6 file ('-' for stdin)");
  max_opt->excludes(file_opt);
  sweep->add_option("--theorems", sweep_theorems, "subset of A,B,T1 (default: T1)");
  sweep->add_flag("--lemmas", lemmas, "run the lemma and construction suite on every graph");
  sweep->add_option("--workers", workers, "worker threads (TOUGH_CYCLES_WORKERS overrides)")
      ->check(CLI::Range(1, 1 << 20));
  sweep->add_option("--out", out_path, "write the JSON report here instead of stdout");
  sweep->add_option("--csv", csv_path, "write the per-n CSV summary here");
  sweep->add_option("--regular", regular, "only d-regular graphs")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--i-know-this-is-slow", slow, "allow the unrestricted n = 10 sweep");

  int budget = 100;
  std::vector<int> start;
  bool best = false;
  auto* extend = app.add_subcommand("extend", "greedy cycle extension by the rewiring moves");
  extend->add_option("graph", input, "graph6 string or file")->required();
  extend->add_option("--budget", budget, "maximum iterations")->check(CLI::Range(1, 1 << 20));
  extend->add_option("--start", start, "start cycle as vertex ids (default: a shortest cycle)")
      ->delimiter(',');
  extend->add_flag("--best", best, "take the longest candidate instead of the first improvement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*invariants) {
      for (const auto& h : load_graphs(input)) {
        Owned json;
        check(tc_invariants_json(h.g, json.out()), "invariants");
        std::cout << json.get() << '\n';
      }
      return kOk;
    }
    if (*analyze) {
      const GraphHandle h = load_one(input);
      Owned jsonl;
      int failed = 0;
      check(tc_analyze_jsonl(h.g, jsonl.out(), &failed), "analyze");
      std::cout << jsonl.get();
      return failed ? kViolations : kOk;
    }
    if (*verify) {
      const unsigned mask = verify_theorems.empty() ? 7U : theorem_mask(verify_theorems);
      int violations = 0;
      for (const auto& h : load_graphs(input)) {
        for (tc_theorem t : {TC_THEOREM_A, TC_THEOREM_B, TC_THEOREM_T1}) {
          if ((mask & t) == 0) continue;
          Owned json;
          int violation = 0;
          check(tc_verify_json(h.g, t, json.out(), &violation), "verify");
          violations += violation;
          std::cout << json.get() << '\n';
        }
      }
      return violations ? kViolations : kOk;
    }
    if (*sweep) {
      if (max_n == 0 && from_file.empty()) throw InputError{"sweep needs --max-n or --from-file"};
      tc_sweep* raw = nullptr;
      check(tc_sweep_new(&raw), "sweep");
      std::unique_ptr<tc_sweep, void (*)(tc_sweep*)> s(raw, tc_sweep_free);
      if (from_file == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        check(tc_sweep_set_graph6_text(s.get(), buf.str().c_str()), "stdin");
      } else if (!from_file.empty()) {
        check(tc_sweep_set_graph6_file(s.get(), from_file.c_str()), "--from-file");
      } else {
        check(tc_sweep_set_range(s.get(), min_n, max_n), "--max-n");
      }
      const unsigned mask = sweep_theorems.empty() ? unsigned{TC_THEOREM_T1} : theorem_mask(sweep_theorems);
      check(tc_sweep_set_theorems(s.get(), mask), "--theorems");
      check(tc_sweep_set_lemmas(s.get(), lemmas), "--lemmas");
      check(tc_sweep_set_workers(s.get(), workers), "--workers");
      check(tc_sweep_set_regular(s.get(), regular), "--regular");
      check(tc_sweep_set_allow_slow(s.get(), slow), "--i-know-this-is-slow");
      check(tc_sweep_run(s.get()), "sweep");
      Owned json;
      check(tc_sweep_report_json(s.get(), json.out()), "report");
      if (out_path.empty()) {
        std::cout << json.get() << '\n';
      } else {
        write_file(out_path, std::string(json.get()) + "\n");
      }
      if (!csv_path.empty()) {
        Owned csv;
        check(tc_sweep_report_csv(s.get(), csv.out()), "report");
        write_file(csv_path, csv.get());
      }
      std::uint64_t violations = 0;
      check(tc_sweep_violation_count(s.get(), &violations), "report");
      std::cerr << "sweep finished: " << violations << " violation(s)\n";
      return violations ? kViolations : kOk;
    }
    if (*extend) {
      const GraphHandle h = load_one(input);
      Owned json;
      check(tc_extend_json(h.g, start.empty() ? nullptr : start.data(), start.size(), budget, best,
                           json.out()),
            "extend");
      std::cout << json.get() << '\n';
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kUsage;
  }
  return kUsage;
}
