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

#include <optional>
#include <string>

#include "tc/graph.hpp"
#include "tc/invariants.hpp"
#include "tc/rational.hpp"

namespace tc {

enum class Theorem { A, B, T1 };
const char* to_string(Theorem t) noexcept;
// "A", "B" or "T1"; fails with invalid_argument otherwise.
Theorem parse_theorem(const std::string& s);

enum class Status { holds, vacuous, exception_petersen, violation };
const char* to_string(Status s) noexcept;

struct TheoremVerdict {
  Theorem theorem = Theorem::T1;
  Status status = Status::vacuous;
  int bound_required = 0;               // min{n, 2 delta + k}
  std::optional<int> bound_observed;    // c, when it had to be computed
  std::optional<ExactRational> toughness;
  bool tough_boundary = false;          // T1 only: tau == 1 exactly
};

// Invariants computed on demand, each at most once. The sweep shares one
// instance between the theorems it checks on a graph.
class LazyInvariants {
 public:
  explicit LazyInvariants(const Graph& g) : g_(g) {}
  const Graph& graph() const { return g_; }
  int delta();
  int kappa();
  int circumference();
  const ExactRational& toughness();
  bool complete();
  bool has_toughness() const { return tau_.has_value(); }

 private:
  const Graph& g_;
  std::optional<int> delta_;
  std::optional<int> kappa_;
  std::optional<int> circ_;
  std::optional<ExactRational> tau_;
};

// Evaluation order: delta, kappa, the cheap prefilters, c, tau.
TheoremVerdict verify(Theorem t, LazyInvariants& inv);
TheoremVerdict verify_theoremA(const Graph& g);
TheoremVerdict verify_theoremB(const Graph& g);
TheoremVerdict verify_theorem1(const Graph& g);

// Recomputes a violation with the plain oracles (full toughness enumeration,
// subset-DP circumference). True when the violation is reproduced.
bool reverify_violation(const Graph& g, const TheoremVerdict& v);

}  // namespace tc
