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

#include "tc/theorems.hpp"

#include <algorithm>

#include "tc/canonical.hpp"
#include "tc/error.hpp"

namespace tc {
namespace {

// c >= min{n, 2 delta + k}
int slack(Theorem t) {
  switch (t) {
    case Theorem::A: return 0;
    case Theorem::B: return 2;
    case Theorem::T1: return 4;
  }
  return 0;
}

bool hypothesis(Theorem t, const ExactRational& tau, int kappa) {
  switch (t) {
    case Theorem::A: return kappa >= 2;
    case Theorem::B: return tau >= ExactRational(1, 1);
    case Theorem::T1: return tau > ExactRational(1, 1);
  }
  return false;
}

bool is_petersen(const Graph& g) {
  return g.order() == 10 && g.size() == 15 && is_isomorphic(g, petersen());
}

}  // namespace

const char* to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::A: return "A";
    case Theorem::B: return "B";
    case Theorem::T1: return "T1";
  }
  return "?";
}

Theorem parse_theorem(const std::string& s) {
  if (s == "A") return Theorem::A;
  if (s == "B") return Theorem::B;
  if (s == "T1") return Theorem::T1;
  fail(ErrorCode::invalid_argument, "unknown theorem '" + s + "' (expected A, B or T1)");
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::holds: return "holds";
    case Status::vacuous: return "vacuous";
    case Status::exception_petersen: return "exception_petersen";
    case Status::violation: return "VIOLATION";
  }
  return "?";
}

int LazyInvariants::delta() {
  if (!delta_) delta_ = g_.order() == 0 ? 0 : min_degree(g_);
  return *delta_;
}

int LazyInvariants::kappa() {
  if (!kappa_) kappa_ = connectivity(g_);
  return *kappa_;
}

int LazyInvariants::circumference() {
  if (!circ_) circ_ = tc::circumference(g_).length;
  return *circ_;
}

const ExactRational& LazyInvariants::toughness() {
  if (!tau_) tau_ = tc::toughness(g_).value;
  return *tau_;
}

bool LazyInvariants::complete() {
  const int n = g_.order();
  return g_.size() == n * (n - 1) / 2;
}

TheoremVerdict verify(Theorem t, LazyInvariants& inv) {
  TheoremVerdict v;
  v.theorem = t;
  const int n = inv.graph().order();
  v.bound_required = std::min(n, 2 * inv.delta() + slack(t));
  const int kappa = inv.kappa();
  if (t == Theorem::A && kappa < 2) return v;
  // tau <= kappa / 2 off complete graphs, so kappa bounds the hypothesis.
  const int kappa_floor = t == Theorem::B ? 2 : 3;
  if (t != Theorem::A && kappa < kappa_floor && !inv.complete()) {
    if (t == Theorem::T1 && kappa == 2) {
      v.toughness = inv.toughness();
      v.tough_boundary = *v.toughness == ExactRational(1, 1);
    }
    return v;
  }
  v.bound_observed = inv.circumference();
  if (t != Theorem::A) {
    v.toughness = inv.toughness();
    if (!hypothesis(t, *v.toughness, kappa)) {
      v.tough_boundary = t == Theorem::T1 && *v.toughness == ExactRational(1, 1);
      return v;
    }
  }
  if (*v.bound_observed >= v.bound_required) {
    v.status = Status::holds;
  } else if (t == Theorem::T1 && is_petersen(inv.graph())) {
    v.status = Status::exception_petersen;
  } else {
    v.status = Status::violation;
  }
  return v;
}

TheoremVerdict verify_theoremA(const Graph& g) {
  LazyInvariants inv(g);
  return verify(Theorem::A, inv);
}

TheoremVerdict verify_theoremB(const Graph& g) {
  LazyInvariants inv(g);
  return verify(Theorem::B, inv);
}

TheoremVerdict verify_theorem1(const Graph& g) {
  LazyInvariants inv(g);
  return verify(Theorem::T1, inv);
}

bool reverify_violation(const Graph& g, const TheoremVerdict& v) {
  if (v.status != Status::violation) return false;
  const int n = g.order();
  const int c = n <= 20 ? circumference_by_subset_dp(g) : circumference(g).length;
  if (c >= std::min(n, 2 * min_degree(g) + slack(v.theorem))) return false;
  if (v.theorem == Theorem::A) return connectivity(g) >= 2;
  const ExactRational tau = toughness_by_enumeration(g).value;
  if (!hypothesis(v.theorem, tau, 0)) return false;
  return v.theorem != Theorem::T1 || !is_petersen(g);
}

}  // namespace tc
