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

#include <string>
#include <vector>

#include "json.hpp"
#include "tc/extension.hpp"
#include "tc/invariants.hpp"
#include "tc/structure.hpp"
#include "tc/sweep.hpp"
#include "tc/theorems.hpp"

namespace tc {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const ExactRational& r);
nlohmann::json to_json(const InvariantReport& r, const Graph& g);
nlohmann::json to_json(const TheoremVerdict& v, const Graph& g);
nlohmann::json to_json(const LemmaVerdict& v, const Graph& g);
nlohmann::json to_json(const SegmentDecomposition& d);
nlohmann::json to_json(const ExtendResult& r, const Cycle& start);
nlohmann::json to_json(const SuiteStats& s);
nlohmann::json to_json(const SweepReport& r);

// theorem,n,seen,vacuous,holds,exceptions,violations
std::string to_csv(const SweepReport& r);

// The analyze records, one JSON document per line: the decomposition of a
// longest cycle against a longest path outside it, then every lemma verdict.
std::vector<nlohmann::json> analyze(const Graph& g);

}  // namespace tc
