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
#include <string_view>

#include "tc/graph.hpp"

namespace tc {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// big-endian, each byte offset by 63. Trailing whitespace is ignored and an
// optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// One "u v" pair per line, 0-based, whitespace separated; '#' starts a
// comment. A line holding a single integer declares an (isolated) vertex.
// The vertex count is one more than the largest id mentioned.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace tc
