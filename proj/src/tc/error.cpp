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

#include "tc/error.hpp"

namespace tc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::graph6_header: return "graph6_header";
    case ErrorCode::graph6_length_prefix: return "graph6_length_prefix";
    case ErrorCode::graph6_character: return "graph6_character";
    case ErrorCode::graph6_body_length: return "graph6_body_length";
    case ErrorCode::graph6_padding: return "graph6_padding";
    case ErrorCode::too_many_vertices: return "too_many_vertices";
    case ErrorCode::edge_list_syntax: return "edge_list_syntax";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::invalid_cycle: return "invalid_cycle";
    case ErrorCode::invalid_path: return "invalid_path";
    case ErrorCode::no_attachments: return "no_attachments";
    case ErrorCode::pattern_mismatch: return "pattern_mismatch";
    case ErrorCode::construction: return "construction";
    case ErrorCode::hypothesis: return "hypothesis";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace tc
