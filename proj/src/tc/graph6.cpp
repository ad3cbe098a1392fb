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

#include "tc/graph6.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "tc/error.hpp"

namespace tc {
namespace {

constexpr char kMinChar = 63;
constexpr char kMaxChar = 126;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

int sextet(char c) {
  if (c < kMinChar || c > kMaxChar) {
    fail(ErrorCode::graph6_character,
         "graph6 byte " + std::to_string(static_cast<int>(c)) +
             " outside 63..126");
  }
  return c - kMinChar;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.starts_with(">>") || line.starts_with(":") ||
      line.starts_with("&")) {
    fail(ErrorCode::graph6_header, "sparse6/digraph6 records are not supported");
  }
  if (line.empty()) fail(ErrorCode::graph6_length_prefix, "empty graph6 record");

  std::int64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != kMaxChar) {
    n = sextet(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != kMaxChar) {
    if (line.size() < 4) {
      fail(ErrorCode::graph6_length_prefix, "truncated 4-byte length prefix");
    }
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(line[i]);
    if (n < 63) {
      fail(ErrorCode::graph6_length_prefix, "non-minimal length prefix");
    }
    pos = 4;
  } else {
    if (line.size() < 8) {
      fail(ErrorCode::graph6_length_prefix, "truncated 8-byte length prefix");
    }
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(line[i]);
    if (n < 258048) {
      fail(ErrorCode::graph6_length_prefix, "non-minimal length prefix");
    }
    pos = 8;
  }
  if (n > kMaxVertices) {
    fail(ErrorCode::too_many_vertices,
         "graph6 record has " + std::to_string(n) + " vertices; cap is " +
             std::to_string(kMaxVertices));
  }

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t bytes = (bits + 5) / 6;
  const std::string_view body = line.substr(pos);
  for (char c : body) sextet(c);
  if (static_cast<std::int64_t>(body.size()) != bytes) {
    fail(ErrorCode::graph6_body_length,
         "graph6 body has " + std::to_string(body.size()) + " bytes, expected " +
             std::to_string(bytes));
  }

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = body[static_cast<std::size_t>(k / 6)] - kMinChar;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = body.back() - kMinChar;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      fail(ErrorCode::graph6_padding, "nonzero padding bits in graph6 record");
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kMinChar));
  } else {
    out.push_back(kMaxChar);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kMinChar));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kMinChar));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kMinChar));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = 0;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<int> ids;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                 line[i] == '\r' || line[i] == ',')) {
        ++i;
      }
      if (i >= line.size()) break;
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || value < 0) {
        fail(ErrorCode::edge_list_syntax,
             "line " + std::to_string(line_no) + ": expected a vertex id");
      }
      ids.push_back(value);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (ids.empty()) continue;
    if (ids.size() > 2) {
      fail(ErrorCode::edge_list_syntax,
           "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    for (int id : ids) {
      if (id >= kMaxVertices) {
        fail(ErrorCode::too_many_vertices,
             "line " + std::to_string(line_no) + ": vertex id over cap");
      }
      n = std::max(n, id + 1);
    }
    if (ids.size() == 2) edges.emplace_back(ids[0], ids[1]);
  }
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "# n = " + std::to_string(g.order()) + "\n";
  if (g.order() > 0) out += std::to_string(g.order() - 1) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace tc
