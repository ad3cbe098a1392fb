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

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "tc/error.hpp"

namespace tc {

// Non-negative exact fraction in lowest terms, or +infinity. Toughness is
// always such a value, and every comparison against it is made here.
class ExactRational {
 public:
  constexpr ExactRational() = default;
  ExactRational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator");
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }
  static constexpr ExactRational infinity() {
    ExactRational r;
    r.infinite_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }
  static ExactRational integer(std::uint64_t v) { return {v, 1}; }

  constexpr bool is_infinite() const { return infinite_; }
  // Meaningless for infinity (reported as 1/0).
  constexpr std::uint64_t num() const { return num_; }
  constexpr std::uint64_t den() const { return den_; }

  friend std::strong_ordering operator<=>(const ExactRational& a,
                                          const ExactRational& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (infinite_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  bool infinite_ = false;
};

}  // namespace tc
