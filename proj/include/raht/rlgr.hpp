// Copyright 2026 The RAHT-RLGR Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef RAHT_RLGR_HPP_
#define RAHT_RLGR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "raht/bitio.hpp"

namespace raht::rlgr {

// Adaptation constants. Parameters are kept scaled by kScale so that they
// move in fractional steps; k = kP / kScale and kR = kRP / kScale.
inline constexpr int kScale = 4;
inline constexpr int kUp0 = 3;    // no-run mode, zero symbol
inline constexpr int kDown0 = 1;  // no-run mode, nonzero symbol
inline constexpr int kUp1 = 2;    // run mode, complete run
inline constexpr int kDown1 = 1;  // run mode, run broken by a value
inline constexpr int kMaxKP = 32 * kScale;
inline constexpr int kMaxKRP = 32 * kScale;
inline constexpr int kInitialKP = 2 * kScale;
inline constexpr int kInitialKRP = 2 * kScale;

// Unary prefixes of this length or more switch to a raw 32-bit field.
inline constexpr unsigned kEscapeQuotient = 12;
inline constexpr unsigned kEscapeBits = 32;
inline constexpr std::uint64_t kMaxSymbol = 0xFFFFFFFFull;

struct State {
  int kp = kInitialKP;
  int krp = kInitialKRP;

  int k() const noexcept { return kp / kScale; }
  int kr() const noexcept { return krp / kScale; }
  friend bool operator==(const State&, const State&) = default;
};

// Golomb-Rice component with escape.
void gr_encode(BitWriter& out, std::uint64_t value, unsigned kr);
std::uint64_t gr_decode(BitReader& in, unsigned kr);

// `trace`, when given, receives the coder state after each symbol.
std::vector<std::uint8_t> encode(std::span<const std::uint64_t> symbols,
                                 std::vector<State>* trace = nullptr);
std::vector<std::uint64_t> decode(std::span<const std::uint8_t> payload, std::size_t count,
                                  std::vector<State>* trace = nullptr);

// Exact payload size in bits before byte padding.
std::uint64_t encoded_bits(std::span<const std::uint64_t> symbols);

}  // namespace raht::rlgr

#endif  // RAHT_RLGR_HPP_
