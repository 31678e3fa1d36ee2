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
#ifndef RAHT_ORDERING_HPP_
#define RAHT_ORDERING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "raht/error.hpp"
#include "raht/transform.hpp"

namespace raht {

// Wire values are stored in the stream header.
enum class OrderingMode : std::uint8_t { kTraversal = 0, kDepth = 1, kWeight = 2 };

inline constexpr OrderingMode kAllOrderingModes[] = {OrderingMode::kTraversal, OrderingMode::kDepth,
                                                     OrderingMode::kWeight};

std::string_view to_string(OrderingMode mode);
std::optional<OrderingMode> parse_ordering_mode(std::string_view name);
std::optional<OrderingMode> ordering_mode_from_wire(std::uint8_t value);

// Maps encode position -> traversal index (forward) and back (inverse).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> forward);

  std::size_t size() const noexcept { return forward_.size(); }
  std::span<const std::uint32_t> forward() const noexcept { return forward_; }
  std::span<const std::uint32_t> inverse() const noexcept { return inverse_; }

  // out[i] = values[forward[i]]: traversal order -> encode order.
  template <typename T>
  std::vector<T> apply(std::span<const T> values) const {
    check_length(values.size());
    std::vector<T> out;
    out.reserve(values.size());
    for (std::uint32_t t : forward_) out.push_back(values[t]);
    return out;
  }

  // Inverse of apply: encode order -> traversal order.
  template <typename T>
  std::vector<T> unapply(std::span<const T> values) const {
    check_length(values.size());
    std::vector<T> out;
    out.reserve(values.size());
    for (std::uint32_t e : inverse_) out.push_back(values[e]);
    return out;
  }

 private:
  void check_length(std::size_t n) const {
    if (n != forward_.size()) {
      throw Error(ErrorKind::kLengthMismatch, "permutation length differs from value count");
    }
  }

  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

// DC first, then high-passes by the mode's key; ties go to the lower
// traversal index. Only geometry metadata is consulted.
Permutation make_permutation(OrderingMode mode, std::span<const CoefficientInfo> metadata);

}  // namespace raht

#endif  // RAHT_ORDERING_HPP_
