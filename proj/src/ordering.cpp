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
#include "raht/ordering.hpp"

#include <algorithm>
#include <string>

namespace raht {

std::string_view to_string(OrderingMode mode) {
  switch (mode) {
    case OrderingMode::kTraversal: return "traversal";
    case OrderingMode::kDepth: return "depth";
    case OrderingMode::kWeight: return "weight";
  }
  return "unknown";
}

std::optional<OrderingMode> parse_ordering_mode(std::string_view name) {
  for (OrderingMode m : kAllOrderingModes) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<OrderingMode> ordering_mode_from_wire(std::uint8_t value) {
  if (value > static_cast<std::uint8_t>(OrderingMode::kWeight)) return std::nullopt;
  return static_cast<OrderingMode>(value);
}

Permutation::Permutation(std::vector<std::uint32_t> forward)
    : forward_(std::move(forward)), inverse_(forward_.size(), 0) {
  std::vector<bool> seen(forward_.size(), false);
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    const std::uint32_t t = forward_[i];
    if (t >= forward_.size() || seen[t]) {
      throw Error(ErrorKind::kDuplicateTraversalIndex,
                  "permutation is not a bijection at position " + std::to_string(i));
    }
    seen[t] = true;
    inverse_[t] = static_cast<std::uint32_t>(i);
  }
}

Permutation make_permutation(OrderingMode mode, std::span<const CoefficientInfo> metadata) {
  const std::size_t n = metadata.size();
  std::vector<const CoefficientInfo*> by_index(n, nullptr);
  std::size_t dc_count = 0;
  for (const CoefficientInfo& c : metadata) {
    if (c.traversal_index >= n || by_index[c.traversal_index] != nullptr) {
      throw Error(ErrorKind::kDuplicateTraversalIndex,
                  "traversal index " + std::to_string(c.traversal_index) +
                      " repeated or out of range");
    }
    by_index[c.traversal_index] = &c;
    if (c.depth == 0) ++dc_count;
  }
  if (n == 0) return Permutation(std::vector<std::uint32_t>{});
  if (dc_count != 1 || by_index[0]->depth != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "metadata must hold exactly one DC entry at traversal index 0");
  }

  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  auto high = order.begin() + 1;
  switch (mode) {
    case OrderingMode::kTraversal:
      break;
    case OrderingMode::kDepth:
      std::stable_sort(high, order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return by_index[a]->depth < by_index[b]->depth;
      });
      break;
    case OrderingMode::kWeight:
      std::stable_sort(high, order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return by_index[a]->weight > by_index[b]->weight;
      });
      break;
  }
  return Permutation(std::move(order));
}

}  // namespace raht
