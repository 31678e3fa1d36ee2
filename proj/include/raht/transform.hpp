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
#ifndef RAHT_TRANSFORM_HPP_
#define RAHT_TRANSFORM_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "raht/cloud_io.hpp"
#include "raht/morton.hpp"

namespace raht {

struct Butterfly {
  double lo;
  double hi;
};

// Weighted orthonormal 2x2 map; `a` is the Morton-earlier sibling.
//   lo = ( sqrt(w1) a + sqrt(w2) b) / sqrt(w1 + w2)
//   hi = (-sqrt(w2) a + sqrt(w1) b) / sqrt(w1 + w2)
Butterfly butterfly_forward(double a, double b, std::uint64_t w1, std::uint64_t w2);
// Transpose of butterfly_forward; returns {a, b} in the `lo`/`hi` slots.
Butterfly butterfly_inverse(double lo, double hi, std::uint64_t w1, std::uint64_t w2);

// Geometry-only description of one coefficient.
struct CoefficientInfo {
  std::uint64_t weight = 0;
  int depth = 0;  // 0 for the DC, else the binary merge level
  std::uint32_t traversal_index = 0;
  friend bool operator==(const CoefficientInfo&, const CoefficientInfo&) = default;
};

// Coefficients of all three channels, stored in traversal order: entry i of
// `info` and of each `values[c]` has traversal_index i. Entry 0 is the DC.
struct CoefficientSet {
  std::vector<CoefficientInfo> info;
  std::array<std::vector<double>, 3> values;

  std::size_t size() const noexcept { return info.size(); }
};

// Metadata for a schedule, in traversal order.
std::vector<CoefficientInfo> coefficient_info(const MergeSchedule& schedule);

// Single-channel transforms. Values are in Morton order.
std::vector<double> forward_channel(std::span<const double> values, const MergeSchedule& schedule);
std::vector<double> inverse_channel(std::span<const double> coeffs, const MergeSchedule& schedule);

CoefficientSet forward(const VoxelCloud& cloud, const MergeSchedule& schedule);
// Returns Y, U, V in Morton order.
std::array<std::vector<double>, 3> inverse(const CoefficientSet& coeffs,
                                           const MergeSchedule& schedule);

}  // namespace raht

#endif  // RAHT_TRANSFORM_HPP_
