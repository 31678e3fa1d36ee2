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
#include "raht/transform.hpp"

#include <cmath>
#include <string>

#include "raht/error.hpp"

namespace raht {
namespace {

void check_leaf_count(std::size_t n, const MergeSchedule& schedule) {
  if (n != schedule.n_voxels()) {
    throw Error(ErrorKind::kScheduleMismatch, "schedule has " +
                                                  std::to_string(schedule.n_voxels()) +
                                                  " leaves, input has " + std::to_string(n));
  }
}

}  // namespace

Butterfly butterfly_forward(double a, double b, std::uint64_t w1, std::uint64_t w2) {
  const double s1 = std::sqrt(static_cast<double>(w1));
  const double s2 = std::sqrt(static_cast<double>(w2));
  const double norm = std::sqrt(static_cast<double>(w1 + w2));
  return {(s1 * a + s2 * b) / norm, (s1 * b - s2 * a) / norm};
}

Butterfly butterfly_inverse(double lo, double hi, std::uint64_t w1, std::uint64_t w2) {
  const double s1 = std::sqrt(static_cast<double>(w1));
  const double s2 = std::sqrt(static_cast<double>(w2));
  const double norm = std::sqrt(static_cast<double>(w1 + w2));
  return {(s1 * lo - s2 * hi) / norm, (s2 * lo + s1 * hi) / norm};
}

std::vector<CoefficientInfo> coefficient_info(const MergeSchedule& schedule) {
  std::vector<CoefficientInfo> info(schedule.n_voxels());
  info[0] = {schedule.root_weight(), 0, 0};
  for (const MergeStep& s : schedule.steps()) {
    if (s.kind != StepKind::kPair) continue;
    info[s.traversal_index] = {s.w_a + s.w_b, s.level, s.traversal_index};
  }
  return info;
}

std::vector<double> forward_channel(std::span<const double> values,
                                    const MergeSchedule& schedule) {
  check_leaf_count(values.size(), schedule);
  std::vector<double> coeffs(values.size(), 0.0);
  std::vector<double> cur(values.begin(), values.end());
  std::vector<double> next;
  next.reserve(cur.size());
  for (int level = schedule.num_levels(); level >= 1; --level) {
    next.assign(schedule.size_after(level), 0.0);
    for (const MergeStep& s : schedule.level_steps(level)) {
      if (s.kind == StepKind::kPromote) {
        next[s.dst] = cur[s.src_a];
      } else {
        const Butterfly out = butterfly_forward(cur[s.src_a], cur[s.src_b], s.w_a, s.w_b);
        next[s.dst] = out.lo;
        coeffs[s.traversal_index] = out.hi;
      }
    }
    cur.swap(next);
  }
  coeffs[0] = cur[0];
  return coeffs;
}

std::vector<double> inverse_channel(std::span<const double> coeffs,
                                    const MergeSchedule& schedule) {
  check_leaf_count(coeffs.size(), schedule);
  std::vector<double> cur{coeffs[0]};
  std::vector<double> prev;
  for (int level = 1; level <= schedule.num_levels(); ++level) {
    prev.assign(schedule.size_after(level + 1), 0.0);
    for (const MergeStep& s : schedule.level_steps(level)) {
      if (s.kind == StepKind::kPromote) {
        prev[s.src_a] = cur[s.dst];
      } else {
        const Butterfly ab =
            butterfly_inverse(cur[s.dst], coeffs[s.traversal_index], s.w_a, s.w_b);
        prev[s.src_a] = ab.lo;
        prev[s.src_b] = ab.hi;
      }
    }
    cur.swap(prev);
  }
  return cur;
}

CoefficientSet forward(const VoxelCloud& cloud, const MergeSchedule& schedule) {
  check_leaf_count(cloud.size(), schedule);
  CoefficientSet set;
  set.info = coefficient_info(schedule);
  for (int c = 0; c < 3; ++c) {
    const std::vector<double> ch = cloud.channel(c);
    set.values[static_cast<std::size_t>(c)] = forward_channel(ch, schedule);
  }
  return set;
}

std::array<std::vector<double>, 3> inverse(const CoefficientSet& coeffs,
                                           const MergeSchedule& schedule) {
  check_leaf_count(coeffs.size(), schedule);
  if (coeffs.info != coefficient_info(schedule)) {
    throw Error(ErrorKind::kScheduleMismatch, "coefficient metadata does not match schedule");
  }
  std::array<std::vector<double>, 3> out;
  for (std::size_t c = 0; c < 3; ++c) out[c] = inverse_channel(coeffs.values[c], schedule);
  return out;
}

}  // namespace raht
