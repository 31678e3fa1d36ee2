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
#ifndef RAHT_MORTON_HPP_
#define RAHT_MORTON_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace raht {

class VoxelCloud;

using GridPoint = std::array<std::uint32_t, 3>;

// Interleaves x, y, z bits from the most significant level down; within each
// triplet x is the most significant bit.
std::uint64_t morton_encode(std::uint32_t x, std::uint32_t y, std::uint32_t z, int depth);
GridPoint morton_decode(std::uint64_t code, int depth);

enum class StepKind : std::uint8_t { kPair, kPromote };

// One operation at a binary merge level. Sources index the working array of
// the level below (finer), dst indexes the working array after the level.
struct MergeStep {
  int level = 0;
  StepKind kind = StepKind::kPromote;
  std::uint32_t src_a = 0;
  std::uint32_t src_b = 0;  // meaningful only for kPair
  std::uint32_t dst = 0;
  std::uint64_t w_a = 0;
  std::uint64_t w_b = 0;  // 0 for kPromote
  // Pair steps only: emission position of the high-pass in the root-first,
  // left-to-right walk of the merge tree (1-based; 0 is the DC).
  std::uint32_t traversal_index = 0;

  friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

// The full geometry-derived merge recursion, levels 3L (finest) down to 1.
class MergeSchedule {
 public:
  int depth() const noexcept { return depth_; }
  int num_levels() const noexcept { return 3 * depth_; }
  std::size_t n_voxels() const noexcept { return n_voxels_; }
  std::size_t n_highpass() const noexcept { return n_highpass_; }

  // Steps executed at `level`, in left-to-right order.
  std::span<const MergeStep> level_steps(int level) const;
  std::span<const MergeStep> steps() const noexcept { return steps_; }

  // Working array size after `level` executed (size before the finest level
  // is n_voxels).
  std::size_t size_after(int level) const;

  std::uint64_t root_weight() const noexcept { return n_voxels_; }

  // Canonical byte serialization; equal schedules serialize identically.
  std::vector<std::uint8_t> serialize() const;
  std::uint64_t fingerprint() const;

  friend MergeSchedule build_schedule(int depth, std::span<const std::uint64_t> mortons);

 private:
  int depth_ = 0;
  std::size_t n_voxels_ = 0;
  std::size_t n_highpass_ = 0;
  std::vector<MergeStep> steps_;
  // Steps are stored finest level first; level l occupies
  // [offsets_[3L - l], offsets_[3L - l + 1]).
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> sizes_after_;
};

MergeSchedule build_schedule(int depth, std::span<const std::uint64_t> mortons);
MergeSchedule build_schedule(const VoxelCloud& cloud);

}  // namespace raht

#endif  // RAHT_MORTON_HPP_
