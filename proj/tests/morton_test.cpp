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
#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "raht/cloud_io.hpp"
#include "raht/error.hpp"
#include "raht/morton.hpp"
#include "test_util.hpp"

namespace raht {
namespace {

TEST(Morton, KnownCodes) {
  EXPECT_EQ(morton_encode(0, 0, 0, 5), 0u);
  EXPECT_EQ(morton_encode(1, 0, 1, 1), 5u);
  EXPECT_EQ(morton_decode(5, 1), (GridPoint{1, 0, 1}));
  EXPECT_EQ(morton_decode(0, 7), (GridPoint{0, 0, 0}));
  // x=2,y=1,z=3 at L=2: triplets (1,0,1)(0,1,1) -> 101 011
  EXPECT_EQ(morton_encode(2, 1, 3, 2), 0b101011u);
}

TEST(Morton, ExhaustiveRoundTripSmallDepths) {
  for (int depth = 1; depth <= 4; ++depth) {
    const std::uint32_t side = 1u << depth;
    std::vector<bool> hit(std::size_t{1} << (3 * depth), false);
    for (std::uint32_t x = 0; x < side; ++x)
      for (std::uint32_t y = 0; y < side; ++y)
        for (std::uint32_t z = 0; z < side; ++z) {
          const std::uint64_t c = morton_encode(x, y, z, depth);
          ASSERT_FALSE(hit[c]);
          hit[c] = true;
          ASSERT_EQ(morton_decode(c, depth), (GridPoint{x, y, z}));
        }
  }
  for (std::uint64_t c = 0; c < 64; ++c) {
    const GridPoint p = morton_decode(c, 2);
    EXPECT_EQ(morton_encode(p[0], p[1], p[2], 2), c);
  }
}

TEST(Morton, RandomRoundTripUpToDepth7AndMax) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const int depth = 1 + static_cast<int>(rng() % 7);
    const std::uint32_t mask = (1u << depth) - 1;
    const GridPoint p{static_cast<std::uint32_t>(rng()) & mask,
                      static_cast<std::uint32_t>(rng()) & mask,
                      static_cast<std::uint32_t>(rng()) & mask};
    ASSERT_EQ(morton_decode(morton_encode(p[0], p[1], p[2], depth), depth), p);
  }
  const std::uint32_t top = (1u << kMaxDepth) - 1;
  EXPECT_EQ(morton_encode(top, top, top, kMaxDepth), (std::uint64_t{1} << 63) - 1);
}

TEST(Morton, RangeErrors) {
  EXPECT_THROW(morton_encode(2, 0, 0, 1), Error);
  EXPECT_THROW(morton_decode(8, 1), Error);
  try {
    morton_decode(64, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCodeOutOfRange);
  }
  try {
    morton_encode(0, 4, 0, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCoordinateOutOfRange);
  }
}

TEST(Schedule, SingleVoxelHasNoPairs) {
  const std::uint64_t codes[] = {6};
  const MergeSchedule s = build_schedule(1, codes);
  EXPECT_EQ(s.n_highpass(), 0u);
  EXPECT_EQ(s.n_voxels(), 1u);
  for (const MergeStep& step : s.steps()) EXPECT_EQ(step.kind, StepKind::kPromote);
}

TEST(Schedule, TwoLeafHandTrace) {
  const std::uint64_t codes[] = {0, 1};
  const MergeSchedule s = build_schedule(1, codes);
  ASSERT_EQ(s.level_steps(3).size(), 1u);
  const MergeStep& pair = s.level_steps(3)[0];
  EXPECT_EQ(pair.kind, StepKind::kPair);
  EXPECT_EQ(pair.w_a, 1u);
  EXPECT_EQ(pair.w_b, 1u);
  for (int level : {2, 1}) {
    ASSERT_EQ(s.level_steps(level).size(), 1u);
    EXPECT_EQ(s.level_steps(level)[0].kind, StepKind::kPromote);
    EXPECT_EQ(s.level_steps(level)[0].w_a, 2u);
  }
  EXPECT_EQ(s.n_highpass(), 1u);
}

TEST(Schedule, PromoteThenPairHandTrace) {
  const std::uint64_t codes[] = {0, 1, 4};
  const MergeSchedule s = build_schedule(1, codes);
  const auto l3 = s.level_steps(3);
  ASSERT_EQ(l3.size(), 2u);
  EXPECT_EQ(l3[0].kind, StepKind::kPair);
  EXPECT_EQ(l3[0].src_a, 0u);
  EXPECT_EQ(l3[0].src_b, 1u);
  EXPECT_EQ(l3[1].kind, StepKind::kPromote);
  EXPECT_EQ(l3[1].src_a, 2u);
  const auto l2 = s.level_steps(2);
  ASSERT_EQ(l2.size(), 2u);
  EXPECT_EQ(l2[0].kind, StepKind::kPromote);
  EXPECT_EQ(l2[1].kind, StepKind::kPromote);
  const auto l1 = s.level_steps(1);
  ASSERT_EQ(l1.size(), 1u);
  EXPECT_EQ(l1[0].kind, StepKind::kPair);
  EXPECT_EQ(l1[0].w_a, 2u);
  EXPECT_EQ(l1[0].w_b, 1u);
  EXPECT_EQ(s.n_highpass(), 2u);
  // Root-first walk: the level-1 pair precedes the level-3 pair.
  EXPECT_EQ(l1[0].traversal_index, 1u);
  EXPECT_EQ(l3[0].traversal_index, 2u);
}

TEST(Schedule, RandomCloudInvariants) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int depth = 1 + static_cast<int>(rng() % 6);
    const std::size_t n = 1 + rng() % 1500;
    const VoxelCloud cloud = testing::random_cloud(rng, depth, n);
    const MergeSchedule s = build_schedule(cloud);
    ASSERT_EQ(s.n_highpass() + 1, cloud.size());
    ASSERT_EQ(s.root_weight(), cloud.size());
    ASSERT_EQ(s.size_after(1), 1u);

    // Replay on codes: pairs are siblings differing exactly in bit (3L - level).
    std::vector<std::uint64_t> cur = cloud.mortons();
    std::vector<std::uint64_t> weights(cur.size(), 1);
    for (int level = s.num_levels(); level >= 1; --level) {
      std::vector<std::uint64_t> next(s.size_after(level));
      std::vector<std::uint64_t> next_w(next.size());
      const int bit = s.num_levels() - level;
      for (const MergeStep& step : s.level_steps(level)) {
        ASSERT_EQ(step.w_a, weights[step.src_a]);
        if (step.kind == StepKind::kPair) {
          const std::uint64_t a = cur[step.src_a] >> bit;
          const std::uint64_t b = cur[step.src_b] >> bit;
          ASSERT_EQ(std::popcount(a ^ b), 1);
          ASSERT_EQ(a ^ b, 1u);
          ASSERT_EQ(step.w_b, weights[step.src_b]);
          next_w[step.dst] = step.w_a + step.w_b;
        } else {
          next_w[step.dst] = step.w_a;
        }
        next[step.dst] = cur[step.src_a];
      }
      cur.swap(next);
      weights.swap(next_w);
    }
    ASSERT_EQ(weights[0], cloud.size());
  }
}

TEST(Schedule, PureFunctionOfGeometry) {
  std::mt19937_64 rng(4);
  const VoxelCloud a = testing::random_cloud(rng, 5, 700);
  std::vector<Voxel> recolored(a.voxels().begin(), a.voxels().end());
  for (Voxel& v : recolored) v.yuv = {1.0, 2.0, 3.0};
  const VoxelCloud b(5, std::move(recolored));
  EXPECT_EQ(build_schedule(a).serialize(), build_schedule(b).serialize());
  EXPECT_EQ(build_schedule(a).fingerprint(), build_schedule(b).fingerprint());
}

}  // namespace
}  // namespace raht
