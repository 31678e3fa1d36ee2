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

#include <random>

#include "raht/error.hpp"
#include "raht/morton.hpp"
#include "raht/ordering.hpp"
#include "raht/quant.hpp"
#include "test_util.hpp"

namespace raht {
namespace {

std::vector<CoefficientInfo> meta(std::vector<std::uint64_t> weights, std::vector<int> depths) {
  std::vector<CoefficientInfo> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out.push_back({weights[i], depths[i], static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<std::uint32_t> forward_of(const Permutation& p) {
  return {p.forward().begin(), p.forward().end()};
}

TEST(Ordering, DcOnlyIsIdentity) {
  const auto m = meta({1}, {0});
  for (OrderingMode mode : kAllOrderingModes) {
    EXPECT_EQ(forward_of(make_permutation(mode, m)), (std::vector<std::uint32_t>{0}));
  }
}

TEST(Ordering, DepthStableSort) {
  const auto m = meta({4, 2, 4, 2}, {0, 3, 1, 2});
  const Permutation p = make_permutation(OrderingMode::kDepth, m);
  EXPECT_EQ(forward_of(p), (std::vector<std::uint32_t>{0, 2, 3, 1}));
  const std::vector<int> values{9, 8, 7, 6};
  EXPECT_EQ(p.apply(std::span<const int>(values)), (std::vector<int>{9, 7, 6, 8}));
}

TEST(Ordering, WeightDescendingStable) {
  const auto m = meta({8, 2, 2, 4}, {0, 2, 2, 1});
  EXPECT_EQ(forward_of(make_permutation(OrderingMode::kWeight, m)),
            (std::vector<std::uint32_t>{0, 3, 1, 2}));
  EXPECT_EQ(forward_of(make_permutation(OrderingMode::kTraversal, m)),
            (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(Ordering, DuplicateTraversalIndex) {
  auto m = meta({4, 2, 2}, {0, 1, 1});
  m[2].traversal_index = 1;
  try {
    make_permutation(OrderingMode::kDepth, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDuplicateTraversalIndex);
  }
}

TEST(Ordering, LengthMismatch) {
  const Permutation p = make_permutation(OrderingMode::kTraversal, meta({2, 2}, {0, 3}));
  const std::vector<double> v{1.0};
  try {
    p.apply(std::span<const double>(v));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLengthMismatch);
  }
}

TEST(Ordering, PropertiesOnRandomGeometry) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const VoxelCloud cloud = testing::random_cloud(rng, 2 + static_cast<int>(rng() % 5),
                                                   1 + rng() % 1500);
    const std::vector<CoefficientInfo> info = coefficient_info(build_schedule(cloud));
    std::vector<double> values(info.size());
    for (double& v : values) v = static_cast<double>(rng() % 1000);
    for (OrderingMode mode : kAllOrderingModes) {
      const Permutation p = make_permutation(mode, info);
      ASSERT_EQ(p.forward()[0], 0u);
      const auto ordered = p.apply(std::span<const CoefficientInfo>(info));
      for (std::size_t i = 2; i < ordered.size(); ++i) {
        if (mode == OrderingMode::kDepth) {
          ASSERT_LE(ordered[i - 1].depth, ordered[i].depth);
          if (ordered[i - 1].depth == ordered[i].depth)
            ASSERT_LT(ordered[i - 1].traversal_index, ordered[i].traversal_index);
        } else if (mode == OrderingMode::kWeight) {
          ASSERT_GE(ordered[i - 1].weight, ordered[i].weight);
        }
      }
      const auto there = p.apply(std::span<const double>(values));
      ASSERT_EQ(p.unapply(std::span<const double>(there)), values);
      for (std::size_t i = 0; i < p.size(); ++i) ASSERT_EQ(p.inverse()[p.forward()[i]], i);
      // Rebuilt from metadata alone, the decoder sees the same permutation.
      const Permutation again = make_permutation(mode, coefficient_info(build_schedule(cloud)));
      ASSERT_EQ(forward_of(again), forward_of(p));
    }
  }
}

TEST(Ordering, ModeNames) {
  EXPECT_EQ(parse_ordering_mode("depth"), OrderingMode::kDepth);
  EXPECT_EQ(parse_ordering_mode("variance"), std::nullopt);
  EXPECT_EQ(ordering_mode_from_wire(2), OrderingMode::kWeight);
  EXPECT_EQ(ordering_mode_from_wire(3), std::nullopt);
}

TEST(Quant, Rounding) {
  const QuantStep ten(10.0);
  EXPECT_EQ(quantize(0.0, ten), 0);
  EXPECT_EQ(quantize(25.0, ten), 3);
  EXPECT_EQ(quantize(-25.0, ten), -3);
  EXPECT_EQ(quantize(24.999, ten), 2);
  EXPECT_EQ(quantize(7.0710678, QuantStep(20.0)), 0);
  EXPECT_EQ(dequantize(0, ten), 0.0);
  EXPECT_EQ(dequantize(3, ten), 30.0);
}

TEST(Quant, NonPositiveStepRejected) {
  EXPECT_THROW(QuantStep(0.0), Error);
  EXPECT_THROW(QuantStep(-1.0), Error);
  EXPECT_THROW(QuantStep(std::nan("")), Error);
}

TEST(Quant, ErrorBoundAndOddSymmetry) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> c(-1e4, 1e4);
  std::uniform_real_distribution<double> qd(0.01, 100.0);
  for (int i = 0; i < 1000000; ++i) {
    const double v = c(rng);
    const QuantStep q(qd(rng));
    const std::int64_t k = quantize(v, q);
    ASSERT_LE(std::fabs(dequantize(k, q) - v), q.value() / 2 * (1 + 1e-12));
    ASSERT_EQ(quantize(-v, q), -k);
  }
}

TEST(Quant, Zigzag) {
  EXPECT_EQ(zigzag(0), 0u);
  EXPECT_EQ(zigzag(-1), 1u);
  EXPECT_EQ(zigzag(1), 2u);
  EXPECT_EQ(zigzag(-2), 3u);
  EXPECT_EQ(zigzag(2), 4u);
  for (std::int64_t q = -1000000; q <= 1000000; ++q) ASSERT_EQ(unzigzag(zigzag(q)), q);
  for (std::uint64_t u = 0; u < 100000; ++u) ASSERT_EQ(zigzag(unzigzag(u)), u);
}

}  // namespace
}  // namespace raht
