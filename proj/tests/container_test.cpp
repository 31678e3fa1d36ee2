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

#include <cmath>
#include <random>

#include "raht/container.hpp"
#include "raht/error.hpp"
#include "raht/metrics.hpp"
#include "raht/rlgr.hpp"
#include "raht/synth.hpp"
#include "test_util.hpp"

namespace raht {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected raht::Error";
  return ErrorKind::kInvariantViolation;
}

double rms_error(const VoxelCloud& a, const VoxelCloud& b, int c) {
  double sse = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i].yuv[static_cast<std::size_t>(c)] - b[i].yuv[static_cast<std::size_t>(c)];
    sse += d * d;
  }
  return std::sqrt(sse / static_cast<double>(a.size()));
}

TEST(Container, HeaderLayoutAndLength) {
  std::mt19937_64 rng(51);
  const VoxelCloud cloud = testing::random_cloud(rng, 4, 200);
  for (bool bundle : {false, true}) {
    const CodecStream s = encode(cloud, QuantStep(10.0), OrderingMode::kWeight, bundle);
    const auto bytes = s.serialize();
    const std::size_t payloads = s.payloads[0].size() + s.payloads[1].size() + s.payloads[2].size();
    EXPECT_EQ(bytes.size(), kHeaderSize + (bundle ? 8 * cloud.size() : 0) + payloads);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "RAHT");
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[5], 4);
    EXPECT_EQ(bytes[6], 2);
    EXPECT_EQ(bytes[7], bundle ? 1 : 0);
    EXPECT_EQ(bytes[16], 200);
    EXPECT_EQ(s.rate_bytes(), kHeaderSize + payloads);
    EXPECT_DOUBLE_EQ(s.bits_per_voxel(), 8.0 * static_cast<double>(kHeaderSize + payloads) / 200.0);
    const CodecStream parsed = CodecStream::parse(bytes);
    EXPECT_EQ(parsed.serialize(), bytes);
  }
}

TEST(Container, RoundTripErrorWithinHalfStep) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const VoxelCloud cloud =
        testing::random_cloud(rng, 3 + static_cast<int>(rng() % 4), 1 + rng() % 1500);
    for (double q : {1.0, 5.0, 10.0, 20.0, 40.0, 64.0}) {
      const CodecStream s = encode(cloud, QuantStep(q), OrderingMode::kDepth);
      const VoxelCloud out = decode(CodecStream::parse(s.serialize()), &cloud);
      ASSERT_EQ(out.mortons(), cloud.mortons());
      for (int c = 0; c < 3; ++c) ASSERT_LE(rms_error(cloud, out, c), q / 2);
    }
  }
}

TEST(Container, OrderingNeverChangesDistortion) {
  std::mt19937_64 rng(53);
  const VoxelCloud cloud = testing::random_cloud(rng, 5, 1000);
  const VoxelCloud t = decode(encode(cloud, QuantStep(20.0), OrderingMode::kTraversal), &cloud);
  for (OrderingMode mode : {OrderingMode::kDepth, OrderingMode::kWeight}) {
    const VoxelCloud o = decode(encode(cloud, QuantStep(20.0), mode), &cloud);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      for (std::size_t c = 0; c < 3; ++c) ASSERT_EQ(o[i].yuv[c], t[i].yuv[c]);
    }
  }
}

TEST(Container, ConstantCloudIsNearlyFree) {
  const RawPointCloud raw = synth::generate({synth::Kind::kConstant, 5, 0.3, 9});
  const VoxelCloud cloud = voxelize(raw, 5);
  const CodecStream s = encode(cloud, QuantStep(40.0), OrderingMode::kDepth);
  for (const auto& p : s.payloads) {
    // One DC symbol plus N-1 zeros; far below one bit per voxel.
    EXPECT_LT(8 * p.size(), cloud.size() / 8);
    const auto symbols = rlgr::decode(p, cloud.size());
    EXPECT_EQ(std::count(symbols.begin() + 1, symbols.end(), 0u),
              static_cast<long>(cloud.size() - 1));
  }
}

TEST(Container, SingleVoxel) {
  const VoxelCloud cloud(2, {{5, {100.0, 120.0, 130.0}}});
  const CodecStream s = encode(cloud, QuantStep(1.0), OrderingMode::kTraversal, true);
  EXPECT_EQ(s.header.n_voxels, 1u);
  const VoxelCloud out = decode(CodecStream::parse(s.serialize()));
  EXPECT_EQ(out[0].morton, 5u);
  EXPECT_NEAR(out[0].yuv[0], 100.0, 0.5);
}

TEST(Container, Deterministic) {
  std::mt19937_64 rng(54);
  const VoxelCloud cloud = testing::random_cloud(rng, 5, 900);
  EXPECT_EQ(encode(cloud, QuantStep(10.0), OrderingMode::kDepth).serialize(),
            encode(cloud, QuantStep(10.0), OrderingMode::kDepth).serialize());
}

TEST(Container, GeometryErrors) {
  std::mt19937_64 rng(55);
  const VoxelCloud cloud = testing::random_cloud(rng, 4, 50);
  const CodecStream s = encode(cloud, QuantStep(10.0), OrderingMode::kDepth);
  std::vector<Voxel> fewer(cloud.voxels().begin(), cloud.voxels().end() - 1);
  const VoxelCloud smaller(4, std::move(fewer));
  EXPECT_EQ(kind_of([&] { decode(s, &smaller); }), ErrorKind::kGeometryMismatch);
  EXPECT_EQ(kind_of([&] { decode(s, nullptr); }), ErrorKind::kMissingGeometry);
  const VoxelCloud deeper(5, std::vector<Voxel>(cloud.voxels().begin(), cloud.voxels().end()));
  EXPECT_EQ(kind_of([&] { decode(s, &deeper); }), ErrorKind::kGeometryMismatch);

  const CodecStream bundled = encode(cloud, QuantStep(10.0), OrderingMode::kDepth, true);
  const VoxelCloud other = testing::random_cloud(rng, 4, 50);
  EXPECT_EQ(kind_of([&] { decode(bundled, &other); }), ErrorKind::kGeometryMismatch);
  EXPECT_NO_THROW(decode(bundled, &cloud));
}

TEST(Container, HeaderErrors) {
  std::mt19937_64 rng(56);
  const VoxelCloud cloud = testing::random_cloud(rng, 3, 30);
  const auto good = encode(cloud, QuantStep(10.0), OrderingMode::kDepth).serialize();

  auto bad_mode = good;
  bad_mode[6] = 3;
  EXPECT_EQ(kind_of([&] { CodecStream::parse(bad_mode); }), ErrorKind::kUnknownOrderingMode);
  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_EQ(kind_of([&] { CodecStream::parse(bad_version); }), ErrorKind::kUnsupportedVersion);
  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_EQ(kind_of([&] { CodecStream::parse(bad_magic); }), ErrorKind::kBadMagic);
  auto truncated = good;
  truncated.pop_back();
  EXPECT_EQ(kind_of([&] { CodecStream::parse(truncated); }), ErrorKind::kTruncatedStream);
  EXPECT_EQ(kind_of([&] {
              CodecStream::parse(std::span<const std::uint8_t>(good.data(), kHeaderSize - 1));
            }),
            ErrorKind::kTruncatedStream);
  auto zero_q = good;
  std::fill(zero_q.begin() + 8, zero_q.begin() + 16, 0);
  EXPECT_EQ(kind_of([&] { CodecStream::parse(zero_q); }), ErrorKind::kInvalidStep);
}

TEST(Container, CorruptPayloadsFailCleanly) {
  std::mt19937_64 rng(57);
  const VoxelCloud cloud = testing::random_cloud(rng, 4, 300);
  const auto good = encode(cloud, QuantStep(5.0), OrderingMode::kDepth).serialize();
  for (int trial = 0; trial < 500; ++trial) {
    auto bytes = good;
    const std::size_t at = kHeaderSize + rng() % (bytes.size() - kHeaderSize);
    bytes[at] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
    try {
      const VoxelCloud out = decode(CodecStream::parse(bytes), &cloud);
      ASSERT_EQ(out.size(), cloud.size());
    } catch (const Error&) {
    }
  }
}

}  // namespace
}  // namespace raht
