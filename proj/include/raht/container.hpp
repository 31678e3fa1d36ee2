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
#ifndef RAHT_CONTAINER_HPP_
#define RAHT_CONTAINER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "raht/cloud_io.hpp"
#include "raht/morton.hpp"
#include "raht/ordering.hpp"
#include "raht/quant.hpp"

namespace raht {

// Stream layout, little-endian:
//   0  magic "RAHT"        4
//   4  version             u8
//   5  depth L             u8
//   6  ordering mode       u8
//   7  flags               u8   bit0: geometry bundled
//   8  Q                   f64
//  16  n_voxels            u64
//  24  payload lengths     3 x u64 (Y, U, V)
//  48  [n_voxels x u64 Morton codes when bundled]
//      Y payload, U payload, V payload
inline constexpr std::size_t kHeaderSize = 48;
inline constexpr std::uint8_t kStreamVersion = 1;
inline constexpr std::uint8_t kFlagGeometryBundled = 0x01;

struct StreamHeader {
  std::uint8_t version = kStreamVersion;
  std::uint8_t depth = 0;
  OrderingMode mode = OrderingMode::kTraversal;
  std::uint8_t flags = 0;
  double q = 1.0;
  std::uint64_t n_voxels = 0;
  std::array<std::uint64_t, 3> payload_bytes{};

  bool geometry_bundled() const noexcept { return (flags & kFlagGeometryBundled) != 0; }
};

struct CodecStream {
  StreamHeader header;
  std::optional<std::vector<std::uint64_t>> geometry;
  std::array<std::vector<std::uint8_t>, 3> payloads;

  std::vector<std::uint8_t> serialize() const;
  static CodecStream parse(std::span<const std::uint8_t> bytes);

  // Header plus the three payloads; bundled geometry is side information.
  std::uint64_t rate_bytes() const;
  double bits_per_voxel() const;
};

// Quantized coefficients of each channel in encode order (before zigzag).
using QuantizedChannels = std::array<std::vector<std::int64_t>, 3>;

QuantizedChannels quantize_in_order(const VoxelCloud& cloud, const MergeSchedule& schedule,
                                    QuantStep q, OrderingMode mode);

CodecStream encode(const VoxelCloud& cloud, QuantStep q, OrderingMode mode,
                   bool bundle_geometry = false);

// `geometry` supplies the Morton set when the stream does not carry it; its
// attribute values are ignored.
VoxelCloud decode(const CodecStream& stream, const VoxelCloud* geometry = nullptr);

}  // namespace raht

#endif  // RAHT_CONTAINER_HPP_
