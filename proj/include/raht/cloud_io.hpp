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
#ifndef RAHT_CLOUD_IO_HPP_
#define RAHT_CLOUD_IO_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace raht {

inline constexpr int kMinDepth = 1;
inline constexpr int kMaxDepth = 21;

struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb8&, const Rgb8&) = default;
};

struct RawPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  Rgb8 color;
  friend bool operator==(const RawPoint&, const RawPoint&) = default;
};

// Unvoxelized input as read from a PLY file; duplicates allowed.
struct RawPointCloud {
  std::vector<RawPoint> points;
};

// Channel order is Y, U, V.
using Yuv = std::array<double, 3>;
using RgbReal = std::array<double, 3>;

struct Voxel {
  std::uint64_t morton = 0;
  Yuv yuv{};
};

// Occupied voxels of a 2^depth grid, strictly ascending by Morton code.
// The constructor enforces the invariants, so every instance is valid.
class VoxelCloud {
 public:
  VoxelCloud(int depth, std::vector<Voxel> voxels);

  int depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return voxels_.size(); }
  std::span<const Voxel> voxels() const noexcept { return voxels_; }
  const Voxel& operator[](std::size_t i) const { return voxels_[i]; }

  std::vector<std::uint64_t> mortons() const;
  // One channel's values in Morton order.
  std::vector<double> channel(int c) const;

  // Same geometry, new attribute values (three channels, Morton order).
  VoxelCloud with_channels(const std::array<std::vector<double>, 3>& channels) const;

 private:
  int depth_;
  std::vector<Voxel> voxels_;
};

// BT.601 full range. Inputs are clamped to [0,255] first.
Yuv rgb_to_yuv(double r, double g, double b);
// Exact inverse of rgb_to_yuv followed by clamping to [0,255].
RgbReal yuv_to_rgb(double y, double u, double v);
RgbReal yuv_to_rgb_unclamped(double y, double u, double v);

// Rounds half away from zero after clamping to [0,255].
std::uint8_t to_uint8(double value);

RawPointCloud parse_ply(std::span<const std::uint8_t> bytes);

enum class PlyFormat { kAscii, kBinaryLittleEndian };

std::vector<std::uint8_t> write_ply(const VoxelCloud& cloud, PlyFormat format);
std::vector<std::uint8_t> write_ply(const RawPointCloud& cloud, PlyFormat format);

struct VoxelizeWarnings {
  // Axes with zero extent; those coordinates all map to 0.
  std::array<bool, 3> degenerate_axis{};
  bool any() const { return degenerate_axis[0] || degenerate_axis[1] || degenerate_axis[2]; }
};

VoxelCloud voxelize(const RawPointCloud& cloud, int depth,
                    VoxelizeWarnings* warnings = nullptr);

// File helpers used by the CLI; failures raise ErrorKind::kIo.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace raht

#endif  // RAHT_CLOUD_IO_HPP_
