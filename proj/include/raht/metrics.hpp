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
#ifndef RAHT_METRICS_HPP_
#define RAHT_METRICS_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "raht/cloud_io.hpp"
#include "raht/ordering.hpp"

namespace raht {

// Luminance PSNR over occupied voxels on real-valued Y. Returns +inf when
// the clouds are identical.
double psnr_y(const VoxelCloud& original, const VoxelCloud& reconstructed);

struct ZeroRunStats {
  std::uint64_t runs = 0;
  std::uint64_t zeros = 0;

  void add(std::span<const std::int64_t> symbols);
  double mean() const { return runs == 0 ? 0.0 : static_cast<double>(zeros) / static_cast<double>(runs); }
};

// Mean length of maximal zero runs; 0 when the list has no zeros.
double avg_zero_run(std::span<const std::int64_t> symbols);

struct RdPoint {
  std::string cloud;
  double q = 0.0;
  OrderingMode mode = OrderingMode::kTraversal;
  double bpv = 0.0;
  double psnr_y = 0.0;
  // Pooled over the Y, U and V streams (runs never span channels).
  double avg_zero_run = 0.0;
};

// Cross product of steps and modes, rows sorted by (mode, Q).
std::vector<RdPoint> rd_sweep(const std::string& name, const VoxelCloud& cloud,
                              std::span<const double> steps, std::span<const OrderingMode> modes);

std::string format_psnr(double db);  // 4 decimals, "inf" when lossless
std::string format_bpv(double bpv);  // 6 significant digits

void write_rd_csv(std::ostream& out, std::span<const RdPoint> rows);
std::vector<RdPoint> read_rd_csv(std::istream& in);

}  // namespace raht

#endif  // RAHT_METRICS_HPP_
