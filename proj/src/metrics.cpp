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
#include "raht/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "raht/container.hpp"
#include "raht/error.hpp"

namespace raht {
namespace {

std::string format_general(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double parse_double(const std::string& field) {
  if (field == "inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw Error(ErrorKind::kInvalidArgument, "bad CSV number " + field);
  return v;
}

}  // namespace

double psnr_y(const VoxelCloud& original, const VoxelCloud& reconstructed) {
  if (original.size() != reconstructed.size()) {
    throw Error(ErrorKind::kGeometryMismatch,
                "PSNR needs matching geometry: " + std::to_string(original.size()) + " vs " +
                    std::to_string(reconstructed.size()) + " voxels");
  }
  double sse = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i].morton != reconstructed[i].morton) {
      throw Error(ErrorKind::kGeometryMismatch, "PSNR needs matching Morton sets");
    }
    const double d = original[i].yuv[0] - reconstructed[i].yuv[0];
    sse += d * d;
  }
  const double mse = sse / static_cast<double>(original.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

void ZeroRunStats::add(std::span<const std::int64_t> symbols) {
  bool in_run = false;
  for (std::int64_t s : symbols) {
    if (s == 0) {
      ++zeros;
      if (!in_run) ++runs;
      in_run = true;
    } else {
      in_run = false;
    }
  }
}

double avg_zero_run(std::span<const std::int64_t> symbols) {
  if (symbols.empty()) throw Error(ErrorKind::kEmptyStream, "zero-run statistic of empty stream");
  ZeroRunStats stats;
  stats.add(symbols);
  return stats.mean();
}

std::vector<RdPoint> rd_sweep(const std::string& name, const VoxelCloud& cloud,
                              std::span<const double> steps,
                              std::span<const OrderingMode> modes) {
  const MergeSchedule schedule = build_schedule(cloud);
  std::vector<double> qs(steps.begin(), steps.end());
  std::sort(qs.begin(), qs.end());
  std::vector<OrderingMode> ms(modes.begin(), modes.end());
  std::sort(ms.begin(), ms.end());

  std::vector<RdPoint> rows;
  rows.reserve(qs.size() * ms.size());
  for (OrderingMode mode : ms) {
    for (double qv : qs) {
      const QuantStep q(qv);
      const CodecStream stream = encode(cloud, q, mode);
      const VoxelCloud decoded = decode(stream, &cloud);
      const QuantizedChannels quantized = quantize_in_order(cloud, schedule, q, mode);
      ZeroRunStats runs;
      for (const auto& ch : quantized) runs.add(ch);
      rows.push_back({name, qv, mode, stream.bits_per_voxel(), psnr_y(cloud, decoded), runs.mean()});
    }
  }
  return rows;
}

std::string format_psnr(double db) {
  if (std::isinf(db)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", db);
  return buf;
}

std::string format_bpv(double bpv) { return format_general(bpv); }

void write_rd_csv(std::ostream& out, std::span<const RdPoint> rows) {
  out << "cloud,Q,mode,bpv,psnr_y,avg_zero_run\n";
  for (const RdPoint& r : rows) {
    out << r.cloud << ',' << format_general(r.q) << ',' << to_string(r.mode) << ','
        << format_bpv(r.bpv) << ',' << format_psnr(r.psnr_y) << ','
        << format_general(r.avg_zero_run) << '\n';
  }
}

std::vector<RdPoint> read_rd_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "cloud,Q,mode,bpv,psnr_y,avg_zero_run") {
    throw Error(ErrorKind::kInvalidArgument, "CSV lacks the expected header row");
  }
  std::vector<RdPoint> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw Error(ErrorKind::kInvalidArgument, "bad CSV row: " + line);
    const auto mode = parse_ordering_mode(fields[2]);
    if (!mode) throw Error(ErrorKind::kUnknownOrderingMode, "bad mode in CSV: " + fields[2]);
    rows.push_back({fields[0], parse_double(fields[1]), *mode, parse_double(fields[3]),
                    parse_double(fields[4]), parse_double(fields[5])});
  }
  return rows;
}

}  // namespace raht
