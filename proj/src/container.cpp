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
#include "raht/container.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

#include "raht/error.hpp"
#include "raht/rlgr.hpp"
#include "raht/transform.hpp"

namespace raht {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'R', 'A', 'H', 'T'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[at + static_cast<std::size_t>(i)]} << (8 * i);
  return v;
}

[[noreturn]] void geometry_mismatch(const std::string& what) {
  throw Error(ErrorKind::kGeometryMismatch, "geometry mismatch: " + what);
}

}  // namespace

std::vector<std::uint8_t> CodecStream::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + (geometry ? geometry->size() * 8 : 0) + payloads[0].size() +
              payloads[1].size() + payloads[2].size());
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  out.push_back(header.version);
  out.push_back(header.depth);
  out.push_back(static_cast<std::uint8_t>(header.mode));
  out.push_back(header.flags);
  put_u64(out, std::bit_cast<std::uint64_t>(header.q));
  put_u64(out, header.n_voxels);
  for (std::uint64_t len : header.payload_bytes) put_u64(out, len);
  if (header.geometry_bundled()) {
    for (std::uint64_t code : *geometry) put_u64(out, code);
  }
  for (const auto& p : payloads) out.insert(out.end(), p.begin(), p.end());
  return out;
}

CodecStream CodecStream::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    throw Error(ErrorKind::kTruncatedStream, "stream shorter than the " +
                                                 std::to_string(kHeaderSize) + "-byte header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorKind::kBadMagic, "missing RAHT magic");
  }
  CodecStream s;
  s.header.version = bytes[4];
  if (s.header.version != kStreamVersion) {
    throw Error(ErrorKind::kUnsupportedVersion,
                "unsupported stream version " + std::to_string(s.header.version));
  }
  s.header.depth = bytes[5];
  if (s.header.depth < kMinDepth || s.header.depth > kMaxDepth) {
    throw Error(ErrorKind::kDepthOutOfRange, "stream depth " + std::to_string(s.header.depth) +
                                                 " outside [1, 21]");
  }
  const auto mode = ordering_mode_from_wire(bytes[6]);
  if (!mode) {
    throw Error(ErrorKind::kUnknownOrderingMode,
                "unknown ordering mode " + std::to_string(bytes[6]));
  }
  s.header.mode = *mode;
  s.header.flags = bytes[7];
  s.header.q = std::bit_cast<double>(get_u64(bytes, 8));
  QuantStep check_q(s.header.q);
  s.header.n_voxels = get_u64(bytes, 16);
  for (std::size_t c = 0; c < 3; ++c) s.header.payload_bytes[c] = get_u64(bytes, 24 + 8 * c);
  if (s.header.n_voxels == 0 || s.header.n_voxels > 0xFFFFFFFFull) {
    throw Error(ErrorKind::kInvalidCloud, "stream voxel count out of range");
  }

  // Overflow-safe length accounting.
  std::uint64_t remaining = bytes.size() - kHeaderSize;
  std::size_t at = kHeaderSize;
  if (s.header.geometry_bundled()) {
    if (s.header.n_voxels > remaining / 8) {
      throw Error(ErrorKind::kTruncatedStream, "bundled geometry truncated");
    }
    std::vector<std::uint64_t> codes(s.header.n_voxels);
    for (auto& code : codes) {
      code = get_u64(bytes, at);
      at += 8;
    }
    remaining -= 8 * s.header.n_voxels;
    s.geometry = std::move(codes);
  }
  for (std::size_t c = 0; c < 3; ++c) {
    const std::uint64_t len = s.header.payload_bytes[c];
    if (len > remaining) throw Error(ErrorKind::kTruncatedStream, "channel payload truncated");
    s.payloads[c].assign(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                         bytes.begin() + static_cast<std::ptrdiff_t>(at + len));
    at += len;
    remaining -= len;
  }
  if (remaining != 0) {
    throw Error(ErrorKind::kMalformedHeader,
                std::to_string(remaining) + " trailing bytes after the last payload");
  }
  return s;
}

std::uint64_t CodecStream::rate_bytes() const {
  return kHeaderSize + payloads[0].size() + payloads[1].size() + payloads[2].size();
}

double CodecStream::bits_per_voxel() const {
  return 8.0 * static_cast<double>(rate_bytes()) / static_cast<double>(header.n_voxels);
}

QuantizedChannels quantize_in_order(const VoxelCloud& cloud, const MergeSchedule& schedule,
                                    QuantStep q, OrderingMode mode) {
  const CoefficientSet coeffs = forward(cloud, schedule);
  const Permutation perm = make_permutation(mode, coeffs.info);
  QuantizedChannels out;
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<std::int64_t> quantized;
    quantized.reserve(coeffs.size());
    for (double v : coeffs.values[c]) quantized.push_back(quantize(v, q));
    out[c] = perm.apply(std::span<const std::int64_t>(quantized));
  }
  return out;
}

CodecStream encode(const VoxelCloud& cloud, QuantStep q, OrderingMode mode,
                   bool bundle_geometry) {
  const MergeSchedule schedule = build_schedule(cloud);
  const QuantizedChannels quantized = quantize_in_order(cloud, schedule, q, mode);

  CodecStream s;
  s.header.depth = static_cast<std::uint8_t>(cloud.depth());
  s.header.mode = mode;
  s.header.flags = bundle_geometry ? kFlagGeometryBundled : 0;
  s.header.q = q.value();
  s.header.n_voxels = cloud.size();
  if (bundle_geometry) s.geometry = cloud.mortons();
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<std::uint64_t> symbols;
    symbols.reserve(quantized[c].size());
    for (std::int64_t v : quantized[c]) symbols.push_back(zigzag(v));
    s.payloads[c] = rlgr::encode(symbols);
    s.header.payload_bytes[c] = s.payloads[c].size();
  }
  return s;
}

VoxelCloud decode(const CodecStream& stream, const VoxelCloud* geometry) {
  const StreamHeader& h = stream.header;
  std::vector<Voxel> voxels;
  if (stream.geometry) {
    if (stream.geometry->size() != h.n_voxels) {
      geometry_mismatch("bundled geometry holds " + std::to_string(stream.geometry->size()) +
                        " codes, header declares " + std::to_string(h.n_voxels));
    }
    voxels.reserve(stream.geometry->size());
    for (std::uint64_t code : *stream.geometry) voxels.push_back({code, {}});
    if (geometry != nullptr && geometry->mortons() != *stream.geometry) {
      geometry_mismatch("supplied geometry differs from the bundled geometry");
    }
  } else {
    if (geometry == nullptr) {
      throw Error(ErrorKind::kMissingGeometry,
                  "stream does not bundle geometry and none was supplied");
    }
    if (geometry->depth() != h.depth) {
      geometry_mismatch("expected depth " + std::to_string(h.depth) + ", found " +
                        std::to_string(geometry->depth()));
    }
    if (geometry->size() != h.n_voxels) {
      geometry_mismatch("expected " + std::to_string(h.n_voxels) + " voxels, found " +
                        std::to_string(geometry->size()));
    }
    voxels.reserve(geometry->size());
    for (const Voxel& v : geometry->voxels()) voxels.push_back({v.morton, {}});
  }
  const VoxelCloud shape(h.depth, std::move(voxels));
  const MergeSchedule schedule = build_schedule(shape);
  const std::vector<CoefficientInfo> info = coefficient_info(schedule);
  const Permutation perm = make_permutation(h.mode, info);
  const QuantStep q(h.q);

  CoefficientSet coeffs;
  coeffs.info = info;
  for (std::size_t c = 0; c < 3; ++c) {
    const std::vector<std::uint64_t> symbols =
        rlgr::decode(stream.payloads[c], static_cast<std::size_t>(h.n_voxels));
    std::vector<double> encode_order;
    encode_order.reserve(symbols.size());
    for (std::uint64_t u : symbols) encode_order.push_back(dequantize(unzigzag(u), q));
    coeffs.values[c] = perm.unapply(std::span<const double>(encode_order));
  }
  return shape.with_channels(inverse(coeffs, schedule));
}

}  // namespace raht
