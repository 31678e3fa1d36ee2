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
#include "raht/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "raht/error.hpp"
#include "raht/morton.hpp"

namespace raht::synth {
namespace {

// Selection sampling over the whole grid is only affordable when small.
constexpr std::uint64_t kMaxScanCells = std::uint64_t{1} << 27;
constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 26;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::vector<std::uint64_t> sample_codes(std::uint64_t total, std::uint64_t n,
                                        std::mt19937_64& rng) {
  std::vector<std::uint64_t> codes;
  codes.reserve(n);
  if (2 * n > total) {
    if (total > kMaxScanCells) {
      throw Error(ErrorKind::kInvalidArgument, "grid too large for a dense fill");
    }
    // Knuth's algorithm S; emits codes in ascending order.
    std::uint64_t needed = n;
    for (std::uint64_t c = 0; c < total && needed > 0; ++c) {
      if (static_cast<double>(total - c) * unit(rng) < static_cast<double>(needed)) {
        codes.push_back(c);
        --needed;
      }
    }
    return codes;
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(n * 2);
  while (codes.size() < n) {
    const std::uint64_t c = rng() % total;
    if (seen.insert(c).second) codes.push_back(c);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace

std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "constant") return Kind::kConstant;
  if (name == "gradient") return Kind::kGradient;
  if (name == "noise") return Kind::kNoise;
  return std::nullopt;
}

RawPointCloud generate(const Spec& spec) {
  if (spec.depth < kMinDepth || spec.depth > kMaxDepth) {
    throw Error(ErrorKind::kDepthOutOfRange,
                "depth " + std::to_string(spec.depth) + " outside [1, 21]");
  }
  if (!(spec.fill > 0.0 && spec.fill <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "fill fraction must lie in (0, 1]");
  }
  const std::uint64_t total = std::uint64_t{1} << (3 * spec.depth);
  const auto wanted = static_cast<std::uint64_t>(
      std::llround(spec.fill * static_cast<double>(total)));
  const std::uint64_t n = std::clamp<std::uint64_t>(wanted, 1, total);
  if (n > kMaxPoints) throw Error(ErrorKind::kInvalidArgument, "too many points requested");

  std::mt19937_64 rng(spec.seed);
  const std::vector<std::uint64_t> codes = sample_codes(total, n, rng);
  const double span = 3.0 * static_cast<double>((std::uint64_t{1} << spec.depth) - 1);

  RawPointCloud cloud;
  cloud.points.reserve(codes.size());
  for (std::uint64_t code : codes) {
    const GridPoint g = morton_decode(code, spec.depth);
    RawPoint p;
    p.x = g[0];
    p.y = g[1];
    p.z = g[2];
    switch (spec.kind) {
      case Kind::kConstant:
        p.color = kConstantColor;
        break;
      case Kind::kGradient: {
        const double t = static_cast<double>(g[0] + g[1] + g[2]) / span;
        const auto level = static_cast<std::uint8_t>(std::floor(255.0 * t + 0.5));
        p.color = {level, level, level};
        break;
      }
      case Kind::kNoise: {
        const std::uint64_t r = rng();
        p.color = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(r >> 8),
                   static_cast<std::uint8_t>(r >> 16)};
        break;
      }
    }
    cloud.points.push_back(p);
  }
  return cloud;
}

}  // namespace raht::synth
