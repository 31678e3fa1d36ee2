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
#ifndef RAHT_SYNTH_HPP_
#define RAHT_SYNTH_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "raht/cloud_io.hpp"

namespace raht::synth {

enum class Kind { kConstant, kGradient, kNoise };

std::optional<Kind> parse_kind(std::string_view name);

struct Spec {
  Kind kind = Kind::kGradient;
  int depth = 6;
  double fill = 0.05;  // fraction of the 8^depth cells that are occupied
  std::uint64_t seed = 1;
};

inline constexpr Rgb8 kConstantColor{180, 90, 60};

// Integer-coordinate cloud in Morton order; deterministic in the spec.
//   constant: kConstantColor everywhere
//   gradient: gray level linear in x + y + z (Y varies, U = V = 128)
//   noise:    independent uniform RGB per point
RawPointCloud generate(const Spec& spec);

}  // namespace raht::synth

#endif  // RAHT_SYNTH_HPP_
