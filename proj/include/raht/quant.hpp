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
#ifndef RAHT_QUANT_HPP_
#define RAHT_QUANT_HPP_

#include <cmath>
#include <cstdint>
#include <string>

#include "raht/error.hpp"

namespace raht {

// Uniform midtread quantizer step.
class QuantStep {
 public:
  explicit QuantStep(double step) : step_(step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
      throw Error(ErrorKind::kInvalidStep, "Q must be positive");
    }
  }
  double value() const noexcept { return step_; }

 private:
  double step_;
};

// round(c / Q), halves away from zero.
inline std::int64_t quantize(double c, QuantStep q) {
  const double mag = std::floor(std::fabs(c) / q.value() + 0.5);
  if (!(mag < 0x1p62)) {
    throw Error(ErrorKind::kSymbolOutOfRange, "quantized magnitude overflows");
  }
  const auto m = static_cast<std::int64_t>(mag);
  return c < 0.0 ? -m : m;
}

inline double dequantize(std::int64_t q, QuantStep step) {
  return static_cast<double>(q) * step.value();
}

// Signed -> nonnegative: 0,-1,1,-2,2,... -> 0,1,2,3,4,...
inline constexpr std::uint64_t zigzag(std::int64_t q) {
  return q >= 0 ? static_cast<std::uint64_t>(q) << 1
                : (static_cast<std::uint64_t>(-(q + 1)) << 1) | 1u;
}

inline constexpr std::int64_t unzigzag(std::uint64_t u) {
  return (u & 1u) ? -static_cast<std::int64_t>(u >> 1) - 1 : static_cast<std::int64_t>(u >> 1);
}

}  // namespace raht

#endif  // RAHT_QUANT_HPP_
