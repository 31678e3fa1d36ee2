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
#ifndef RAHT_BITIO_HPP_
#define RAHT_BITIO_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "raht/error.hpp"

namespace raht {

// MSB-first bit packer. The final byte is zero padded.
class BitWriter {
 public:
  void write_bit(bool bit) {
    if (used_ == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> used_);
    used_ = (used_ + 1) & 7u;
    ++bits_;
  }

  // Writes the low `count` bits of `value`, most significant first.
  void write_bits(std::uint64_t value, unsigned count) {
    for (unsigned i = count; i-- > 0;) write_bit(((value >> i) & 1u) != 0);
  }

  void write_ones(unsigned count) {
    for (unsigned i = 0; i < count; ++i) write_bit(true);
  }

  std::uint64_t bit_count() const noexcept { return bits_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  unsigned used_ = 0;
  std::uint64_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool read_bit() {
    if (pos_ >= bytes_.size() * 8) {
      throw Error(ErrorKind::kTruncatedStream, "bitstream ended early");
    }
    const bool bit = ((bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u) != 0;
    ++pos_;
    return bit;
  }

  std::uint64_t read_bits(unsigned count) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < count; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
    return v;
  }

  std::uint64_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t pos_ = 0;
};

}  // namespace raht

#endif  // RAHT_BITIO_HPP_
