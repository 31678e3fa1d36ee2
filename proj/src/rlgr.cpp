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
#include "raht/rlgr.hpp"

#include <algorithm>
#include <string>

#include "raht/error.hpp"

namespace raht::rlgr {
namespace {

// Shared by both sides so the adaptation stays in lockstep.
void adapt_value_param(State& s, std::uint64_t quotient) {
  if (quotient == 0) {
    s.krp = std::max(0, s.krp - 2);
  } else if (quotient > 1) {
    const std::uint64_t raised = static_cast<std::uint64_t>(s.krp) + quotient + 1;
    s.krp = static_cast<int>(std::min<std::uint64_t>(kMaxKRP, raised));
  }
}

void adapt_no_run(State& s, std::uint64_t symbol) {
  if (symbol == 0) {
    s.kp = std::min(kMaxKP, s.kp + kUp0);
  } else {
    s.kp = std::max(0, s.kp - kDown0);
  }
}

void check_symbol(std::uint64_t v) {
  if (v > kMaxSymbol) {
    throw Error(ErrorKind::kSymbolOutOfRange,
                "symbol " + std::to_string(v) + " exceeds the 32-bit escape field");
  }
}

BitWriter encode_to_writer(std::span<const std::uint64_t> symbols, std::vector<State>* trace) {
  BitWriter out;
  State s;
  std::uint64_t run = 0;
  if (trace != nullptr) {
    trace->clear();
    trace->reserve(symbols.size());
  }
  for (std::uint64_t u : symbols) {
    check_symbol(u);
    const auto kr = static_cast<unsigned>(s.kr());
    if (s.k() == 0) {
      gr_encode(out, u, kr);
      adapt_value_param(s, u >> kr);
      adapt_no_run(s, u);
    } else {
      const auto k = static_cast<unsigned>(s.k());
      if (u == 0) {
        if (++run == (std::uint64_t{1} << k)) {
          out.write_bit(false);
          s.kp = std::min(kMaxKP, s.kp + kUp1);
          run = 0;
        }
      } else {
        out.write_bit(true);
        out.write_bits(run, k);
        gr_encode(out, u - 1, kr);
        adapt_value_param(s, (u - 1) >> kr);
        s.kp = std::max(0, s.kp - kDown1);
        run = 0;
      }
    }
    if (trace != nullptr) trace->push_back(s);
  }
  if (run > 0) {
    // Partial run at end of stream; the decoder stops on the symbol count.
    out.write_bit(true);
    out.write_bits(run, static_cast<unsigned>(s.k()));
  }
  return out;
}

}  // namespace

void gr_encode(BitWriter& out, std::uint64_t value, unsigned kr) {
  const std::uint64_t quotient = value >> kr;
  if (quotient >= kEscapeQuotient) {
    check_symbol(value);
    out.write_ones(kEscapeQuotient);
    out.write_bits(value, kEscapeBits);
    return;
  }
  out.write_ones(static_cast<unsigned>(quotient));
  out.write_bit(false);
  out.write_bits(value, kr);
}

std::uint64_t gr_decode(BitReader& in, unsigned kr) {
  unsigned quotient = 0;
  while (quotient < kEscapeQuotient && in.read_bit()) ++quotient;
  if (quotient == kEscapeQuotient) {
    const std::uint64_t value = in.read_bits(kEscapeBits);
    if ((value >> kr) < kEscapeQuotient) {
      throw Error(ErrorKind::kMalformedEscape,
                  "escaped value " + std::to_string(value) + " fits the unary range");
    }
    return value;
  }
  return (std::uint64_t{quotient} << kr) | in.read_bits(kr);
}

std::vector<std::uint8_t> encode(std::span<const std::uint64_t> symbols,
                                 std::vector<State>* trace) {
  return encode_to_writer(symbols, trace).take();
}

std::uint64_t encoded_bits(std::span<const std::uint64_t> symbols) {
  return encode_to_writer(symbols, nullptr).bit_count();
}

std::vector<std::uint64_t> decode(std::span<const std::uint8_t> payload, std::size_t count,
                                  std::vector<State>* trace) {
  BitReader in(payload);
  State s;
  std::vector<std::uint64_t> out;
  out.reserve(std::min<std::size_t>(count, std::size_t{1} << 20));
  if (trace != nullptr) trace->clear();
  auto emit = [&](std::uint64_t symbol) {
    out.push_back(symbol);
    if (trace != nullptr) trace->push_back(s);
  };

  while (out.size() < count) {
    const auto kr = static_cast<unsigned>(s.kr());
    if (s.k() == 0) {
      const std::uint64_t u = gr_decode(in, kr);
      adapt_value_param(s, u >> kr);
      adapt_no_run(s, u);
      emit(u);
      continue;
    }
    const auto k = static_cast<unsigned>(s.k());
    const std::size_t remaining = count - out.size();
    if (!in.read_bit()) {
      const std::uint64_t full = std::uint64_t{1} << k;
      if (full > remaining) {
        throw Error(ErrorKind::kMalformedRun, "zero run of " + std::to_string(full) +
                                                  " overruns the symbol count");
      }
      for (std::uint64_t i = 0; i + 1 < full; ++i) emit(0);
      s.kp = std::min(kMaxKP, s.kp + kUp1);
      emit(0);
      continue;
    }
    const std::uint64_t run = in.read_bits(k);
    if (run > remaining) {
      throw Error(ErrorKind::kMalformedRun, "partial run of " + std::to_string(run) +
                                                " overruns the symbol count");
    }
    for (std::uint64_t i = 0; i < run; ++i) emit(0);
    if (out.size() == count) break;
    const std::uint64_t v = gr_decode(in, kr);
    adapt_value_param(s, v >> kr);
    s.kp = std::max(0, s.kp - kDown1);
    emit(v + 1);
  }
  return out;
}

}  // namespace raht::rlgr
