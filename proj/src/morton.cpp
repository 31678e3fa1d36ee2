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
#include "raht/morton.hpp"

#include <string>

#include "raht/cloud_io.hpp"
#include "raht/error.hpp"

namespace raht {
namespace {

void check_depth(int depth) {
  if (depth < kMinDepth || depth > kMaxDepth) {
    throw Error(ErrorKind::kDepthOutOfRange,
                "depth " + std::to_string(depth) + " outside [1, 21]");
  }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::uint64_t morton_encode(std::uint32_t x, std::uint32_t y, std::uint32_t z, int depth) {
  check_depth(depth);
  const std::uint64_t limit = std::uint64_t{1} << depth;
  if (x >= limit || y >= limit || z >= limit) {
    throw Error(ErrorKind::kCoordinateOutOfRange,
                "coordinate (" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(z) + ") outside grid of depth " + std::to_string(depth));
  }
  std::uint64_t code = 0;
  for (int b = depth - 1; b >= 0; --b) {
    code = (code << 3) | (((x >> b) & 1u) << 2) | (((y >> b) & 1u) << 1) | ((z >> b) & 1u);
  }
  return code;
}

GridPoint morton_decode(std::uint64_t code, int depth) {
  check_depth(depth);
  if (code >> (3 * depth) != 0) {
    throw Error(ErrorKind::kCodeOutOfRange,
                "morton code " + std::to_string(code) + " exceeds 3*" + std::to_string(depth) +
                    " bits");
  }
  GridPoint p{0, 0, 0};
  for (int b = 0; b < depth; ++b) {
    p[2] |= static_cast<std::uint32_t>((code >> (3 * b)) & 1u) << b;
    p[1] |= static_cast<std::uint32_t>((code >> (3 * b + 1)) & 1u) << b;
    p[0] |= static_cast<std::uint32_t>((code >> (3 * b + 2)) & 1u) << b;
  }
  return p;
}

std::span<const MergeStep> MergeSchedule::level_steps(int level) const {
  if (level < 1 || level > num_levels()) return {};
  const std::size_t e = static_cast<std::size_t>(num_levels() - level);
  return std::span<const MergeStep>(steps_).subspan(offsets_[e], offsets_[e + 1] - offsets_[e]);
}

std::size_t MergeSchedule::size_after(int level) const {
  if (level > num_levels()) return n_voxels_;
  return sizes_after_[static_cast<std::size_t>(num_levels() - level)];
}

std::vector<std::uint8_t> MergeSchedule::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(16 + steps_.size() * 41);
  put_u64(out, static_cast<std::uint64_t>(depth_));
  put_u64(out, n_voxels_);
  for (const MergeStep& s : steps_) {
    out.push_back(static_cast<std::uint8_t>(s.level));
    out.push_back(static_cast<std::uint8_t>(s.kind));
    put_u64(out, s.src_a);
    put_u64(out, s.src_b);
    put_u64(out, s.dst);
    put_u64(out, s.w_a);
    put_u64(out, s.w_b);
    put_u64(out, s.traversal_index);
  }
  return out;
}

std::uint64_t MergeSchedule::fingerprint() const {
  // FNV-1a over the canonical serialization.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint8_t b : serialize()) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

MergeSchedule build_schedule(int depth, std::span<const std::uint64_t> mortons) {
  check_depth(depth);
  if (mortons.empty()) throw Error(ErrorKind::kEmptyCloud, "cannot build schedule for empty cloud");
  for (std::size_t i = 0; i < mortons.size(); ++i) {
    if (mortons[i] >> (3 * depth) != 0) {
      throw Error(ErrorKind::kCodeOutOfRange, "morton code exceeds grid");
    }
    if (i > 0 && mortons[i] <= mortons[i - 1]) {
      throw Error(ErrorKind::kInvalidCloud, "morton codes not strictly increasing");
    }
  }

  MergeSchedule sched;
  sched.depth_ = depth;
  sched.n_voxels_ = mortons.size();
  const int levels = 3 * depth;
  sched.offsets_.reserve(static_cast<std::size_t>(levels) + 1);
  sched.sizes_after_.reserve(static_cast<std::size_t>(levels));
  sched.steps_.reserve(mortons.size() * 2);

  struct Entry {
    std::uint64_t prefix;
    std::uint64_t weight;
    std::int64_t node;  // index of the producing pair step, -1 if none
  };
  std::vector<Entry> cur;
  cur.reserve(mortons.size());
  for (std::uint64_t m : mortons) cur.push_back({m, 1, -1});
  std::vector<Entry> next;
  next.reserve(mortons.size());
  // children[pair step index] = producing nodes of (a, b)
  std::vector<std::array<std::int64_t, 2>> children(0);

  for (int level = levels; level >= 1; --level) {
    sched.offsets_.push_back(sched.steps_.size());
    next.clear();
    std::size_t i = 0;
    while (i < cur.size()) {
      const auto dst = static_cast<std::uint32_t>(next.size());
      if (i + 1 < cur.size() && (cur[i].prefix >> 1) == (cur[i + 1].prefix >> 1)) {
        MergeStep s;
        s.level = level;
        s.kind = StepKind::kPair;
        s.src_a = static_cast<std::uint32_t>(i);
        s.src_b = static_cast<std::uint32_t>(i + 1);
        s.dst = dst;
        s.w_a = cur[i].weight;
        s.w_b = cur[i + 1].weight;
        const auto node = static_cast<std::int64_t>(sched.steps_.size());
        children.resize(sched.steps_.size() + 1, {-1, -1});
        children[static_cast<std::size_t>(node)] = {cur[i].node, cur[i + 1].node};
        sched.steps_.push_back(s);
        next.push_back({cur[i].prefix >> 1, s.w_a + s.w_b, node});
        ++sched.n_highpass_;
        i += 2;
      } else {
        MergeStep s;
        s.level = level;
        s.kind = StepKind::kPromote;
        s.src_a = static_cast<std::uint32_t>(i);
        s.dst = dst;
        s.w_a = cur[i].weight;
        sched.steps_.push_back(s);
        next.push_back({cur[i].prefix >> 1, cur[i].weight, cur[i].node});
        i += 1;
      }
    }
    sched.sizes_after_.push_back(next.size());
    cur.swap(next);
  }
  sched.offsets_.push_back(sched.steps_.size());

  if (cur.size() != 1 || sched.n_highpass_ + 1 != sched.n_voxels_) {
    throw Error(ErrorKind::kInvariantViolation, "merge schedule did not reduce to a single root");
  }

  // Root-first, left-to-right preorder over the pair nodes.
  std::uint32_t next_index = 1;
  std::vector<std::int64_t> stack;
  if (cur[0].node >= 0) stack.push_back(cur[0].node);
  while (!stack.empty()) {
    const auto node = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    sched.steps_[node].traversal_index = next_index++;
    if (children[node][1] >= 0) stack.push_back(children[node][1]);
    if (children[node][0] >= 0) stack.push_back(children[node][0]);
  }
  return sched;
}

MergeSchedule build_schedule(const VoxelCloud& cloud) {
  const std::vector<std::uint64_t> codes = cloud.mortons();
  return build_schedule(cloud.depth(), codes);
}

}  // namespace raht
