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
#ifndef RAHT_ERROR_HPP_
#define RAHT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace raht {

enum class ErrorKind {
  // cloud_io
  kMalformedHeader,
  kTruncatedBody,
  kUnsupportedFormat,
  kDepthOutOfRange,
  kEmptyCloud,
  kInvalidCloud,
  kMalformedBody,
  // morton_octree
  kCoordinateOutOfRange,
  kCodeOutOfRange,
  // raht_core
  kScheduleMismatch,
  // ordering
  kDuplicateTraversalIndex,
  kLengthMismatch,
  // quant
  kInvalidStep,
  kSymbolOutOfRange,
  // rlgr_codec
  kTruncatedStream,
  kMalformedEscape,
  kMalformedRun,
  // container
  kBadMagic,
  kUnsupportedVersion,
  kUnknownOrderingMode,
  kGeometryMismatch,
  kMissingGeometry,
  // metrics
  kEmptyStream,
  // generic
  kIo,
  kInvalidArgument,
  kInvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception type. The kind
// identifies the failing contract; what() carries a human readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace raht

#endif  // RAHT_ERROR_HPP_
