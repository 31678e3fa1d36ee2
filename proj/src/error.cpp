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
#include "raht/error.hpp"

namespace raht {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedHeader: return "MalformedHeader";
    case ErrorKind::kTruncatedBody: return "TruncatedBody";
    case ErrorKind::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::kDepthOutOfRange: return "DepthOutOfRange";
    case ErrorKind::kEmptyCloud: return "EmptyCloud";
    case ErrorKind::kInvalidCloud: return "InvalidCloud";
    case ErrorKind::kMalformedBody: return "MalformedBody";
    case ErrorKind::kCoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorKind::kCodeOutOfRange: return "CodeOutOfRange";
    case ErrorKind::kScheduleMismatch: return "ScheduleMismatch";
    case ErrorKind::kDuplicateTraversalIndex: return "DuplicateTraversalIndex";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kInvalidStep: return "InvalidStep";
    case ErrorKind::kSymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorKind::kTruncatedStream: return "TruncatedStream";
    case ErrorKind::kMalformedEscape: return "MalformedEscape";
    case ErrorKind::kMalformedRun: return "MalformedRun";
    case ErrorKind::kBadMagic: return "BadMagic";
    case ErrorKind::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::kUnknownOrderingMode: return "UnknownOrderingMode";
    case ErrorKind::kGeometryMismatch: return "GeometryMismatch";
    case ErrorKind::kMissingGeometry: return "MissingGeometry";
    case ErrorKind::kEmptyStream: return "EmptyStream";
    case ErrorKind::kIo: return "Io";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace raht
