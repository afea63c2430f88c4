// Copyright 2026 The GeoSTA Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace geosta {

enum class ErrorCode {
  kEmptyLabel,
  kEmptyText,
  kEmptyFeedback,
  kTextOverflow,
  kInvalidSpec,
  kNetworkError,
  kRateLimited,
  kCacheMiss,
  kMalformedResponse,
  kUnparseableRanking,
  kNoDistinctTarget,
  kEmptyCell,
  kLengthMismatch,
  kMissingGroundTruth,
  kIoError,
  kConfigError,
  kMockViolation,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for all pipeline failures; the code tells callers
/// (and eval failure buckets) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace geosta
