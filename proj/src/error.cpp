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

#include "geosta/error.hpp"

namespace geosta {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyLabel: return "EmptyLabel";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kEmptyFeedback: return "EmptyFeedback";
    case ErrorCode::kTextOverflow: return "TextOverflow";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kNetworkError: return "NetworkError";
    case ErrorCode::kRateLimited: return "RateLimited";
    case ErrorCode::kCacheMiss: return "CacheMiss";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kUnparseableRanking: return "UnparseableRanking";
    case ErrorCode::kNoDistinctTarget: return "NoDistinctTarget";
    case ErrorCode::kEmptyCell: return "EmptyCell";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kMissingGroundTruth: return "MissingGroundTruth";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kMockViolation: return "MockViolation";
  }
  return "UnknownError";
}

}  // namespace geosta
