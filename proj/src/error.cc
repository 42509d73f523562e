// Copyright 2026 The wlbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wlbound/error.h"

#include <string>
#include <string_view>

namespace wlbound {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInvalidGraph6: return "InvalidGraph6";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kRaggedAttributeRow: return "RaggedAttributeRow";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kManifestMismatch: return "ManifestMismatch";
    case ErrorCode::kInitLengthMismatch: return "InitLengthMismatch";
    case ErrorCode::kTargetMismatch: return "TargetMismatch";
    case ErrorCode::kLayerNegative: return "LayerNegative";
    case ErrorCode::kDimExceedsOrder: return "DimExceedsOrder";
    case ErrorCode::kTupleBudgetExceeded: return "TupleBudgetExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOrderOutOfRange: return "OrderOutOfRange";
  }
  return "Unknown";
}

bool IsBudgetError(ErrorCode code) {
  return code == ErrorCode::kTupleBudgetExceeded ||
         code == ErrorCode::kBudgetExceeded ||
         code == ErrorCode::kOrderOutOfRange;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace wlbound
