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

#ifndef WLBOUND_ERROR_H_
#define WLBOUND_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wlbound {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidGraph,
  kInvalidGraph6,
  kMissingFile,
  kIndexOutOfRange,
  kRaggedAttributeRow,
  kSchemaViolation,
  kIoError,
  kManifestMismatch,
  kInitLengthMismatch,
  kTargetMismatch,
  kLayerNegative,
  kDimExceedsOrder,
  kTupleBudgetExceeded,
  kBudgetExceeded,
  kOrderOutOfRange,
};

std::string_view ErrorCodeName(ErrorCode code);

// Budget-type failures (exit code 3 in the CLI); everything else is an input
// or schema failure (exit code 2).
bool IsBudgetError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wlbound

#endif  // WLBOUND_ERROR_H_
