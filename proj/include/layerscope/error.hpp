// Copyright 2026 The LayerScope Authors
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

#ifndef LAYERSCOPE_ERROR_HPP_
#define LAYERSCOPE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace layerscope {

enum class ErrorCode {
  kInvalidParams,
  kLengthMismatch,
  kSymbolOutOfRange,
  kKautzRepeat,
  kSameVertex,
  kTooLarge,
  kVertexNotInGraph,
  kZeroDenominator,
  kPoleAtValue,
  kIndexOutOfRange,
  kNotASuccessor,
  kAlphabetTooSmall,
  kRegimeRequired,
  kInvalidRange,
  kSingularSystem,
  kDiverges,
  kParse,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::kKautzRepeat: return "KautzRepeat";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kVertexNotInGraph: return "VertexNotInGraph";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kPoleAtValue: return "PoleAtValue";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotASuccessor: return "NotASuccessor";
    case ErrorCode::kAlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::kRegimeRequired: return "RegimeRequired";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kDiverges: return "Diverges";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace layerscope

#endif  // LAYERSCOPE_ERROR_HPP_
