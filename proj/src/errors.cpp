// Copyright 2026 The infoeq Authors
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

#include "infoeq/errors.hpp"

namespace infoeq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDuplicateTimestamp: return "DuplicateTimestamp";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kDomain: return "DomainError";
    case ErrorKind::kModelDomain: return "ModelDomainError";
    case ErrorKind::kSingularFit: return "SingularFit";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kDegenerateEquilibrium: return "DegenerateEquilibrium";
    case ErrorKind::kInsufficientData: return "InsufficientData";
    case ErrorKind::kUnknownModel: return "UnknownModel";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace infoeq
