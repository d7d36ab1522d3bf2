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

#pragma once

#include <stdexcept>
#include <string>

namespace infoeq {

// Failure categories shared by every module. The C API maps these onto its
// status codes and the CLI onto process exit codes.
enum class ErrorKind {
  kInvalidArgument,
  kIo,
  kParse,
  kDuplicateTimestamp,
  kEmptyInput,
  kOutOfRange,
  kDomain,
  kModelDomain,
  kSingularFit,
  kRankDeficient,
  kDegenerateEquilibrium,
  kInsufficientData,
  kUnknownModel,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a model is evaluated outside the regime where it is defined
// (log arguments <= 1, small process variables). Carries the offending
// abscissa when one is known.
class ModelDomainError : public Error {
 public:
  explicit ModelDomainError(const std::string& what, double at = 0.0,
                            bool has_point = false)
      : Error(ErrorKind::kModelDomain, what), at_(at), has_point_(has_point) {}

  double at() const noexcept { return at_; }
  bool has_point() const noexcept { return has_point_; }

 private:
  double at_;
  bool has_point_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace infoeq
