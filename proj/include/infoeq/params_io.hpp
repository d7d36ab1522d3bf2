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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

namespace infoeq {

// Flat `key = value` parameter file. Keys use the model symbol names
// (k_i, k_p, k_H, alpha, gamma, M0, A, k1, k2, ...). '#' starts a comment.
class ParamSet {
 public:
  ParamSet() = default;
  explicit ParamSet(std::map<std::string, double> values) : values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double get(const std::string& key) const;  // throws kInvalidArgument when missing
  double get_or(const std::string& key, double fallback) const;
  void set(const std::string& key, double value) { values_[key] = value; }
  const std::map<std::string, double>& values() const noexcept { return values_; }

 private:
  std::map<std::string, double> values_;
};

ParamSet parse_params(std::istream& in);
ParamSet load_params(const std::filesystem::path& path);
void write_params(std::ostream& out, const ParamSet& params);

}  // namespace infoeq
