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

#include "infoeq/params_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "infoeq/errors.hpp"
#include "infoeq/table.hpp"

namespace infoeq {

double ParamSet::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) fail(ErrorKind::kInvalidArgument, "missing parameter '" + key + "'");
  return it->second;
}

double ParamSet::get_or(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

ParamSet parse_params(std::istream& in) {
  ParamSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected key = value");
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key.empty()) fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": empty key");
    if (out.has(key))
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    try {
      out.set(key, parse_double(line.substr(eq + 1)));
    } catch (const Error& e) {
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

ParamSet load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open: " + path.string());
  try {
    return parse_params(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_params(std::ostream& out, const ParamSet& params) {
  for (const auto& [k, v] : params.values()) out << k << " = " << format_double(v) << '\n';
}

}  // namespace infoeq
