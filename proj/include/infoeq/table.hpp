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
#include <string>
#include <string_view>
#include <vector>

namespace infoeq {

// Shortest round-trip decimal representation, independent of the C locale.
std::string format_double(double x);
double parse_double(std::string_view text);  // throws kParse

// Column-oriented numeric CSV used for every model/ensemble output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

void write_table(std::ostream& out, const Table& table);
void save_table(const std::filesystem::path& path, const Table& table);
Table read_table(std::istream& in);
Table load_table(const std::filesystem::path& path);

}  // namespace infoeq
