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

#include <cstddef>
#include <string>
#include <vector>

namespace infoeq {

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;
  bool log_spaced = false;
};

// "start:stop:count"
GridSpec parse_grid_spec(const std::string& text, bool log_spaced = false);

// Endpoints are reproduced exactly. Log grids need start, stop > 0.
std::vector<double> make_grid(const GridSpec& spec);

inline std::vector<double> linspace(double a, double b, std::size_t n) {
  return make_grid({a, b, n, false});
}
inline std::vector<double> logspace(double a, double b, std::size_t n) {
  return make_grid({a, b, n, true});
}

}  // namespace infoeq
