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

// Shared helpers for the unit tests.
#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "infoeq/errors.hpp"
#include "infoeq/timeseries.hpp"

namespace testutil {

inline std::filesystem::path data_dir() { return INFOEQ_TEST_DATA_DIR; }

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline infoeq::TimeSeries series(const std::vector<double>& t, const std::vector<double>& v) {
  return infoeq::TimeSeries::from_columns(t, v);
}

inline infoeq::TimeSeries parse(const std::string& text) {
  std::istringstream in(text);
  return infoeq::read_csv(in);
}

// Counts data rows of a CSV with a plain line scan: skips '#' lines, blank
// lines and the header.
inline std::size_t count_csv_rows(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string line;
  std::size_t rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    ++rows;
  }
  return rows;
}

// Deterministic pseudo-random numbers for fixtures (64-bit LCG).
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed) {}
  double uniform() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(s_ >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

 private:
  std::uint64_t s_;
};

// Kind of the infoeq::Error thrown by f; fails the test if nothing is thrown.
inline infoeq::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const infoeq::Error& e) {
    return e.kind();
  }
  FAIL("expected an infoeq::Error");
  return static_cast<infoeq::ErrorKind>(-1);
}

}  // namespace testutil
