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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace infoeq {

struct Sample {
  double t;  // decimal year
  double v;
};

// Ordered (time, value) samples. Timestamps are strictly increasing and all
// values finite; the constructor enforces both.
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(std::vector<Sample> points, std::string name = {},
             std::string units = {});

  static TimeSeries from_columns(const std::vector<double>& t,
                                 const std::vector<double>& v,
                                 std::string name = {});

  const std::vector<Sample>& points() const noexcept { return points_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& units() const noexcept { return units_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Sample& operator[](std::size_t i) const { return points_[i]; }

  double first_time() const;
  double last_time() const;
  std::vector<double> times() const;
  std::vector<double> values() const;

  // Same timestamps, new values.
  TimeSeries with_values(const std::vector<double>& v) const;

  friend bool operator==(const TimeSeries& a, const TimeSeries& b) {
    if (a.points_.size() != b.points_.size()) return false;
    for (std::size_t i = 0; i < a.points_.size(); ++i)
      if (a.points_[i].t != b.points_[i].t || a.points_[i].v != b.points_[i].v)
        return false;
    return true;
  }

 private:
  std::vector<Sample> points_;
  std::string name_;
  std::string units_;
};

// year + (day_of_year - 1) / days_in_year
double decimal_year(int year, int month, int day);

// Accepts ISO-8601 `YYYY-MM-DD` or a plain decimal year.
double parse_date(const std::string& text);

// Reads a `date,value` CSV with a required header row. Lines starting with
// '#' are comments; a `# rows: N` comment declares the expected data-row
// count and is checked. Rows may be unsorted; duplicates are rejected.
TimeSeries read_csv(std::istream& in, const std::string& name = {});
TimeSeries load_csv(const std::filesystem::path& path);

void write_csv(std::ostream& out, const TimeSeries& ts);
void save_csv(const std::filesystem::path& path, const TimeSeries& ts);

// Piecewise-linear interpolation; no extrapolation.
double interp_linear(const TimeSeries& ts, double t);

struct LoessConfig {
  int degree = 2;
  double span = 1.0;
};

// Locally weighted polynomial regression evaluated at every input
// timestamp. Tricube weights on distances normalised by the largest
// distance inside the span neighbourhood.
TimeSeries loess_smooth(const TimeSeries& ts, const LoessConfig& cfg);

// Centered finite difference of log v (one-sided at the ends), per unit of
// time.
TimeSeries log_growth(const TimeSeries& ts);

struct AlignedPoint {
  double t;
  double a;
  double b;
};

std::vector<AlignedPoint> align(const TimeSeries& a, const TimeSeries& b,
                                const std::vector<double>& grid);

// Interpolates ts onto grid.
TimeSeries resample(const TimeSeries& ts, const std::vector<double>& grid);

}  // namespace infoeq
