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

#include "infoeq/timeseries.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "infoeq/errors.hpp"
#include "infoeq/table.hpp"

namespace infoeq {

TimeSeries::TimeSeries(std::vector<Sample> points, std::string name,
                       std::string units)
    : points_(std::move(points)), name_(std::move(name)), units_(std::move(units)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].t) || !std::isfinite(points_[i].v))
      fail(ErrorKind::kDomain, "non-finite sample at index " + std::to_string(i));
    if (i > 0 && !(points_[i].t > points_[i - 1].t))
      fail(ErrorKind::kInvalidArgument,
           "timestamps not strictly increasing at index " + std::to_string(i));
  }
}

TimeSeries TimeSeries::from_columns(const std::vector<double>& t,
                                    const std::vector<double>& v,
                                    std::string name) {
  if (t.size() != v.size())
    fail(ErrorKind::kInvalidArgument, "time and value columns differ in length");
  std::vector<Sample> pts(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) pts[i] = {t[i], v[i]};
  return TimeSeries(std::move(pts), std::move(name));
}

double TimeSeries::first_time() const {
  if (points_.empty()) fail(ErrorKind::kEmptyInput, "empty series");
  return points_.front().t;
}

double TimeSeries::last_time() const {
  if (points_.empty()) fail(ErrorKind::kEmptyInput, "empty series");
  return points_.back().t;
}

std::vector<double> TimeSeries::times() const {
  std::vector<double> out(points_.size());
  std::transform(points_.begin(), points_.end(), out.begin(),
                 [](const Sample& s) { return s.t; });
  return out;
}

std::vector<double> TimeSeries::values() const {
  std::vector<double> out(points_.size());
  std::transform(points_.begin(), points_.end(), out.begin(),
                 [](const Sample& s) { return s.v; });
  return out;
}

TimeSeries TimeSeries::with_values(const std::vector<double>& v) const {
  if (v.size() != points_.size())
    fail(ErrorKind::kInvalidArgument, "value count does not match series");
  std::vector<Sample> pts(points_);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].v = v[i];
  return TimeSeries(std::move(pts), name_, units_);
}

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '"'))
    s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

double decimal_year(int year, int month, int day) {
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
    fail(ErrorKind::kParse, "invalid calendar date");
  int doy = day;
  for (int m = 1; m < month; ++m) doy += days_in_month(year, m);
  const double days = is_leap(year) ? 366.0 : 365.0;
  return year + (doy - 1) / days;
}

double parse_date(const std::string& text) {
  const std::string_view s = trim(text);
  // YYYY-MM-DD
  if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
    int y = 0, m = 0, d = 0;
    if (parse_int(s.substr(0, 4), y) && parse_int(s.substr(5, 2), m) &&
        parse_int(s.substr(8, 2), d))
      return decimal_year(y, m, d);
    fail(ErrorKind::kParse, "malformed ISO date '" + std::string(s) + "'");
  }
  const double t = parse_double(s);
  if (!std::isfinite(t)) fail(ErrorKind::kParse, "non-finite date");
  return t;
}

TimeSeries read_csv(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long declared_rows = -1;
  std::string series_name = name;
  std::vector<Sample> pts;
  std::vector<std::size_t> lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      constexpr std::string_view kRows = "rows:";
      auto pos = view.find(kRows);
      if (pos != std::string_view::npos) {
        int n = 0;
        if (!parse_int(trim(view.substr(pos + kRows.size())), n) || n < 0)
          fail(ErrorKind::kParse,
               "line " + std::to_string(line_no) + ": bad row-count comment");
        declared_rows = n;
      }
      continue;
    }
    const auto comma = view.find(',');
    if (comma == std::string_view::npos ||
        view.find(',', comma + 1) != std::string_view::npos)
      fail(ErrorKind::kParse,
           "line " + std::to_string(line_no) + ": expected two columns");
    const auto date_field = trim(view.substr(0, comma));
    const auto value_field = trim(view.substr(comma + 1));
    if (!have_header) {
      have_header = true;
      bool numeric = true;
      try {
        parse_date(std::string(date_field));
      } catch (const Error&) {
        numeric = false;
      }
      if (numeric)
        fail(ErrorKind::kParse,
             "line " + std::to_string(line_no) + ": header row required");
      if (series_name.empty()) series_name = std::string(value_field);
      continue;
    }
    try {
      const double t = parse_date(std::string(date_field));
      const double v = parse_double(value_field);
      if (!std::isfinite(v)) fail(ErrorKind::kParse, "non-finite value");
      pts.push_back({t, v});
      lines.push_back(line_no);
    } catch (const Error& e) {
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (pts.empty()) fail(ErrorKind::kEmptyInput, "no data rows");
  if (declared_rows >= 0 && static_cast<std::size_t>(declared_rows) != pts.size())
    fail(ErrorKind::kParse, "declared " + std::to_string(declared_rows) +
                                " rows but found " + std::to_string(pts.size()));

  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pts[a].t < pts[b].t; });
  std::vector<Sample> sorted;
  sorted.reserve(pts.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& p = pts[order[k]];
    if (!sorted.empty() && sorted.back().t == p.t)
      fail(ErrorKind::kDuplicateTimestamp,
           "line " + std::to_string(lines[order[k]]) + ": duplicate timestamp " +
               format_double(p.t));
    sorted.push_back(p);
  }
  return TimeSeries(std::move(sorted), series_name);
}

TimeSeries load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open: " + path.string());
  try {
    return read_csv(in, {});
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_csv(std::ostream& out, const TimeSeries& ts) {
  out << "date,value\n";
  for (const auto& p : ts.points())
    out << format_double(p.t) << ',' << format_double(p.v) << '\n';
}

void save_csv(const std::filesystem::path& path, const TimeSeries& ts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot open for writing: " + path.string());
  write_csv(out, ts);
  if (!out) fail(ErrorKind::kIo, "write failed: " + path.string());
}

double interp_linear(const TimeSeries& ts, double t) {
  const auto& pts = ts.points();
  if (pts.empty()) fail(ErrorKind::kEmptyInput, "interpolation on empty series");
  if (!(t >= pts.front().t && t <= pts.back().t))
    fail(ErrorKind::kOutOfRange, "t=" + format_double(t) + " outside [" +
                                     format_double(pts.front().t) + ", " +
                                     format_double(pts.back().t) + "]");
  auto it = std::lower_bound(pts.begin(), pts.end(), t,
                             [](const Sample& s, double x) { return s.t < x; });
  if (it->t == t) return it->v;
  const Sample& hi = *it;
  const Sample& lo = *(it - 1);
  const double w = (t - lo.t) / (hi.t - lo.t);
  return lo.v + (hi.v - lo.v) * w;
}

TimeSeries loess_smooth(const TimeSeries& ts, const LoessConfig& cfg) {
  const std::size_t n = ts.size();
  if (cfg.degree != 1 && cfg.degree != 2)
    fail(ErrorKind::kInvalidArgument, "LOESS degree must be 1 or 2");
  if (!(cfg.span > 0.0 && cfg.span <= 1.0))
    fail(ErrorKind::kInvalidArgument, "LOESS span must lie in (0, 1]");
  const std::size_t ncoef = static_cast<std::size_t>(cfg.degree) + 1;
  if (cfg.span * static_cast<double>(n) < static_cast<double>(ncoef))
    fail(ErrorKind::kInvalidArgument, "LOESS span covers fewer points than degree + 1");

  const std::size_t q = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::floor(cfg.span * n + 1e-9)), ncoef, n);
  const auto& pts = ts.points();
  std::vector<double> out(n);
  std::vector<std::pair<double, std::size_t>> dist(n);

  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = pts[i].t;
    for (std::size_t j = 0; j < n; ++j) dist[j] = {std::abs(pts[j].t - x0), j};
    std::nth_element(dist.begin(), dist.begin() + (q - 1), dist.end());
    const double max_d = dist[q - 1].first;
    if (!(max_d > 0.0)) fail(ErrorKind::kSingularFit, "degenerate LOESS neighbourhood");
    std::sort(dist.begin(), dist.begin() + q);

    Eigen::MatrixXd design(q, ncoef);
    Eigen::VectorXd rhs(q);
    for (std::size_t r = 0; r < q; ++r) {
      const auto j = dist[r].second;
      const double u = (pts[j].t - x0) / max_d;
      const double a = 1.0 - std::pow(std::abs(u), 3);
      const double sw = std::sqrt(a > 0.0 ? a * a * a : 0.0);
      double basis = 1.0;
      for (std::size_t c = 0; c < ncoef; ++c) {
        design(r, c) = sw * basis;
        basis *= u;
      }
      rhs(r) = sw * pts[j].v;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < static_cast<Eigen::Index>(ncoef))
      fail(ErrorKind::kSingularFit,
           "singular LOESS local fit at t=" + format_double(x0));
    out[i] = qr.solve(rhs)(0);
  }
  return ts.with_values(out);
}

TimeSeries log_growth(const TimeSeries& ts) {
  const std::size_t n = ts.size();
  if (n < 2) fail(ErrorKind::kInsufficientData, "log growth needs at least 2 points");
  const auto& pts = ts.points();
  std::vector<double> lv(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(pts[i].v > 0.0))
      fail(ErrorKind::kDomain, "log growth of non-positive value at t=" +
                                   format_double(pts[i].t));
    lv[i] = std::log(pts[i].v);
  }
  std::vector<double> g(n);
  g[0] = (lv[1] - lv[0]) / (pts[1].t - pts[0].t);
  g[n - 1] = (lv[n - 1] - lv[n - 2]) / (pts[n - 1].t - pts[n - 2].t);
  for (std::size_t i = 1; i + 1 < n; ++i)
    g[i] = (lv[i + 1] - lv[i - 1]) / (pts[i + 1].t - pts[i - 1].t);
  return ts.with_values(g);
}

std::vector<AlignedPoint> align(const TimeSeries& a, const TimeSeries& b,
                                const std::vector<double>& grid) {
  std::vector<AlignedPoint> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back({t, interp_linear(a, t), interp_linear(b, t)});
  return out;
}

TimeSeries resample(const TimeSeries& ts, const std::vector<double>& grid) {
  std::vector<double> v;
  v.reserve(grid.size());
  for (double t : grid) v.push_back(interp_linear(ts, t));
  return TimeSeries::from_columns(grid, v, ts.name());
}

}  // namespace infoeq
