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

#include "infoeq/ensemble.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "infoeq/errors.hpp"
#include "infoeq/grid.hpp"

namespace infoeq::ensemble {

MarketEnsemble::MarketEnsemble(std::vector<double> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty()) fail(ErrorKind::kInvalidArgument, "ensemble needs >= 1 market");
  for (double a : exponents_)
    if (!std::isfinite(a)) fail(ErrorKind::kDomain, "non-finite growth exponent");
}

namespace {

void require_m(double m) {
  if (!(m > 0.0) || !std::isfinite(m))
    fail(ErrorKind::kDomain, "money supply m must be positive, got " + format_double(m));
}

// Shifted Boltzmann sums for weights e^{-a_i log m}.
struct Weights {
  double log_m;
  double shift;  // max_i(-a_i log m)
  double sum;    // sum_i exp(-a_i log m - shift)

  double log_z() const { return shift + std::log(sum); }
  double z() const { return std::exp(shift) * sum; }
};

Weights weights(const MarketEnsemble& ens, double m) {
  require_m(m);
  const double lm = std::log(m);
  double shift = -std::numeric_limits<double>::infinity();
  for (double a : ens.exponents()) shift = std::max(shift, -a * lm);
  double sum = 0.0;
  for (double a : ens.exponents()) sum += std::exp(-a * lm - shift);
  return {lm, shift, sum};
}

}  // namespace

double log_partition_fn(const MarketEnsemble& ens, double m) {
  return weights(ens, m).log_z();
}

double partition_fn(const MarketEnsemble& ens, double m) { return weights(ens, m).z(); }

double avg_index(const MarketEnsemble& ens, double m) {
  return observables(ens, m).avg_a;
}

double avg_output(const MarketEnsemble& ens, double m) {
  return observables(ens, m).avg_n;
}

double avg_price(const MarketEnsemble& ens, double m) {
  return observables(ens, m).avg_price;
}

Observables observables(const MarketEnsemble& ens, double m) {
  const Weights w = weights(ens, m);
  const double log_z = w.log_z();
  double a_sum = 0.0;
  double price = 0.0;
  for (double a : ens.exponents()) {
    const double x = -a * w.log_m;
    a_sum += a * std::exp(x - w.shift);
    price += a * std::exp((a - 1.0) * w.log_m + x - log_z);
  }
  const double n0 = static_cast<double>(ens.n0());
  double z = w.z();
  double avg_n = n0 * n0 / z;
  if (!std::isfinite(avg_n) || z == 0.0) avg_n = std::exp(2.0 * std::log(n0) - log_z);
  return {a_sum / w.sum, avg_n, price};
}

// ---------------------------------------------------------------------------

std::vector<double> MonteCarloConfig::default_grid() {
  return logspace(1.0, 1000.0, 200);
}

void MonteCarloConfig::validate() const {
  if (n0 == 0) fail(ErrorKind::kInvalidArgument, "n0 must be positive");
  if (runs == 0) fail(ErrorKind::kInvalidArgument, "runs must be positive");
  if (!std::isfinite(a_mean)) fail(ErrorKind::kInvalidArgument, "a_mean must be finite");
  if (!(a_sd >= 0.0) || !std::isfinite(a_sd))
    fail(ErrorKind::kInvalidArgument, "a_sd must be non-negative");
  if (m_grid.empty()) fail(ErrorKind::kInvalidArgument, "m_grid is empty");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (!(m_grid[i] > 0.0) || !std::isfinite(m_grid[i]))
      fail(ErrorKind::kInvalidArgument, "m_grid values must be positive");
    if (i > 0 && !(m_grid[i] > m_grid[i - 1]))
      fail(ErrorKind::kInvalidArgument, "m_grid must be strictly increasing");
  }
}

namespace {

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const double v = parse_double(text);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e12)
    fail(ErrorKind::kParse, key + " must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

ParsedMonteCarloConfig parse_mc_config(std::istream& in) {
  ParsedMonteCarloConfig out;
  MonteCarloConfig& cfg = out.config;
  std::string grid_spec;
  double m_start = 1.0, m_stop = 1000.0;
  std::size_t m_count = 200;
  bool m_log = true;
  bool explicit_bounds = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_copy(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim_copy(line.substr(0, eq));
    const std::string value = trim_copy(line.substr(eq + 1));
    try {
      if (key == "n0") {
        cfg.n0 = parse_count(key, value);
      } else if (key == "a_mean") {
        cfg.a_mean = parse_double(value);
      } else if (key == "a_sd") {
        cfg.a_sd = parse_double(value);
      } else if (key == "runs") {
        cfg.runs = parse_count(key, value);
      } else if (key == "seed") {
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
        if (ec != std::errc() || ptr != value.data() + value.size())
          fail(ErrorKind::kParse, "seed must be an unsigned 64-bit integer");
        cfg.seed = seed;
        out.has_seed = true;
      } else if (key == "m_grid") {
        grid_spec = value;
      } else if (key == "m_start") {
        m_start = parse_double(value);
        explicit_bounds = true;
      } else if (key == "m_stop") {
        m_stop = parse_double(value);
        explicit_bounds = true;
      } else if (key == "m_count") {
        m_count = parse_count(key, value);
        explicit_bounds = true;
      } else if (key == "m_log") {
        m_log = parse_double(value) != 0.0;
        explicit_bounds = true;
      } else {
        fail(ErrorKind::kParse, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      fail(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!grid_spec.empty())
    cfg.m_grid = make_grid(parse_grid_spec(grid_spec, true));
  else if (explicit_bounds)
    cfg.m_grid = make_grid({m_start, m_stop, m_count, m_log});
  else
    cfg.m_grid = MonteCarloConfig::default_grid();
  cfg.validate();
  return out;
}

ParsedMonteCarloConfig load_mc_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open: " + path);
  return parse_mc_config(in);
}

Table MonteCarloResult::to_table() const {
  Table t;
  t.columns = {"run", "m", "avg_a", "avg_n", "avg_price"};
  t.rows.reserve(runs.size() * m_grid.size());
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (std::size_t j = 0; j < m_grid.size(); ++j)
      t.rows.push_back({static_cast<double>(r), m_grid[j], runs[r].avg_a[j],
                        runs[r].avg_n[j], runs[r].avg_price[j]});
  return t;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform on [0, 1) from the top 53 bits.
double uniform53(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<double> draw_exponents(const MonteCarloConfig& cfg, std::size_t run) {
  std::mt19937_64 gen(splitmix64(cfg.seed ^ splitmix64(run)));
  std::vector<double> a(cfg.n0);
  // Box-Muller, both variates used.
  for (std::size_t i = 0; i < cfg.n0; i += 2) {
    const double u1 = 1.0 - uniform53(gen);  // (0, 1]
    const double u2 = uniform53(gen);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    a[i] = cfg.a_mean + cfg.a_sd * r * std::cos(theta);
    if (i + 1 < cfg.n0) a[i + 1] = cfg.a_mean + cfg.a_sd * r * std::sin(theta);
  }
  return a;
}

MonteCarloResult monte_carlo(const MonteCarloConfig& cfg, unsigned threads) {
  cfg.validate();
  MonteCarloResult out;
  out.m_grid = cfg.m_grid;
  out.runs.resize(cfg.runs);

  auto work = [&](std::size_t run) {
    const MarketEnsemble ens(draw_exponents(cfg, run));
    RunCurves& curves = out.runs[run];
    const std::size_t n = cfg.m_grid.size();
    curves.avg_a.resize(n);
    curves.avg_n.resize(n);
    curves.avg_price.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Observables o = observables(ens, cfg.m_grid[j]);
      curves.avg_a[j] = o.avg_a;
      curves.avg_n[j] = o.avg_n;
      curves.avg_price[j] = o.avg_price;
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.runs));
  if (threads <= 1) {
    for (std::size_t r = 0; r < cfg.runs; ++r) work(r);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t r = t; r < cfg.runs; r += threads) work(r);
    });
  pool.clear();
  return out;
}

// ---------------------------------------------------------------------------

EntropyParams EntropyParams::make(double k, double gamma, double m0) {
  if (!(k > 0.0) || !(gamma > 0.0) || !(m0 > 0.0))
    fail(ErrorKind::kDomain, "entropy parameters must be positive");
  return {k, gamma, m0};
}

namespace {

double microstate_ratio(double n, const EntropyParams& p) {
  const double x = n / (p.gamma * p.m0);
  if (!(x >= 1.0) || !std::isfinite(x))
    throw ModelDomainError("entropy needs N/(gamma M0) >= 1, got " + format_double(x), n,
                           true);
  return x;
}

}  // namespace

double entropy(double n, const EntropyParams& p) {
  return std::lgamma(microstate_ratio(n, p) + 1.0) / p.k;
}

double entropy_stirling(double n, const EntropyParams& p) {
  const double x = microstate_ratio(n, p);
  return x * (std::log(x) - 1.0) / p.k;
}

double entropy_delta(double n, double dn, const EntropyParams& p) {
  const double x = microstate_ratio(n, p);
  return dn / (p.k * p.gamma * p.m0) * std::log(x);
}

// ---------------------------------------------------------------------------

std::vector<double> quarterly_changes(const TimeSeries& ts, ChangeMode mode) {
  const auto& pts = ts.points();
  std::vector<double> out;
  if (pts.size() < 2) return out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (mode == ChangeMode::kLevel) {
      out.push_back(pts[i].v - pts[i - 1].v);
    } else {
      if (!(pts[i].v > 0.0) || !(pts[i - 1].v > 0.0))
        fail(ErrorKind::kDomain, "log changes need positive values");
      out.push_back(100.0 * (std::log(pts[i].v) - std::log(pts[i - 1].v)));
    }
  }
  return out;
}

std::size_t FluctuationResult::total_count() const {
  std::size_t n = 0;
  for (const auto& b : bins) n += b.count;
  return n;
}

Table FluctuationResult::to_table() const {
  Table t;
  t.columns = {"bin_left", "bin_right", "count", "theory"};
  for (const auto& b : bins)
    t.rows.push_back({b.left, b.right, static_cast<double>(b.count), b.theory});
  return t;
}

FluctuationResult fluctuation_comparison(std::span<const double> samples, int bins) {
  constexpr std::size_t kMinSamples = 30;
  if (bins <= 0) fail(ErrorKind::kInvalidArgument, "bins must be positive");
  if (samples.size() < kMinSamples)
    fail(ErrorKind::kInsufficientData,
         "need at least 30 samples, got " + std::to_string(samples.size()));
  double range = 0.0;
  for (double d : samples) {
    if (!std::isfinite(d)) fail(ErrorKind::kDomain, "non-finite sample");
    range = std::max(range, std::abs(d));
  }
  if (range == 0.0) range = 1.0;

  const auto nb = static_cast<std::size_t>(bins);
  const double width = 2.0 * range / static_cast<double>(nb);
  FluctuationResult out;
  out.bins.resize(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    out.bins[j].left = -range + static_cast<double>(j) * width;
    out.bins[j].right = j + 1 == nb ? range : -range + static_cast<double>(j + 1) * width;
    out.bins[j].count = 0;
  }
  for (double d : samples) {
    auto j = static_cast<std::size_t>(std::floor((d + range) / width));
    out.bins[std::min(j, nb - 1)].count += 1;
  }

  for (std::size_t j = 0; j < nb; ++j) {
    const std::size_t mirror = nb - 1 - j;
    if (2 * j + 1 >= nb) {
      out.bins[j].theory = static_cast<double>(out.bins[j].count);
    } else {
      const auto& pos = out.bins[mirror];
      const double centre = 0.5 * (pos.left + pos.right);
      out.bins[j].theory = static_cast<double>(pos.count) * std::exp(-centre);
    }
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (2 * j + 1 <= nb) continue;
    const auto& pos = out.bins[j];
    const auto& neg = out.bins[nb - 1 - j];
    const double centre = 0.5 * (pos.left + pos.right);
    const double measured =
        neg.count == 0 ? (pos.count == 0 ? std::numeric_limits<double>::quiet_NaN()
                                         : std::numeric_limits<double>::infinity())
                       : static_cast<double>(pos.count) / static_cast<double>(neg.count);
    out.ratios.push_back({centre, measured, std::exp(centre)});
  }
  return out;
}

}  // namespace infoeq::ensemble
