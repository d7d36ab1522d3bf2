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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "infoeq/table.hpp"
#include "infoeq/timeseries.hpp"

namespace infoeq::ensemble {

// Growth exponents a_i of N0 independent markets n_i = m^a_i.
class MarketEnsemble {
 public:
  explicit MarketEnsemble(std::vector<double> exponents);

  const std::vector<double>& exponents() const noexcept { return exponents_; }
  std::size_t n0() const noexcept { return exponents_.size(); }

 private:
  std::vector<double> exponents_;
};

// log Z(m) with Z = sum_i m^(-a_i), via log-sum-exp.
double log_partition_fn(const MarketEnsemble& ens, double m);
double partition_fn(const MarketEnsemble& ens, double m);

// <a> = -d log Z / d log m
double avg_index(const MarketEnsemble& ens, double m);
// <N(m)> = N0^2 / Z(m)
double avg_output(const MarketEnsemble& ens, double m);
// <a m^(a-1)> under the weights m^(-a_i)/Z
double avg_price(const MarketEnsemble& ens, double m);

struct Observables {
  double avg_a;
  double avg_n;
  double avg_price;
};

// All three observables sharing one partition-function evaluation.
Observables observables(const MarketEnsemble& ens, double m);

struct MonteCarloConfig {
  std::size_t n0 = 100;
  double a_mean = 1.5;
  double a_sd = 0.5;
  std::size_t runs = 500;
  std::vector<double> m_grid;  // strictly increasing, positive
  std::uint64_t seed = 0;

  // 200 log-spaced points on [1, 1000].
  static std::vector<double> default_grid();
  void validate() const;
};

// Parses flat `key = value` text: n0, a_mean, a_sd, runs, seed, and either
// m_grid = start:stop:count (log-spaced) or m_start/m_stop/m_count.
// A missing seed leaves has_seed false.
struct ParsedMonteCarloConfig {
  MonteCarloConfig config;
  bool has_seed = false;
};
ParsedMonteCarloConfig parse_mc_config(std::istream& in);
ParsedMonteCarloConfig load_mc_config(const std::string& path);

struct RunCurves {
  std::vector<double> avg_a;
  std::vector<double> avg_n;
  std::vector<double> avg_price;
};

struct MonteCarloResult {
  std::vector<double> m_grid;
  std::vector<RunCurves> runs;

  // run,m,avg_a,avg_n,avg_price ordered by (run, grid index)
  Table to_table() const;
};

// Exponents for one run: N(a_mean, a_sd) draws from a generator seeded by
// (seed, run). Independent of how runs are scheduled.
std::vector<double> draw_exponents(const MonteCarloConfig& cfg, std::size_t run);

// threads == 0 picks the hardware concurrency; results are identical for
// any thread count.
MonteCarloResult monte_carlo(const MonteCarloConfig& cfg, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Economic entropy.

struct EntropyParams {
  double k = 1.0;
  double gamma = 1.0;
  double m0 = 1.0;

  static EntropyParams make(double k, double gamma, double m0);
};

// (1/k) log Gamma(N/(gamma M0) + 1)
double entropy(double n, const EntropyParams& p);
// (1/k) (N/(gamma M0)) (log(N/(gamma M0)) - 1), the pre-Stirling form
double entropy_stirling(double n, const EntropyParams& p);
// dN/(k gamma M0) log(N/(gamma M0))
double entropy_delta(double n, double dn, const EntropyParams& p);

// ---------------------------------------------------------------------------
// Fluctuation-theorem comparison.

enum class ChangeMode { kLogPercent, kLevel };

// Successive changes of a series: 100 * diff(log v) or diff(v).
std::vector<double> quarterly_changes(const TimeSeries& ts,
                                      ChangeMode mode = ChangeMode::kLogPercent);

struct HistogramBin {
  double left;
  double right;
  std::size_t count;
  double theory;
};

struct PairRatio {
  double delta;     // |bin centre|
  double measured;  // count(+delta) / count(-delta); inf when the negative bin is empty
  double theory;    // e^delta
};

struct FluctuationResult {
  std::vector<HistogramBin> bins;
  std::vector<PairRatio> ratios;

  std::size_t total_count() const;
  // bin_left,bin_right,count,theory
  Table to_table() const;
};

// Histogram on bins symmetric about zero spanning [-max|d|, max|d|]. The
// theory column keeps the positive-side counts and maps each one to its
// mirror bin via P(-d) = P(+d) e^-d.
FluctuationResult fluctuation_comparison(std::span<const double> samples,
                                         int bins);

}  // namespace infoeq::ensemble
