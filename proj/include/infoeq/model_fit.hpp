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

#include <string>
#include <vector>

#include "infoeq/fitting.hpp"
#include "infoeq/macro_models.hpp"
#include "infoeq/timeseries.hpp"

namespace infoeq::fit {

struct FitOptions {
  double tol = 1e-8;
  int max_iter = 10000;
};

// Log-space residuals of price_level against p on grid. Searches over
// (log alpha, log gamma M0, log M0) so the model domain N, M > gamma M0 is
// a box constraint; reports (alpha, gamma, M0).
FitResult fit_price_level(const TimeSeries& n, const TimeSeries& m, const TimeSeries& p,
                          const std::vector<double>& grid,
                          const macro::PriceLevelParams& x0, const FitOptions& opts = {});

// Sum of squared log-rate residuals for one market.
double interest_market_objective(const TimeSeries& n, const TimeSeries& m,
                                 const TimeSeries& rate, const std::vector<double>& grid,
                                 const macro::InterestParams& ip);

// Long rate against N/M plus short rate against N/MB, one shared (k_i, k_p).
double interest_objective(const TimeSeries& n, const TimeSeries& m, const TimeSeries& mb,
                          const TimeSeries& i_long, const TimeSeries& i_short,
                          const std::vector<double>& grid, const macro::InterestParams& ip);

FitResult fit_interest(const TimeSeries& n, const TimeSeries& m, const TimeSeries& mb,
                       const TimeSeries& i_long, const TimeSeries& i_short,
                       const std::vector<double>& grid, const macro::InterestParams& x0,
                       const FitOptions& opts = {});

// Ordinary least squares of log N on (1, log K, log L). Throws
// kRankDeficient when K and L do not vary independently.
macro::CobbDouglasParams cobb_douglas_loglinear(const TimeSeries& n, const TimeSeries& k,
                                                const TimeSeries& l,
                                                const std::vector<double>& grid);

// Log-space residuals; the log-linear solution is stored in cross_check.
FitResult fit_cobb_douglas(const TimeSeries& n, const TimeSeries& k, const TimeSeries& l,
                           const std::vector<double>& grid,
                           const macro::CobbDouglasParams& x0, const FitOptions& opts = {});

// Linear-space residuals of H = N/(k_H P) against h.
FitResult fit_okun(const TimeSeries& n, const TimeSeries& p, const TimeSeries& h,
                   const std::vector<double>& grid, double k_h0,
                   const FitOptions& opts = {});

// Key-value JSON document: model, parameters, f_star, iterations,
// converged, residual summary.
std::string fit_report_json(const std::string& model, const FitResult& result);

}  // namespace infoeq::fit
