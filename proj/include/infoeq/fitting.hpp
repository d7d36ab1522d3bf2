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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infoeq/timeseries.hpp"

namespace infoeq::fit {

using Objective = std::function<double(std::span<const double>)>;

struct FitProblem {
  std::vector<std::string> param_names;
  std::vector<double> x0;
  std::vector<double> lower;  // may hold -inf
  std::vector<double> upper;  // may hold +inf
  Objective objective;
  // Typical magnitude per parameter; defaults to |x0| (1 where x0 is 0).
  std::vector<double> scale;
  double tol = 1e-8;
  int max_iter = 10000;

  void validate() const;
};

struct ResidualStats {
  double rmse = 0.0;
  double max_abs = 0.0;
  double sd = 0.0;  // sample standard deviation, the 1-sigma band
};

ResidualStats residual_stats(std::span<const double> residuals);

struct FitResult {
  std::vector<std::string> param_names;
  std::vector<double> x_star;
  double f_star = 0.0;
  double f_initial = 0.0;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
  std::vector<double> residual_series;
  // Independent solution of the same problem when one exists (log-linear
  // least squares for Cobb-Douglas).
  std::optional<std::vector<double>> cross_check;

  ResidualStats stats() const { return residual_stats(residual_series); }
  double param(const std::string& name) const;
};

enum class Transform { kLinear, kLog };

// sum_t (T(model_t) - T(data_t))^2; throws kDomain on log of non-positive.
double sum_sq(std::span<const double> model, std::span<const double> data,
              Transform transform);
std::vector<double> residuals(std::span<const double> model,
                              std::span<const double> data, Transform transform);

// Parameterised model evaluated at time t.
using ParamModel = std::function<double(std::span<const double> params, double t)>;

// Objective over params for fixed data. Data must be positive for log; a
// non-positive or non-finite model value makes the objective +inf so the
// search steers away from it.
Objective sum_sq_residuals(ParamModel model, std::vector<Sample> data,
                           Transform transform);

// Powell direction-set minimisation with Brent line searches, in
// coordinates scaled by |x0| per parameter. Bounds are enforced by
// clipping each line search to the box.
FitResult minimize(const FitProblem& fp);

}  // namespace infoeq::fit
