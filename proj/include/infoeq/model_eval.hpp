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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infoeq/model_fit.hpp"
#include "infoeq/params_io.hpp"
#include "infoeq/table.hpp"
#include "infoeq/timeseries.hpp"

namespace infoeq {

using SeriesMap = std::map<std::string, TimeSeries>;

// Model names accepted by evaluate_model / fit_model.
const std::vector<std::string>& eval_model_names();
const std::vector<std::string>& fit_model_names();

// Series each model reads (keys of SeriesMap), in a stable order.
std::vector<std::string> eval_inputs(const std::string& model);
std::vector<std::string> fit_inputs(const std::string& model);

struct EvalRequest {
  std::string model;
  SeriesMap inputs;
  ParamSet params;
  std::vector<double> grid;
  // Applied to every input series before evaluation.
  std::optional<LoessConfig> smooth;
};

// One row per grid value. Series models emit `t` first; curve models emit
// the sweep variable first. Unknown names throw kUnknownModel.
Table evaluate_model(const EvalRequest& req);

struct FitRequest {
  std::string model;
  SeriesMap inputs;
  ParamSet x0;
  std::vector<double> grid;
  std::optional<LoessConfig> smooth;
  fit::FitOptions options;
};

fit::FitResult fit_model(const FitRequest& req);

}  // namespace infoeq
