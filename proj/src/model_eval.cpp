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

#include "infoeq/model_eval.hpp"

#include <algorithm>
#include <functional>

#include "infoeq/errors.hpp"
#include "infoeq/macro_models.hpp"

namespace infoeq {

namespace {

using Inputs = std::vector<std::string>;

const std::map<std::string, Inputs>& eval_table() {
  static const std::map<std::string, Inputs> t = {
      {"price-level", {"N", "M"}}, {"inflation", {"N", "M"}},
      {"interest", {"N", "M"}},    {"okun", {"N", "P"}},
      {"cobb-douglas", {"K", "L"}}, {"adas", {}},
      {"islm", {}},                {"ridge", {}},
  };
  return t;
}

const std::map<std::string, Inputs>& fit_table() {
  static const std::map<std::string, Inputs> t = {
      {"price-level", {"N", "M", "P"}},
      {"interest", {"N", "M", "MB", "i_long", "i_short"}},
      {"cobb-douglas", {"N", "K", "L"}},
      {"okun", {"N", "P", "H"}},
  };
  return t;
}

std::vector<std::string> keys_of(const std::map<std::string, Inputs>& t) {
  std::vector<std::string> k;
  for (const auto& [name, _] : t) k.push_back(name);
  return k;
}

const Inputs& lookup(const std::map<std::string, Inputs>& t, const std::string& model) {
  auto it = t.find(model);
  if (it == t.end()) fail(ErrorKind::kUnknownModel, "unknown model '" + model + "'");
  return it->second;
}

// Input series by name, LOESS-smoothed when requested.
SeriesMap prepare(const SeriesMap& raw, const Inputs& needed,
                  const std::optional<LoessConfig>& smooth) {
  SeriesMap out;
  for (const auto& key : needed) {
    auto it = raw.find(key);
    if (it == raw.end()) fail(ErrorKind::kInvalidArgument, "missing input series '" + key + "'");
    out.emplace(key, smooth ? loess_smooth(it->second, *smooth) : it->second);
  }
  return out;
}

void require_grid(const std::vector<double>& grid) {
  if (grid.empty()) fail(ErrorKind::kInvalidArgument, "grid is empty");
}

// Runs f(x) per grid point, tagging domain failures with the point.
Table sweep(const std::vector<double>& grid, std::vector<std::string> columns,
            const std::function<std::vector<double>(double)>& row) {
  Table t;
  t.columns = std::move(columns);
  for (double x : grid) {
    try {
      std::vector<double> r{x};
      auto rest = row(x);
      r.insert(r.end(), rest.begin(), rest.end());
      t.add_row(std::move(r));
    } catch (const ModelDomainError& e) {
      if (e.has_point()) throw;
      throw ModelDomainError(std::string(e.what()) + " at " + t.columns.front() + "=" +
                                 format_double(x),
                             x, true);
    }
  }
  return t;
}

Table from_series(std::vector<std::string> columns, const std::vector<TimeSeries>& series) {
  Table t;
  t.columns = std::move(columns);
  const std::size_t n = series.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> r{series.front()[i].t};
    for (const auto& s : series) r.push_back(s[i].v);
    t.add_row(std::move(r));
  }
  return t;
}

macro::PriceLevelParams price_params(const ParamSet& p) {
  return macro::PriceLevelParams::make(p.get("alpha"), p.get("gamma"), p.get("M0"));
}

}  // namespace

const std::vector<std::string>& eval_model_names() {
  static const auto names = keys_of(eval_table());
  return names;
}

const std::vector<std::string>& fit_model_names() {
  static const auto names = keys_of(fit_table());
  return names;
}

std::vector<std::string> eval_inputs(const std::string& model) {
  return lookup(eval_table(), model);
}

std::vector<std::string> fit_inputs(const std::string& model) {
  return lookup(fit_table(), model);
}

Table evaluate_model(const EvalRequest& req) {
  const auto& needed = lookup(eval_table(), req.model);
  require_grid(req.grid);
  const SeriesMap in = prepare(req.inputs, needed, req.smooth);
  const ParamSet& p = req.params;
  const auto& grid = req.grid;

  if (req.model == "price-level") {
    const auto pp = price_params(p);
    const auto& n = in.at("N");
    const auto& m = in.at("M");
    const auto level = macro::price_level_series(n, m, pp, grid);
    return sweep(grid, {"t", "k", "P"}, [&, i = std::size_t{0}](double t) mutable {
      const double k = macro::k_index(interp_linear(n, t), interp_linear(m, t), pp);
      return std::vector<double>{k, level[i++].v};
    });
  }
  if (req.model == "inflation") {
    const auto pp = price_params(p);
    const auto level = macro::price_level_series(in.at("N"), in.at("M"), pp, grid);
    return from_series({"t", "P", "inflation"}, {level, log_growth(level)});
  }
  if (req.model == "interest") {
    const auto ip = macro::InterestParams::make(p.get("k_i"), p.get("k_p"));
    return from_series({"t", "rate"}, {macro::interest_series(in.at("N"), in.at("M"), ip, grid)});
  }
  if (req.model == "okun") {
    const auto r = macro::okun_hours(in.at("N"), in.at("P"), p.get("k_H"), grid);
    return from_series({"t", "hours", "hours_growth", "real_growth"},
                       {r.hours, r.hours_growth, r.real_growth});
  }
  if (req.model == "cobb-douglas") {
    const auto cd = macro::CobbDouglasParams::make(p.get("A"), p.get("k1"), p.get("k2"));
    return from_series({"t", "N"},
                       {macro::cobb_douglas_series(in.at("K"), in.at("L"), cd, grid)});
  }
  if (req.model == "adas") {
    const auto ap = macro::AdasParams::make(p.get("k_A"), p.get("N0"), p.get("N_ref"),
                                            p.get("S0"), p.get("S_ref"));
    const double shift = p.get_or("supply_shift", 0.0);
    return sweep(grid, {"delta", "ad_price", "sras_price", "S", "lras_price"},
                 [&](double x) {
                   const double s = ap.s_ref + x;
                   if (!(s > 0.0)) throw ModelDomainError("LRAS needs S_ref + delta > 0");
                   return std::vector<double>{macro::ad_price(ap, x),
                                              macro::sras_price(ap, x - shift), s,
                                              macro::lras_price(ap, s)};
                 });
  }
  if (req.model == "islm") {
    const auto ip = macro::IslmParams::make(p.get("N0"), p.get("M_ref"), p.get("S_ref"),
                                            p.get("k_p"), p.get("k_s"), p.get("k_i"));
    const double dn = p.get_or("shift_N", 0.0);
    const double dm = p.get_or("shift_M", 0.0);
    return sweep(grid, {"delta", "lm_money", "is", "lm_output"}, [&](double x) {
      return std::vector<double>{macro::lm_rate(ip, dn, x), macro::is_rate(ip, x, dn),
                                 macro::lm_rate(ip, x, dm)};
    });
  }
  // ridge: grid over kappa.
  const double gamma = p.get("gamma");
  return sweep(grid, {"kappa", "sigma", "N_over_C0", "P_over_alpha"}, [&](double kappa) {
    const double sigma = macro::ridge_sigma(kappa, gamma);
    const double ratio = macro::ridge_source_ratio(kappa, gamma);
    return std::vector<double>{sigma, ratio, macro::ridge_price(sigma, ratio, gamma)};
  });
}

fit::FitResult fit_model(const FitRequest& req) {
  const auto& needed = lookup(fit_table(), req.model);
  require_grid(req.grid);
  const SeriesMap in = prepare(req.inputs, needed, req.smooth);
  const ParamSet& x0 = req.x0;

  if (req.model == "price-level")
    return fit::fit_price_level(in.at("N"), in.at("M"), in.at("P"), req.grid,
                                price_params(x0), req.options);
  if (req.model == "interest")
    return fit::fit_interest(in.at("N"), in.at("M"), in.at("MB"), in.at("i_long"),
                             in.at("i_short"), req.grid,
                             macro::InterestParams::make(x0.get("k_i"), x0.get("k_p")),
                             req.options);
  if (req.model == "cobb-douglas")
    return fit::fit_cobb_douglas(
        in.at("N"), in.at("K"), in.at("L"), req.grid,
        macro::CobbDouglasParams::make(x0.get("A"), x0.get("k1"), x0.get("k2")), req.options);
  return fit::fit_okun(in.at("N"), in.at("P"), in.at("H"), req.grid, x0.get("k_H"),
                       req.options);
}

}  // namespace infoeq
