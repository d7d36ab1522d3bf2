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

#include "infoeq/infoeq.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <thread>

#include "infoeq/ensemble.hpp"
#include "infoeq/errors.hpp"
#include "infoeq/grid.hpp"
#include "infoeq/ie_core.hpp"
#include "infoeq/macro_models.hpp"
#include "infoeq/model_eval.hpp"
#include "infoeq/params_io.hpp"
#include "infoeq/table.hpp"
#include "infoeq/timeseries.hpp"

struct infoeq_series {
  infoeq::TimeSeries ts;
};
struct infoeq_grid {
  std::vector<double> values;
};
struct infoeq_params {
  infoeq::ParamSet params;
};
struct infoeq_inputs {
  infoeq::SeriesMap series;
};
struct infoeq_table {
  infoeq::Table table;
};
struct infoeq_fit_result {
  std::string model;
  infoeq::fit::FitResult result;
};
struct infoeq_mc_config {
  infoeq::ensemble::MonteCarloConfig config;
  bool has_seed = false;
};

namespace {

struct LastError {
  std::string message;
  bool has_point = false;
  double at = 0.0;
};

thread_local LastError g_last;
thread_local std::string g_scratch;

infoeq_status status_of(infoeq::ErrorKind kind) {
  using infoeq::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return INFOEQ_ERR_INVALID_ARGUMENT;
    case ErrorKind::kIo: return INFOEQ_ERR_IO;
    case ErrorKind::kParse: return INFOEQ_ERR_PARSE;
    case ErrorKind::kDuplicateTimestamp: return INFOEQ_ERR_DUPLICATE_TIMESTAMP;
    case ErrorKind::kEmptyInput: return INFOEQ_ERR_EMPTY_INPUT;
    case ErrorKind::kOutOfRange: return INFOEQ_ERR_OUT_OF_RANGE;
    case ErrorKind::kDomain: return INFOEQ_ERR_DOMAIN;
    case ErrorKind::kModelDomain: return INFOEQ_ERR_MODEL_DOMAIN;
    case ErrorKind::kSingularFit: return INFOEQ_ERR_SINGULAR_FIT;
    case ErrorKind::kRankDeficient: return INFOEQ_ERR_RANK_DEFICIENT;
    case ErrorKind::kDegenerateEquilibrium: return INFOEQ_ERR_DEGENERATE_EQUILIBRIUM;
    case ErrorKind::kInsufficientData: return INFOEQ_ERR_INSUFFICIENT_DATA;
    case ErrorKind::kUnknownModel: return INFOEQ_ERR_UNKNOWN_MODEL;
  }
  return INFOEQ_ERR_INTERNAL;
}

infoeq_status set_error(infoeq_status st, std::string msg) {
  g_last.message = std::move(msg);
  g_last.has_point = false;
  return st;
}

template <class F>
infoeq_status guard(F&& f) noexcept {
  try {
    g_last = {};
    f();
    return INFOEQ_OK;
  } catch (const infoeq::ModelDomainError& e) {
    auto st = set_error(INFOEQ_ERR_MODEL_DOMAIN, e.what());
    g_last.has_point = e.has_point();
    g_last.at = e.at();
    return st;
  } catch (const infoeq::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(INFOEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(INFOEQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(INFOEQ_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) infoeq::fail(infoeq::ErrorKind::kInvalidArgument, std::string(what) + " is null");
}

template <class Writer>
void write_to(const char* path, Writer&& w) {
  require(path, "output path");
  if (std::string(path) == "-") {
    w(std::cout);
    std::cout.flush();
    if (!std::cout) infoeq::fail(infoeq::ErrorKind::kIo, "failed writing standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) infoeq::fail(infoeq::ErrorKind::kIo, std::string("cannot open '") + path + "' for writing");
  w(out);
  out.flush();
  if (!out) infoeq::fail(infoeq::ErrorKind::kIo, std::string("failed writing '") + path + "'");
}

std::optional<infoeq::LoessConfig> smooth_of(const infoeq_smooth_opts* s) {
  if (s == nullptr || !s->enabled) return std::nullopt;
  return infoeq::LoessConfig{s->degree, s->span};
}

const char* joined(const std::vector<std::string>& names) {
  g_scratch.clear();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) g_scratch += ',';
    g_scratch += names[i];
  }
  return g_scratch.c_str();
}

}  // namespace

extern "C" {

const char* infoeq_version(void) { return "0.1.0"; }

const char* infoeq_status_name(infoeq_status st) {
  switch (st) {
    case INFOEQ_OK: return "ok";
    case INFOEQ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case INFOEQ_ERR_IO: return "io";
    case INFOEQ_ERR_PARSE: return "parse";
    case INFOEQ_ERR_DUPLICATE_TIMESTAMP: return "duplicate_timestamp";
    case INFOEQ_ERR_EMPTY_INPUT: return "empty_input";
    case INFOEQ_ERR_OUT_OF_RANGE: return "out_of_range";
    case INFOEQ_ERR_DOMAIN: return "domain";
    case INFOEQ_ERR_MODEL_DOMAIN: return "model_domain";
    case INFOEQ_ERR_SINGULAR_FIT: return "singular_fit";
    case INFOEQ_ERR_RANK_DEFICIENT: return "rank_deficient";
    case INFOEQ_ERR_DEGENERATE_EQUILIBRIUM: return "degenerate_equilibrium";
    case INFOEQ_ERR_INSUFFICIENT_DATA: return "insufficient_data";
    case INFOEQ_ERR_UNKNOWN_MODEL: return "unknown_model";
    case INFOEQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int infoeq_exit_code(infoeq_status st) {
  switch (st) {
    case INFOEQ_OK: return INFOEQ_EXIT_OK;
    case INFOEQ_ERR_UNKNOWN_MODEL: return INFOEQ_EXIT_USAGE;
    case INFOEQ_ERR_INVALID_ARGUMENT:
    case INFOEQ_ERR_IO:
    case INFOEQ_ERR_PARSE:
    case INFOEQ_ERR_DUPLICATE_TIMESTAMP:
    case INFOEQ_ERR_EMPTY_INPUT:
    case INFOEQ_ERR_INTERNAL: return INFOEQ_EXIT_INPUT;
    case INFOEQ_ERR_OUT_OF_RANGE:
    case INFOEQ_ERR_DOMAIN:
    case INFOEQ_ERR_MODEL_DOMAIN:
    case INFOEQ_ERR_SINGULAR_FIT:
    case INFOEQ_ERR_RANK_DEFICIENT:
    case INFOEQ_ERR_DEGENERATE_EQUILIBRIUM:
    case INFOEQ_ERR_INSUFFICIENT_DATA: return INFOEQ_EXIT_DOMAIN;
  }
  return INFOEQ_EXIT_INPUT;
}

const char* infoeq_last_error(void) { return g_last.message.c_str(); }

int infoeq_last_error_point(double* at) {
  if (!g_last.has_point) return 0;
  if (at) *at = g_last.at;
  return 1;
}

// ---- series

infoeq_status infoeq_series_load(const char* path, infoeq_series** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new infoeq_series{infoeq::load_csv(path)};
  });
}

infoeq_status infoeq_series_from_arrays(const double* t, const double* v, size_t n,
                                        infoeq_series** out) {
  return guard([&] {
    require(out, "out");
    if (n > 0) {
      require(t, "t");
      require(v, "v");
    }
    std::vector<double> tv(t, t + n), vv(v, v + n);
    *out = new infoeq_series{infoeq::TimeSeries::from_columns(tv, vv)};
  });
}

infoeq_status infoeq_series_save(const infoeq_series* s, const char* path) {
  return guard([&] {
    require(s, "series");
    write_to(path, [&](std::ostream& o) { infoeq::write_csv(o, s->ts); });
  });
}

size_t infoeq_series_size(const infoeq_series* s) { return s ? s->ts.size() : 0; }

infoeq_status infoeq_series_get(const infoeq_series* s, size_t i, double* t, double* v) {
  return guard([&] {
    require(s, "series");
    if (i >= s->ts.size()) infoeq::fail(infoeq::ErrorKind::kOutOfRange, "series index out of range");
    if (t) *t = s->ts[i].t;
    if (v) *v = s->ts[i].v;
  });
}

void infoeq_series_free(infoeq_series* s) { delete s; }

infoeq_status infoeq_loess(const infoeq_series* in, int degree, double span,
                           infoeq_series** out) {
  return guard([&] {
    require(in, "series");
    require(out, "out");
    *out = new infoeq_series{infoeq::loess_smooth(in->ts, {degree, span})};
  });
}

infoeq_status infoeq_log_growth(const infoeq_series* in, infoeq_series** out) {
  return guard([&] {
    require(in, "series");
    require(out, "out");
    *out = new infoeq_series{infoeq::log_growth(in->ts)};
  });
}

infoeq_status infoeq_interp(const infoeq_series* s, double t, double* out) {
  return guard([&] {
    require(s, "series");
    require(out, "out");
    *out = infoeq::interp_linear(s->ts, t);
  });
}

// ---- grids

infoeq_status infoeq_grid_parse(const char* spec, int log_spaced, infoeq_grid** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new infoeq_grid{infoeq::make_grid(infoeq::parse_grid_spec(spec, log_spaced != 0))};
  });
}

infoeq_status infoeq_grid_from_series(const infoeq_series* s, infoeq_grid** out) {
  return guard([&] {
    require(s, "series");
    require(out, "out");
    *out = new infoeq_grid{s->ts.times()};
  });
}

size_t infoeq_grid_size(const infoeq_grid* g) { return g ? g->values.size() : 0; }
const double* infoeq_grid_values(const infoeq_grid* g) { return g ? g->values.data() : nullptr; }
void infoeq_grid_free(infoeq_grid* g) { delete g; }

// ---- params

infoeq_status infoeq_params_new(infoeq_params** out) {
  return guard([&] {
    require(out, "out");
    *out = new infoeq_params{};
  });
}

infoeq_status infoeq_params_load(const char* path, infoeq_params** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new infoeq_params{infoeq::load_params(path)};
  });
}

infoeq_status infoeq_params_set(infoeq_params* p, const char* key, double value) {
  return guard([&] {
    require(p, "params");
    require(key, "key");
    p->params.set(key, value);
  });
}

infoeq_status infoeq_params_get(const infoeq_params* p, const char* key, double* out) {
  return guard([&] {
    require(p, "params");
    require(key, "key");
    require(out, "out");
    *out = p->params.get(key);
  });
}

void infoeq_params_free(infoeq_params* p) { delete p; }

// ---- inputs

infoeq_status infoeq_inputs_new(infoeq_inputs** out) {
  return guard([&] {
    require(out, "out");
    *out = new infoeq_inputs{};
  });
}

infoeq_status infoeq_inputs_add(infoeq_inputs* in, const char* name, const infoeq_series* s) {
  return guard([&] {
    require(in, "inputs");
    require(name, "name");
    require(s, "series");
    in->series.insert_or_assign(name, s->ts);
  });
}

void infoeq_inputs_free(infoeq_inputs* in) { delete in; }

const char* infoeq_eval_inputs(const char* model) {
  try {
    return joined(infoeq::eval_inputs(model ? model : ""));
  } catch (...) {
    return nullptr;
  }
}

const char* infoeq_fit_inputs(const char* model) {
  try {
    return joined(infoeq::fit_inputs(model ? model : ""));
  } catch (...) {
    return nullptr;
  }
}

// ---- tables

size_t infoeq_table_rows(const infoeq_table* t) { return t ? t->table.rows.size() : 0; }
size_t infoeq_table_cols(const infoeq_table* t) { return t ? t->table.columns.size() : 0; }

const char* infoeq_table_column(const infoeq_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

double infoeq_table_get(const infoeq_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.columns.size()) return NAN;
  return t->table.rows[row][col];
}

infoeq_status infoeq_table_save(const infoeq_table* t, const char* path) {
  return guard([&] {
    require(t, "table");
    write_to(path, [&](std::ostream& o) { infoeq::write_table(o, t->table); });
  });
}

void infoeq_table_free(infoeq_table* t) { delete t; }

// ---- eval / fit

infoeq_status infoeq_eval(const char* model, const infoeq_inputs* inputs,
                          const infoeq_params* params, const infoeq_grid* grid,
                          const infoeq_smooth_opts* smooth, infoeq_table** out) {
  return guard([&] {
    require(model, "model");
    require(grid, "grid");
    require(out, "out");
    infoeq::EvalRequest req;
    req.model = model;
    if (inputs) req.inputs = inputs->series;
    if (params) req.params = params->params;
    req.grid = grid->values;
    req.smooth = smooth_of(smooth);
    *out = new infoeq_table{infoeq::evaluate_model(req)};
  });
}

infoeq_status infoeq_fit(const char* model, const infoeq_inputs* inputs,
                         const infoeq_params* x0, const infoeq_grid* grid,
                         const infoeq_smooth_opts* smooth, double tol, int max_iter,
                         infoeq_fit_result** out) {
  return guard([&] {
    require(model, "model");
    require(inputs, "inputs");
    require(x0, "x0");
    require(grid, "grid");
    require(out, "out");
    infoeq::FitRequest req;
    req.model = model;
    req.inputs = inputs->series;
    req.x0 = x0->params;
    req.grid = grid->values;
    req.smooth = smooth_of(smooth);
    if (tol > 0.0) req.options.tol = tol;
    if (max_iter > 0) req.options.max_iter = max_iter;
    *out = new infoeq_fit_result{model, infoeq::fit_model(req)};
  });
}

size_t infoeq_fit_param_count(const infoeq_fit_result* r) {
  return r ? r->result.x_star.size() : 0;
}

const char* infoeq_fit_param_name(const infoeq_fit_result* r, size_t i) {
  if (!r || i >= r->result.param_names.size()) return nullptr;
  return r->result.param_names[i].c_str();
}

double infoeq_fit_param_value(const infoeq_fit_result* r, size_t i) {
  if (!r || i >= r->result.x_star.size()) return NAN;
  return r->result.x_star[i];
}

double infoeq_fit_f_star(const infoeq_fit_result* r) { return r ? r->result.f_star : NAN; }
double infoeq_fit_f_initial(const infoeq_fit_result* r) { return r ? r->result.f_initial : NAN; }
int infoeq_fit_iterations(const infoeq_fit_result* r) { return r ? r->result.iterations : 0; }
int infoeq_fit_converged(const infoeq_fit_result* r) { return r && r->result.converged ? 1 : 0; }
double infoeq_fit_rmse(const infoeq_fit_result* r) { return r ? r->result.stats().rmse : NAN; }

infoeq_status infoeq_fit_report_save(const infoeq_fit_result* r, const char* path) {
  return guard([&] {
    require(r, "fit result");
    const std::string doc = infoeq::fit::fit_report_json(r->model, r->result);
    write_to(path, [&](std::ostream& o) { o << doc; });
  });
}

void infoeq_fit_result_free(infoeq_fit_result* r) { delete r; }

// ---- ensemble

infoeq_status infoeq_mc_config_new(infoeq_mc_config** out) {
  return guard([&] {
    require(out, "out");
    auto* c = new infoeq_mc_config{};
    c->config.m_grid = infoeq::ensemble::MonteCarloConfig::default_grid();
    *out = c;
  });
}

infoeq_status infoeq_mc_config_load(const char* path, infoeq_mc_config** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    auto parsed = infoeq::ensemble::load_mc_config(path);
    *out = new infoeq_mc_config{std::move(parsed.config), parsed.has_seed};
  });
}

int infoeq_mc_config_has_seed(const infoeq_mc_config* c) { return c && c->has_seed ? 1 : 0; }

infoeq_status infoeq_mc_config_set_seed(infoeq_mc_config* c, uint64_t seed) {
  return guard([&] {
    require(c, "config");
    c->config.seed = seed;
    c->has_seed = true;
  });
}

infoeq_status infoeq_mc_config_set(infoeq_mc_config* c, const char* key, double value) {
  return guard([&] {
    require(c, "config");
    require(key, "key");
    const std::string k = key;
    auto count = [&] {
      if (!(value >= 0.0) || value != std::floor(value) || value > 1e12)
        infoeq::fail(infoeq::ErrorKind::kInvalidArgument, k + " must be a non-negative integer");
      return static_cast<std::size_t>(value);
    };
    if (k == "n0") c->config.n0 = count();
    else if (k == "runs") c->config.runs = count();
    else if (k == "a_mean") c->config.a_mean = value;
    else if (k == "a_sd") c->config.a_sd = value;
    else infoeq::fail(infoeq::ErrorKind::kInvalidArgument, "unknown config key '" + k + "'");
  });
}

infoeq_status infoeq_mc_config_set_grid(infoeq_mc_config* c, const infoeq_grid* g) {
  return guard([&] {
    require(c, "config");
    require(g, "grid");
    c->config.m_grid = g->values;
  });
}

void infoeq_mc_config_free(infoeq_mc_config* c) { delete c; }

infoeq_status infoeq_monte_carlo(const infoeq_mc_config* c, unsigned threads,
                                 infoeq_table** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    if (!c->has_seed)
      infoeq::fail(infoeq::ErrorKind::kInvalidArgument, "Monte Carlo needs an explicit seed");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    *out = new infoeq_table{infoeq::ensemble::monte_carlo(c->config, threads).to_table()};
  });
}

infoeq_status infoeq_fluctuation(const infoeq_series* s, int bins, int level_changes,
                                 infoeq_table** out) {
  return guard([&] {
    require(s, "series");
    require(out, "out");
    using infoeq::ensemble::ChangeMode;
    const auto changes = infoeq::ensemble::quarterly_changes(
        s->ts, level_changes ? ChangeMode::kLevel : ChangeMode::kLogPercent);
    *out = new infoeq_table{infoeq::ensemble::fluctuation_comparison(changes, bins).to_table()};
  });
}

// ---- scalars

infoeq_status infoeq_ge_source(double k, double d_ref, double s_ref, double s, double* out) {
  return guard([&] {
    require(out, "out");
    *out = infoeq::core::ge_source(infoeq::core::Relation::make(k, d_ref, s_ref), s);
  });
}

infoeq_status infoeq_k_index(double n, double m, double alpha, double gamma, double m0,
                             double* out) {
  return guard([&] {
    require(out, "out");
    *out = infoeq::macro::k_index(n, m, infoeq::macro::PriceLevelParams::make(alpha, gamma, m0));
  });
}

infoeq_status infoeq_price_level(double n, double m, double alpha, double gamma, double m0,
                                 double* out) {
  return guard([&] {
    require(out, "out");
    *out = infoeq::macro::price_level(n, m,
                                      infoeq::macro::PriceLevelParams::make(alpha, gamma, m0));
  });
}

infoeq_status infoeq_interest_rate(double n, double m, double k_i, double k_p, double* out) {
  return guard([&] {
    require(out, "out");
    *out = infoeq::macro::interest_rate(n, m, infoeq::macro::InterestParams::make(k_i, k_p));
  });
}

infoeq_status infoeq_ridge_sigma(double kappa, double gamma, double* out) {
  return guard([&] {
    require(out, "out");
    *out = infoeq::macro::ridge_sigma(kappa, gamma);
  });
}

}  // extern "C"
