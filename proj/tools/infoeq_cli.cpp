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

// infoeq command-line front end. A thin shell over the C API: every output
// file is produced by the library's own writers.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infoeq/infoeq.h"

namespace {

// Owning wrappers around the opaque handles.
template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Series = std::unique_ptr<infoeq_series, Deleter<infoeq_series, infoeq_series_free>>;
using Grid = std::unique_ptr<infoeq_grid, Deleter<infoeq_grid, infoeq_grid_free>>;
using Params = std::unique_ptr<infoeq_params, Deleter<infoeq_params, infoeq_params_free>>;
using Inputs = std::unique_ptr<infoeq_inputs, Deleter<infoeq_inputs, infoeq_inputs_free>>;
using TableH = std::unique_ptr<infoeq_table, Deleter<infoeq_table, infoeq_table_free>>;
using FitH = std::unique_ptr<infoeq_fit_result, Deleter<infoeq_fit_result, infoeq_fit_result_free>>;
using McConfig = std::unique_ptr<infoeq_mc_config, Deleter<infoeq_mc_config, infoeq_mc_config_free>>;

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

void check(infoeq_status st, const std::string& context) {
  if (st == INFOEQ_OK) return;
  std::cerr << "infoeq: " << context << ": " << infoeq_last_error() << "\n";
  throw Exit{infoeq_exit_code(st)};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "infoeq: " << msg << "\n";
  throw Exit{INFOEQ_EXIT_USAGE};
}

Series load_series(const std::string& path) {
  infoeq_series* s = nullptr;
  check(infoeq_series_load(path.c_str(), &s), path);
  return Series(s);
}

// The report line goes to stderr when stdout carries the data.
std::ostream& info_stream(const std::string& output) {
  return output == "-" ? std::cerr : std::cout;
}

struct GridArgs {
  std::string spec;
  bool log_spaced = false;
  std::string from;

  void add(CLI::App* cmd, bool allow_from) {
    cmd->add_option("--grid", spec, "Evaluation grid start:stop:count");
    cmd->add_flag("--log-grid", log_spaced, "Log-spaced grid");
    if (allow_from)
      cmd->add_option("--grid-from", from,
                      "Use the timestamps of this named input as the grid");
  }
};

struct SmoothArgs {
  bool enabled = false;
  int degree = 2;
  double span = 0.3;

  void add(CLI::App* cmd, const char* flag_help) {
    cmd->add_flag("--smooth", enabled, flag_help);
    cmd->add_option("--degree", degree, "LOESS polynomial degree (1 or 2)")->capture_default_str();
    cmd->add_option("--span", span, "LOESS span fraction in (0, 1]")->capture_default_str();
  }
  infoeq_smooth_opts opts() const { return {enabled ? 1 : 0, degree, span}; }
};

struct NamedInputs {
  std::vector<std::string> specs;  // NAME=PATH
};

std::vector<std::string> split_names(const char* joined) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = joined; *p; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += *p;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct LoadedInputs {
  Inputs handle;
  std::vector<std::pair<std::string, Series>> series;
};

LoadedInputs load_inputs(const std::vector<std::string>& specs,
                         const std::vector<std::string>& required) {
  LoadedInputs li;
  infoeq_inputs* raw = nullptr;
  check(infoeq_inputs_new(&raw), "inputs");
  li.handle.reset(raw);
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
      usage_error("--input expects NAME=PATH, got '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    Series s = load_series(spec.substr(eq + 1));
    check(infoeq_inputs_add(li.handle.get(), name.c_str(), s.get()), name);
    li.series.emplace_back(name, std::move(s));
  }
  for (const auto& name : required) {
    bool found = false;
    for (const auto& [n, _] : li.series) found = found || n == name;
    if (!found) usage_error("missing --input " + name + "=PATH");
  }
  return li;
}

Grid make_grid(const GridArgs& g, const LoadedInputs* li,
               const std::vector<std::string>& required) {
  infoeq_grid* raw = nullptr;
  if (!g.spec.empty()) {
    if (!g.from.empty()) usage_error("--grid and --grid-from are exclusive");
    check(infoeq_grid_parse(g.spec.c_str(), g.log_spaced ? 1 : 0, &raw), "--grid");
    return Grid(raw);
  }
  std::string from = g.from;
  if (from.empty()) {
    if (required.empty() || li == nullptr) usage_error("--grid is required");
    from = required.front();
  }
  if (li != nullptr)
    for (const auto& [name, s] : li->series)
      if (name == from) {
        check(infoeq_grid_from_series(s.get(), &raw), "--grid-from");
        return Grid(raw);
      }
  usage_error("--grid-from names no loaded input: " + from);
}

std::vector<std::string> model_inputs(const char* (*lookup)(const char*),
                                      const std::string& model) {
  const char* joined = lookup(model.c_str());
  if (joined == nullptr) usage_error("unknown model '" + model + "'");
  return split_names(joined);
}

// ---- commands

int cmd_smooth(const std::string& input, int degree, double span, const std::string& output) {
  Series in = load_series(input);
  infoeq_series* raw = nullptr;
  check(infoeq_loess(in.get(), degree, span, &raw), "smooth");
  Series out(raw);
  check(infoeq_series_save(out.get(), output.c_str()), output);
  info_stream(output) << infoeq_series_size(out.get()) << " points\n";
  return INFOEQ_EXIT_OK;
}

int cmd_eval(const std::string& model, const std::string& params_path,
             const std::vector<std::string>& input_specs, const GridArgs& grid_args,
             const SmoothArgs& smooth, const std::string& output) {
  const auto required = model_inputs(infoeq_eval_inputs, model);
  Params params;
  infoeq_params* praw = nullptr;
  if (!params_path.empty()) {
    check(infoeq_params_load(params_path.c_str(), &praw), params_path);
  } else {
    check(infoeq_params_new(&praw), "params");
  }
  params.reset(praw);
  LoadedInputs li = load_inputs(input_specs, required);
  Grid grid = make_grid(grid_args, &li, required);
  const auto sopts = smooth.opts();
  infoeq_table* traw = nullptr;
  const infoeq_status st =
      infoeq_eval(model.c_str(), li.handle.get(), params.get(), grid.get(), &sopts, &traw);
  double at = 0.0;
  if (st == INFOEQ_ERR_MODEL_DOMAIN && infoeq_last_error_point(&at)) {
    std::cerr << "infoeq: eval: model domain violated at grid point " << at << ": "
              << infoeq_last_error() << "\n";
    throw Exit{INFOEQ_EXIT_DOMAIN};
  }
  check(st, "eval");
  TableH table(traw);
  check(infoeq_table_save(table.get(), output.c_str()), output);
  info_stream(output) << infoeq_table_rows(table.get()) << " rows\n";
  return INFOEQ_EXIT_OK;
}

int cmd_fit(const std::string& model, const std::string& x0_path,
            const std::vector<std::string>& input_specs, const GridArgs& grid_args,
            const SmoothArgs& smooth, double tol, int max_iter, const std::string& output) {
  const auto required = model_inputs(infoeq_fit_inputs, model);
  infoeq_params* praw = nullptr;
  check(infoeq_params_load(x0_path.c_str(), &praw), x0_path);
  Params x0(praw);
  LoadedInputs li = load_inputs(input_specs, required);
  Grid grid = make_grid(grid_args, &li, required);
  const auto sopts = smooth.opts();
  infoeq_fit_result* fraw = nullptr;
  check(infoeq_fit(model.c_str(), li.handle.get(), x0.get(), grid.get(), &sopts, tol,
                   max_iter, &fraw),
        "fit");
  FitH fit(fraw);
  check(infoeq_fit_report_save(fit.get(), output.c_str()), output);
  std::ostream& os = info_stream(output);
  const auto old_prec = os.precision(10);
  for (std::size_t i = 0; i < infoeq_fit_param_count(fit.get()); ++i)
    os << infoeq_fit_param_name(fit.get(), i) << " = " << infoeq_fit_param_value(fit.get(), i)
       << "\n";
  os << "f_star = " << infoeq_fit_f_star(fit.get()) << "\n";
  os.precision(old_prec);
  if (!infoeq_fit_converged(fit.get())) {
    std::cerr << "infoeq: fit: no convergence after " << infoeq_fit_iterations(fit.get())
              << " iterations; report holds the best point found\n";
    return INFOEQ_EXIT_NOT_CONVERGED;
  }
  return INFOEQ_EXIT_OK;
}

int cmd_ensemble(const std::string& config, std::optional<std::uint64_t> seed,
                 unsigned threads, const std::string& output) {
  infoeq_mc_config* craw = nullptr;
  check(infoeq_mc_config_load(config.c_str(), &craw), config);
  McConfig cfg(craw);
  if (seed) check(infoeq_mc_config_set_seed(cfg.get(), *seed), "--seed");
  if (!infoeq_mc_config_has_seed(cfg.get()))
    usage_error("ensemble needs --seed (or a seed entry in the config)");
  infoeq_table* traw = nullptr;
  check(infoeq_monte_carlo(cfg.get(), threads, &traw), "ensemble");
  TableH table(traw);
  check(infoeq_table_save(table.get(), output.c_str()), output);
  info_stream(output) << infoeq_table_rows(table.get()) << " rows\n";
  return INFOEQ_EXIT_OK;
}

int cmd_fluctuation(const std::string& input, int bins, bool level, const std::string& output) {
  Series in = load_series(input);
  infoeq_table* traw = nullptr;
  check(infoeq_fluctuation(in.get(), bins, level ? 1 : 0, &traw), "fluctuation");
  TableH table(traw);
  check(infoeq_table_save(table.get(), output.c_str()), output);
  double mass = 0.0;
  for (std::size_t r = 0; r < infoeq_table_rows(table.get()); ++r)
    mass += infoeq_table_get(table.get(), r, 2);
  info_stream(output) << infoeq_table_rows(table.get()) << " bins, " << mass << " samples\n";
  return INFOEQ_EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infoeq: information-equilibrium economics toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(infoeq_version()));

  std::string input, output = "-", model, params_path, config;
  int degree = 2;
  double span = 0.3;

  auto* smooth = app.add_subcommand("smooth", "LOESS-smooth a date,value CSV");
  smooth->add_option("-i,--input", input, "Input CSV")->required();
  smooth->add_option("--degree", degree, "Local polynomial degree (1 or 2)")->capture_default_str();
  smooth->add_option("--span", span, "Neighbourhood fraction in (0, 1]")->capture_default_str();
  smooth->add_option("-o,--output", output, "Output CSV ('-' for stdout)")->capture_default_str();

  std::vector<std::string> eval_inputs;
  GridArgs eval_grid;
  SmoothArgs eval_smooth;
  auto* eval = app.add_subcommand("eval", "Evaluate a model on a grid");
  eval->add_option("-m,--model", model,
                   "price-level|inflation|interest|okun|cobb-douglas|adas|islm|ridge")
      ->required();
  eval->add_option("-p,--params", params_path, "Parameter file (key = value)");
  eval->add_option("-i,--input", eval_inputs, "Named input series NAME=PATH");
  eval_grid.add(eval, true);
  eval_smooth.add(eval, "LOESS-smooth inputs first");
  eval->add_option("-o,--output", output, "Output CSV ('-' for stdout)")->capture_default_str();

  std::vector<std::string> fit_inputs;
  GridArgs fit_grid;
  SmoothArgs fit_smooth;
  std::string x0_path;
  double tol = 1e-8;
  int max_iter = 10000;
  auto* fit = app.add_subcommand("fit", "Fit model parameters to data");
  fit->add_option("-m,--model", model, "price-level|interest|cobb-douglas|okun")->required();
  fit->add_option("--x0", x0_path, "Initial parameter file (key = value)")->required();
  fit->add_option("-i,--input", fit_inputs, "Named input series NAME=PATH");
  fit_grid.add(fit, true);
  fit_smooth.add(fit, "LOESS-smooth inputs first");
  fit->add_option("--tol", tol, "Convergence tolerance")->capture_default_str();
  fit->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
  fit->add_option("-o,--output", output, "Report path ('-' for stdout)")->capture_default_str();

  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  auto* ens = app.add_subcommand("ensemble", "Monte Carlo market ensemble");
  ens->add_option("-c,--config", config, "Config file (key = value)")->required();
  ens->add_option("--seed", seed, "Random seed (required unless the config has one)");
  ens->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();
  ens->add_option("-o,--output", output, "Output CSV ('-' for stdout)")->capture_default_str();

  int bins = 40;
  bool level = false;
  auto* fluct = app.add_subcommand("fluctuation", "Histogram of quarterly changes vs e^delta");
  fluct->add_option("-i,--input", input, "Input CSV")->required();
  fluct->add_option("--bins", bins, "Number of histogram bins")->capture_default_str();
  fluct->add_flag("--level", level, "Use level differences instead of 100 x log changes");
  fluct->add_option("-o,--output", output, "Output CSV ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? INFOEQ_EXIT_OK : INFOEQ_EXIT_USAGE;
  }

  try {
    if (*smooth) return cmd_smooth(input, degree, span, output);
    if (*eval) return cmd_eval(model, params_path, eval_inputs, eval_grid, eval_smooth, output);
    if (*fit)
      return cmd_fit(model, x0_path, fit_inputs, fit_grid, fit_smooth, tol, max_iter, output);
    if (*ens) return cmd_ensemble(config, seed, threads, output);
    if (*fluct) return cmd_fluctuation(input, bins, level, output);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "infoeq: " << e.what() << "\n";
    return INFOEQ_EXIT_INPUT;
  }
  return INFOEQ_EXIT_USAGE;
}
