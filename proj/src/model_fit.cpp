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

#include "infoeq/model_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <json.hpp>

#include "infoeq/errors.hpp"

namespace infoeq::fit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> on_grid(const TimeSeries& ts, const std::vector<double>& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = interp_linear(ts, grid[i]);
  return v;
}

void require_grid(const std::vector<double>& grid) {
  if (grid.empty()) fail(ErrorKind::kInvalidArgument, "fit grid is empty");
}

void require_positive(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!(x > 0.0))
      fail(ErrorKind::kDomain, std::string(what) + " must be positive on the fit grid");
}

double log_sq_sum(const std::vector<double>& model_log, const std::vector<double>& data_log) {
  double s = 0.0;
  for (std::size_t i = 0; i < model_log.size(); ++i) {
    const double r = model_log[i] - data_log[i];
    s += r * r;
  }
  return s;
}

std::vector<double> logs(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return std::log(x); });
  return out;
}

// Evaluates f, mapping model-domain failures and non-finite values to +inf.
template <class F>
double guarded(F&& f) {
  try {
    const double v = f();
    return std::isfinite(v) ? v : kInf;
  } catch (const ModelDomainError&) {
    return kInf;
  }
}

}  // namespace

FitResult fit_price_level(const TimeSeries& n, const TimeSeries& m, const TimeSeries& p,
                          const std::vector<double>& grid,
                          const macro::PriceLevelParams& x0, const FitOptions& opts) {
  require_grid(grid);
  const auto nv = on_grid(n, grid);
  const auto mv = on_grid(m, grid);
  const auto pv = on_grid(p, grid);
  require_positive(nv, "N");
  require_positive(mv, "M");
  require_positive(pv, "P");
  const auto log_p = logs(pv);

  double floor_nm = kInf;
  for (std::size_t i = 0; i < grid.size(); ++i)
    floor_nm = std::min({floor_nm, nv[i], mv[i]});

  auto model_logs = [&](std::span<const double> z, std::vector<double>& out) {
    const auto params = macro::PriceLevelParams{std::exp(z[0]), std::exp(z[1] - z[2]),
                                                std::exp(z[2])};
    out.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      out[i] = std::log(macro::price_level(nv[i], mv[i], params));
  };

  FitProblem fp;
  fp.param_names = {"log_alpha", "log_C0", "log_M0"};
  fp.x0 = {std::log(x0.alpha), std::log(x0.scale()), std::log(x0.m0)};
  fp.lower = {-kInf, -kInf, -kInf};
  // Keeps N/C0 and M/C0 above 1 at every grid point.
  fp.upper = {kInf, std::log(floor_nm) - 1e-9, kInf};
  fp.scale = {1.0, 1.0, 1.0};
  fp.tol = opts.tol;
  fp.max_iter = opts.max_iter;
  if (!(x0.alpha > 0.0) || !(x0.gamma > 0.0) || !(x0.m0 > 0.0))
    fail(ErrorKind::kInvalidArgument, "price-level x0 must be positive");
  if (!(fp.x0[1] <= fp.upper[1]))
    fail(ErrorKind::kInvalidArgument,
         "price-level x0 has gamma*M0 >= min(N, M) on the fit grid");
  fp.objective = [&, buf = std::vector<double>()](std::span<const double> z) mutable {
    return guarded([&] {
      model_logs(z, buf);
      return log_sq_sum(buf, log_p);
    });
  };

  FitResult r = minimize(fp);
  std::vector<double> fitted;
  model_logs(r.x_star, fitted);
  r.residual_series.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) r.residual_series[i] = fitted[i] - log_p[i];
  const double alpha = std::exp(r.x_star[0]);
  const double m0 = std::exp(r.x_star[2]);
  const double gamma = std::exp(r.x_star[1] - r.x_star[2]);
  r.param_names = {"alpha", "gamma", "M0"};
  r.x_star = {alpha, gamma, m0};
  return r;
}

double interest_market_objective(const TimeSeries& n, const TimeSeries& m,
                                 const TimeSeries& rate, const std::vector<double>& grid,
                                 const macro::InterestParams& ip) {
  require_grid(grid);
  const auto nv = on_grid(n, grid);
  const auto mv = on_grid(m, grid);
  const auto iv = on_grid(rate, grid);
  require_positive(iv, "interest rate");
  double s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = std::log(macro::interest_rate(nv[i], mv[i], ip)) - std::log(iv[i]);
    s += r * r;
  }
  return s;
}

double interest_objective(const TimeSeries& n, const TimeSeries& m, const TimeSeries& mb,
                          const TimeSeries& i_long, const TimeSeries& i_short,
                          const std::vector<double>& grid, const macro::InterestParams& ip) {
  return interest_market_objective(n, m, i_long, grid, ip) +
         interest_market_objective(n, mb, i_short, grid, ip);
}

FitResult fit_interest(const TimeSeries& n, const TimeSeries& m, const TimeSeries& mb,
                       const TimeSeries& i_long, const TimeSeries& i_short,
                       const std::vector<double>& grid, const macro::InterestParams& x0,
                       const FitOptions& opts) {
  require_grid(grid);
  const auto nv = on_grid(n, grid);
  const auto mv = on_grid(m, grid);
  const auto mbv = on_grid(mb, grid);
  const auto lv = on_grid(i_long, grid);
  const auto sv = on_grid(i_short, grid);
  for (const auto* v : {&nv, &mv, &mbv}) require_positive(*v, "N, M and MB");
  require_positive(lv, "long rate");
  require_positive(sv, "short rate");
  const std::size_t g = grid.size();
  // Residuals are linear in (1/k_i, log k_p / k_i) once the log ratios are known.
  std::vector<double> x_ratio(2 * g), y_rate(2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    x_ratio[i] = std::log(nv[i] / mv[i]);
    y_rate[i] = std::log(lv[i]);
    x_ratio[g + i] = std::log(nv[i] / mbv[i]);
    y_rate[g + i] = std::log(sv[i]);
  }
  auto resid = [&](std::span<const double> q, std::size_t i) {
    return (x_ratio[i] - std::log(q[1])) / q[0] - y_rate[i];
  };

  FitProblem fp;
  fp.param_names = {"k_i", "k_p"};
  fp.x0 = {x0.k_i, x0.k_p};
  fp.lower = {1e-12, 1e-300};
  fp.upper = {kInf, kInf};
  fp.tol = opts.tol;
  fp.max_iter = opts.max_iter;
  fp.objective = [&](std::span<const double> q) {
    return guarded([&] {
      double s = 0.0;
      for (std::size_t i = 0; i < 2 * g; ++i) {
        const double r = resid(q, i);
        s += r * r;
      }
      return s;
    });
  };
  FitResult r = minimize(fp);
  r.residual_series.resize(2 * g);
  for (std::size_t i = 0; i < 2 * g; ++i) r.residual_series[i] = resid(r.x_star, i);
  return r;
}

macro::CobbDouglasParams cobb_douglas_loglinear(const TimeSeries& n, const TimeSeries& k,
                                                const TimeSeries& l,
                                                const std::vector<double>& grid) {
  require_grid(grid);
  const auto nv = on_grid(n, grid);
  const auto kv = on_grid(k, grid);
  const auto lv = on_grid(l, grid);
  require_positive(nv, "N");
  require_positive(kv, "K");
  require_positive(lv, "L");
  const auto rows = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::log(kv[static_cast<std::size_t>(i)]);
    design(i, 2) = std::log(lv[static_cast<std::size_t>(i)]);
    rhs(i) = std::log(nv[static_cast<std::size_t>(i)]);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3)
    fail(ErrorKind::kRankDeficient,
         "Cobb-Douglas design is rank deficient: K and L must vary independently");
  const Eigen::VectorXd beta = qr.solve(rhs);
  return {std::exp(beta(0)), beta(1), beta(2)};
}

FitResult fit_cobb_douglas(const TimeSeries& n, const TimeSeries& k, const TimeSeries& l,
                           const std::vector<double>& grid,
                           const macro::CobbDouglasParams& x0, const FitOptions& opts) {
  const auto direct = cobb_douglas_loglinear(n, k, l, grid);
  const auto nv = on_grid(n, grid);
  const auto kv = on_grid(k, grid);
  const auto lv = on_grid(l, grid);
  const auto log_n = logs(nv);
  const auto log_k = logs(kv);
  const auto log_l = logs(lv);
  auto resid = [&](std::span<const double> q, std::size_t i) {
    return std::log(q[0]) + q[1] * log_k[i] + q[2] * log_l[i] - log_n[i];
  };

  FitProblem fp;
  fp.param_names = {"A", "k1", "k2"};
  fp.x0 = {x0.a_tfp, x0.k1, x0.k2};
  fp.lower = {1e-300, -kInf, -kInf};
  fp.upper = {kInf, kInf, kInf};
  fp.tol = opts.tol;
  fp.max_iter = opts.max_iter;
  fp.objective = [&](std::span<const double> q) {
    return guarded([&] {
      double s = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = resid(q, i);
        s += r * r;
      }
      return s;
    });
  };
  FitResult r = minimize(fp);
  r.residual_series.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) r.residual_series[i] = resid(r.x_star, i);
  r.cross_check = std::vector<double>{direct.a_tfp, direct.k1, direct.k2};
  return r;
}

FitResult fit_okun(const TimeSeries& n, const TimeSeries& p, const TimeSeries& h,
                   const std::vector<double>& grid, double k_h0, const FitOptions& opts) {
  require_grid(grid);
  const auto nv = on_grid(n, grid);
  const auto pv = on_grid(p, grid);
  const auto hv = on_grid(h, grid);
  require_positive(pv, "P");
  std::vector<double> real(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) real[i] = nv[i] / pv[i];
  auto resid = [&](double k_h, std::size_t i) { return real[i] / k_h - hv[i]; };

  FitProblem fp;
  fp.param_names = {"k_H"};
  fp.x0 = {k_h0};
  fp.lower = {1e-300};
  fp.upper = {kInf};
  fp.tol = opts.tol;
  fp.max_iter = opts.max_iter;
  fp.objective = [&](std::span<const double> q) {
    return guarded([&] {
      double s = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = resid(q[0], i);
        s += r * r;
      }
      return s;
    });
  };
  FitResult r = minimize(fp);
  r.residual_series.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) r.residual_series[i] = resid(r.x_star[0], i);
  return r;
}

std::string fit_report_json(const std::string& model, const FitResult& result) {
  nlohmann::ordered_json doc;
  doc["model"] = model;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < result.x_star.size(); ++i)
    params[result.param_names.at(i)] = result.x_star[i];
  doc["parameters"] = params;
  doc["f_initial"] = result.f_initial;
  doc["f_star"] = result.f_star;
  doc["iterations"] = result.iterations;
  doc["evaluations"] = result.evaluations;
  doc["converged"] = result.converged;
  const auto st = result.stats();
  doc["residuals"] = {{"count", result.residual_series.size()},
                      {"rmse", st.rmse},
                      {"max_abs", st.max_abs},
                      {"sd", st.sd}};
  if (result.cross_check) {
    nlohmann::ordered_json cc = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < result.cross_check->size(); ++i)
      cc[result.param_names.at(i)] = (*result.cross_check)[i];
    doc["linear_cross_check"] = cc;
  }
  return doc.dump(2) + "\n";
}

}  // namespace infoeq::fit
