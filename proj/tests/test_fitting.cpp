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

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "infoeq/errors.hpp"
#include "infoeq/fitting.hpp"
#include "infoeq/grid.hpp"
#include "infoeq/model_eval.hpp"
#include "infoeq/model_fit.hpp"
#include "infoeq/params_io.hpp"
#include "infoeq/table.hpp"
#include "testutil.hpp"

using namespace infoeq;
using namespace infoeq::fit;
using testutil::kind_of;
using testutil::rel_err;
using testutil::series;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

FitProblem unbounded(std::vector<double> x0, Objective f) {
  FitProblem fp;
  fp.lower.assign(x0.size(), -kInf);
  fp.upper.assign(x0.size(), kInf);
  fp.x0 = std::move(x0);
  fp.objective = std::move(f);
  return fp;
}

struct Synthetic {
  std::vector<double> t;
  TimeSeries make(auto&& f) const {
    std::vector<double> v;
    for (double x : t) v.push_back(f(x));
    return series(t, v);
  }
};

Synthetic quarters(double t0, double t1) {
  Synthetic s;
  for (double x = t0; x <= t1 + 1e-9; x += 0.25) s.t.push_back(x);
  return s;
}

}  // namespace

TEST_CASE("sum of squares") {
  std::vector<double> m{1, 2, 3}, d{1, 2, 3}, d2{2, 2, 1};
  CHECK(sum_sq(m, d, Transform::kLinear) == 0.0);
  CHECK(sum_sq(m, d2, Transform::kLinear) == 5.0);
  CHECK(rel_err(sum_sq(m, d2, Transform::kLog),
                std::pow(std::log(0.5), 2) + std::pow(std::log(3.0), 2)) <= 1e-15);
  CHECK(kind_of([&] { sum_sq(m, std::vector<double>{1, -2, 3}, Transform::kLog); }) ==
        ErrorKind::kDomain);
  CHECK(kind_of([&] { sum_sq(m, std::vector<double>{1, 2}, Transform::kLinear); }) ==
        ErrorKind::kInvalidArgument);

  auto st = residual_stats(std::vector<double>{1, -1, 1, -1});
  CHECK(st.rmse == 1.0);
  CHECK(st.max_abs == 1.0);
  CHECK(rel_err(st.sd, std::sqrt(4.0 / 3.0)) <= 1e-15);
}

TEST_CASE("sum_sq_residuals steers away from invalid model values") {
  std::vector<Sample> data{{0, 1}, {1, 2}};
  auto f = sum_sq_residuals([](std::span<const double> p, double t) { return p[0] + t; },
                            data, Transform::kLog);
  CHECK(f(std::vector<double>{1.0}) == 0.0);
  CHECK(f(std::vector<double>{-5.0}) == kInf);
}

TEST_CASE("minimize a shifted quadratic") {
  auto fp = unbounded({0.0, 0.0}, [](std::span<const double> x) {
    return (x[0] - 3) * (x[0] - 3) + 10 * (x[1] + 2) * (x[1] + 2) + 1;
  });
  auto r = minimize(fp);
  CHECK(r.converged);
  CHECK(std::abs(r.x_star[0] - 3) <= 1e-6);
  CHECK(std::abs(r.x_star[1] + 2) <= 1e-6);
  CHECK(r.f_star <= r.f_initial);
  CHECK(r.f_initial == 50.0);
}

TEST_CASE("minimize the Rosenbrock function") {
  auto fp = unbounded({-1.2, 1.0}, [](std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  });
  fp.tol = 1e-12;
  auto r = minimize(fp);
  CHECK(r.converged);
  CHECK(std::abs(r.x_star[0] - 1) <= 1e-6);
  CHECK(std::abs(r.x_star[1] - 1) <= 1e-6);

  auto again = minimize(fp);
  CHECK(again.x_star == r.x_star);
  CHECK(again.evaluations == r.evaluations);
}

TEST_CASE("bounds are respected") {
  FitProblem fp = unbounded({0.5}, [](std::span<const double> x) { return (x[0] + 1) * (x[0] + 1); });
  fp.lower = {0.0};
  fp.upper = {2.0};
  auto r = minimize(fp);
  CHECK(r.x_star[0] >= 0.0);
  CHECK(r.x_star[0] <= 1e-6);

  fp.x0 = {3.0};
  CHECK(kind_of([&] { minimize(fp); }) == ErrorKind::kInvalidArgument);
  fp.x0 = {0.5};
  fp.tol = 0;
  CHECK(kind_of([&] { minimize(fp); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("random convex quadratics in five dimensions") {
  testutil::Lcg rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    // f = sum_j w_j (q_j . (x - c))^2 with random rows q_j.
    double q[5][5], c[5], w[5];
    for (int i = 0; i < 5; ++i) {
      c[i] = rng.uniform(-3, 3);
      w[i] = rng.uniform(0.5, 5);
      for (int j = 0; j < 5; ++j) q[i][j] = rng.uniform(-1, 1) + (i == j ? 2.0 : 0.0);
    }
    auto fp = unbounded(std::vector<double>(5, 0.1), [&](std::span<const double> x) {
      double f = 0;
      for (int i = 0; i < 5; ++i) {
        double d = 0;
        for (int j = 0; j < 5; ++j) d += q[i][j] * (x[j] - c[j]);
        f += w[i] * d * d;
      }
      return f;
    });
    auto r = minimize(fp);
    CHECK(r.converged);
    CHECK(r.iterations <= 200);
    CHECK(r.f_star <= r.f_initial);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(r.x_star[i] - c[i]) <= 1e-5);
  }
}

TEST_CASE("price-level fit recovers its generating parameters") {
  const auto truth = macro::PriceLevelParams::make(0.641, 5.93e-4, 603.8);
  auto s = quarters(1960, 2010);
  auto n = s.make([](double t) { return 500 * std::exp(0.065 * (t - 1960)); });
  auto m = s.make([](double t) { return 40 * std::exp(0.03 * (t - 1960) + 0.1 * std::sin(t)); });
  std::vector<double> p;
  for (std::size_t i = 0; i < s.t.size(); ++i)
    p.push_back(macro::price_level(n[i].v, m[i].v, truth));
  auto r = fit_price_level(n, m, series(s.t, p), s.t,
                           macro::PriceLevelParams::make(0.6, 7e-4, 550), {1e-12, 10000});
  CHECK(r.converged);
  CHECK(r.f_star < 1e-16);
  CHECK(rel_err(r.param("alpha"), 0.641) <= 1e-5);
  CHECK(rel_err(r.param("gamma"), 5.93e-4) <= 1e-5);
  CHECK(rel_err(r.param("M0"), 603.8) <= 1e-5);
  CHECK(r.residual_series.size() == s.t.size());

  // A start outside the model domain is rejected up front.
  CHECK(kind_of([&] {
          fit_price_level(n, m, series(s.t, p), s.t, macro::PriceLevelParams::make(1, 1, 100));
        }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("interest-rate fit") {
  const auto truth = macro::InterestParams::make(3.49, 0.124);
  auto s = quarters(1960, 2010);
  auto n = s.make([](double t) { return 500 * std::exp(0.065 * (t - 1960)); });
  auto m = s.make([](double t) { return 300 * std::exp(0.055 * (t - 1960) + 0.2 * std::sin(t)); });
  auto mb = s.make([](double t) { return 40 * std::exp(0.06 * (t - 1960) + 0.3 * std::cos(t)); });
  auto rate = [&](const TimeSeries& money) {
    std::vector<double> v;
    for (std::size_t i = 0; i < s.t.size(); ++i)
      v.push_back(macro::interest_rate(n[i].v, money[i].v, truth));
    return series(s.t, v);
  };
  auto il = rate(m), is = rate(mb);

  const auto other = macro::InterestParams::make(2.0, 0.3);
  CHECK(rel_err(interest_objective(n, m, mb, il, is, s.t, other),
                interest_market_objective(n, m, il, s.t, other) +
                    interest_market_objective(n, mb, is, s.t, other)) <= 1e-14);
  CHECK(interest_objective(n, m, mb, il, is, s.t, truth) < 1e-24);

  auto r = fit_interest(n, m, mb, il, is, s.t, macro::InterestParams::make(3.0, 0.2),
                        {1e-12, 10000});
  CHECK(r.converged);
  CHECK(r.f_star < 1e-12);
  CHECK(rel_err(r.param("k_i"), 3.49) <= 1e-6);
  CHECK(rel_err(r.param("k_p"), 0.124) <= 1e-6);
}

TEST_CASE("Cobb-Douglas fit agrees with log-linear least squares") {
  auto s = quarters(1950, 2014);
  testutil::Lcg rng(3);
  auto k = s.make([](double t) { return 100 * std::exp(0.035 * (t - 1950) + 0.05 * std::sin(3 * t)); });
  auto l = s.make([](double t) { return 50 * std::exp(0.015 * (t - 1950) + 0.04 * std::cos(2 * t)); });
  const auto truth = macro::CobbDouglasParams::make(0.8, 0.35, 0.7);
  std::vector<double> exact, noisy;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    exact.push_back(macro::cobb_douglas(k[i].v, l[i].v, truth));
    noisy.push_back(exact.back() * std::exp(rng.uniform(-0.02, 0.02)));
  }
  const auto x0 = macro::CobbDouglasParams::make(1.0, 0.5, 0.5);

  auto ls = cobb_douglas_loglinear(series(s.t, exact), k, l, s.t);
  CHECK(rel_err(ls.a_tfp, 0.8) <= 1e-8);
  CHECK(rel_err(ls.k1, 0.35) <= 1e-8);
  CHECK(rel_err(ls.k2, 0.7) <= 1e-8);

  auto r = fit_cobb_douglas(series(s.t, exact), k, l, s.t, x0, {1e-12, 10000});
  CHECK(rel_err(r.param("k1"), 0.35) <= 1e-8);
  CHECK(rel_err(r.param("k2"), 0.7) <= 1e-8);
  CHECK(rel_err(r.param("A"), 0.8) <= 1e-8);

  auto rn = fit_cobb_douglas(series(s.t, noisy), k, l, s.t, x0);
  REQUIRE(rn.cross_check.has_value());
  for (std::size_t i = 0; i < 3; ++i) CHECK(rel_err(rn.x_star[i], (*rn.cross_check)[i]) <= 1e-6);

  auto l_dep = k.with_values([&] {
    auto v = k.values();
    for (double& x : v) x *= 2.0;
    return v;
  }());
  CHECK(kind_of([&] { cobb_douglas_loglinear(series(s.t, exact), k, l_dep, s.t); }) ==
        ErrorKind::kRankDeficient);
}

TEST_CASE("Okun fit") {
  auto s = quarters(1960, 2000);
  auto n = s.make([](double t) { return 500 * std::exp(0.06 * (t - 1960)); });
  auto p = s.make([](double t) { return 0.2 * std::exp(0.035 * (t - 1960)); });
  std::vector<double> h;
  for (std::size_t i = 0; i < s.t.size(); ++i) h.push_back(n[i].v / (0.43 * p[i].v));
  auto r = fit_okun(n, p, series(s.t, h), s.t, 1.0, {1e-12, 10000});
  CHECK(r.converged);
  CHECK(rel_err(r.param("k_H"), 0.43) <= 1e-8);
}

TEST_CASE("fit report JSON") {
  auto s = quarters(1960, 1970);
  auto n = s.make([](double t) { return 500 * std::exp(0.06 * (t - 1960)); });
  auto p = s.make([](double) { return 1.0; });
  auto h = s.make([](double t) { return 1200 * std::exp(0.06 * (t - 1960)); });
  auto r = fit_okun(n, p, h, s.t, 1.0);
  auto doc = nlohmann::json::parse(fit_report_json("okun", r));
  CHECK(doc["model"] == "okun");
  CHECK(doc["parameters"]["k_H"].get<double>() == r.param("k_H"));
  CHECK(doc["converged"].get<bool>() == r.converged);
  CHECK(doc["residuals"]["count"].get<std::size_t>() == s.t.size());
  CHECK(doc["f_star"].get<double>() == r.f_star);
  CHECK_FALSE(doc.contains("linear_cross_check"));
  CHECK(kind_of([&] { r.param("nope"); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("parameter files") {
  std::istringstream in("# header\nalpha = 0.641\ngamma=5.93e-4 # trailing\n\nM0 = 603.8\n");
  auto ps = parse_params(in);
  CHECK(ps.get("alpha") == 0.641);
  CHECK(ps.get("gamma") == 5.93e-4);
  CHECK(ps.get_or("missing", 7.0) == 7.0);
  CHECK(kind_of([&] { ps.get("missing"); }) == ErrorKind::kInvalidArgument);

  std::ostringstream out;
  write_params(out, ps);
  std::istringstream back(out.str());
  CHECK(parse_params(back).values() == ps.values());

  std::istringstream bad("alpha 0.6\n");
  CHECK(kind_of([&] { parse_params(bad); }) == ErrorKind::kParse);
  std::istringstream bad_num("alpha = x\n");
  CHECK(kind_of([&] { parse_params(bad_num); }) == ErrorKind::kParse);
  CHECK(kind_of([] { load_params("/nonexistent.params"); }) == ErrorKind::kIo);
  CHECK(load_params(testutil::data_dir() / "params" / "price_level_us.params").get("M0") == 603.8);
}

TEST_CASE("double formatting round-trips") {
  testutil::Lcg rng(17);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.uniform(-300, 300)));
    CHECK(parse_double(format_double(x)) == x);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(3.0) == "3");
  CHECK(kind_of([] { parse_double("1.5x"); }) == ErrorKind::kParse);

  Table t{{"a", "b"}, {{1.5, 2.0}, {0.1, 1e-300}}};
  std::ostringstream out;
  write_table(out, t);
  std::istringstream in(out.str());
  auto back = read_table(in);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  CHECK(kind_of([&] { t.add_row({1.0}); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("grids") {
  auto g = make_grid(parse_grid_spec("1:2:5"));
  CHECK(g == std::vector<double>{1, 1.25, 1.5, 1.75, 2});
  auto lg = make_grid(parse_grid_spec("1:1000:4", true));
  CHECK(lg.front() == 1.0);
  CHECK(lg.back() == 1000.0);
  CHECK(rel_err(lg[1], 10.0) <= 1e-14);
  CHECK(make_grid(parse_grid_spec("3:9:1")) == std::vector<double>{3});
  CHECK(kind_of([] { parse_grid_spec("1:2"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { parse_grid_spec("1:2:0"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { make_grid(parse_grid_spec("-1:2:3", true)); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("model dispatch") {
  CHECK(kind_of([] { eval_inputs("nope"); }) == ErrorKind::kUnknownModel);
  CHECK(kind_of([] { fit_inputs("ridge"); }) == ErrorKind::kUnknownModel);
  CHECK(eval_inputs("price-level") == std::vector<std::string>{"N", "M"});
  CHECK(fit_inputs("interest") == std::vector<std::string>{"N", "M", "MB", "i_long", "i_short"});
  for (const auto& name : eval_model_names()) CHECK_NOTHROW(eval_inputs(name));
  for (const auto& name : fit_model_names()) CHECK_NOTHROW(fit_inputs(name));

  auto s = quarters(1990, 1992);
  EvalRequest req;
  req.model = "price-level";
  req.inputs["N"] = s.make([](double t) { return 6000 + 100 * (t - 1990); });
  req.inputs["M"] = s.make([](double t) { return 300 + 5 * (t - 1990); });
  req.params = ParamSet({{"alpha", 0.641}, {"gamma", 5.93e-4}, {"M0", 603.8}});
  req.grid = s.t;
  auto table = evaluate_model(req);
  REQUIRE(table.columns == std::vector<std::string>{"t", "k", "P"});
  REQUIRE(table.rows.size() == s.t.size());
  const auto pp = macro::PriceLevelParams::make(0.641, 5.93e-4, 603.8);
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    const double n = req.inputs["N"][i].v, m = req.inputs["M"][i].v;
    CHECK(table.rows[i][2] == macro::price_level(n, m, pp));
    CHECK(table.rows[i][1] == macro::k_index(n, m, pp));
  }

  auto missing = req;
  missing.inputs.erase("M");
  CHECK(kind_of([&] { evaluate_model(missing); }) == ErrorKind::kInvalidArgument);
  auto no_param = req;
  no_param.params = ParamSet({{"alpha", 1.0}});
  CHECK(kind_of([&] { evaluate_model(no_param); }) == ErrorKind::kInvalidArgument);
  auto outside = req;
  outside.grid = {1980.0};
  CHECK(kind_of([&] { evaluate_model(outside); }) == ErrorKind::kOutOfRange);
  auto unknown = req;
  unknown.model = "bogus";
  CHECK(kind_of([&] { evaluate_model(unknown); }) == ErrorKind::kUnknownModel);

  EvalRequest ridge;
  ridge.model = "ridge";
  ridge.params = ParamSet({{"gamma", 1.0}});
  ridge.grid = {0.5, 1.0, 2.0};
  auto rt = evaluate_model(ridge);
  for (auto& row : rt.rows) CHECK(rel_err(row[1], std::exp(-1.0)) <= 1e-15);
}
