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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

// testutil.hpp pulls in the test framework; only its helpers are used here.
#define DOCTEST_CONFIG_DISABLE

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "infoeq/ensemble.hpp"
#include "infoeq/grid.hpp"
#include "infoeq/ie_core.hpp"
#include "infoeq/macro_models.hpp"
#include "infoeq/model_fit.hpp"
#include "infoeq/timeseries.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace infoeq;
using core::Relation;
using testutil::rel_err;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  std::string name;
  double time_limit;  // seconds; 0 for none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Relation random_relation(testutil::Lcg& rng) {
  return Relation::make(rng.uniform(0.2, 5.0), std::exp(rng.uniform(-3, 3)),
                        std::exp(rng.uniform(-3, 3)));
}

TimeSeries snapshot(const std::string& name) { return load_csv(testutil::data_dir() / name); }

// ---------------------------------------------------------------------------

Outcome equivalence_suite() {
  Outcome o;
  testutil::Lcg rng(101);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    auto x = random_relation(rng);
    auto y = random_relation(rng);
    if (i % 2 == 0) y.d_ref = x.s_ref;
    o.require(core::invert(core::invert(x)) == x, "invert is not an involution");
    auto xy = core::compose(x, y);
    o.require(xy.k() == x.k() * y.k(), "composed index is not the exact product");
    for (double s : {0.1, 0.7, 1.0, 3.0, 20.0}) {
      const double e = rel_err(core::ge_source(xy, s), core::ge_source(x, core::ge_source(y, s)));
      worst = std::max(worst, e);
    }
  }
  o.require(worst <= 1e-12, "functional composition error " + fmt("%.3g", worst));
  o.detail = o.ok ? "100 relations, max composition error " + fmt("%.2g", worst) : o.detail;
  return o;
}

Outcome ode_oracle_suite() {
  Outcome o;
  testutil::Lcg rng(202);
  double worst = 0, min_ratio = INFINITY;
  for (int i = 0; i < 50; ++i) {
    auto r = random_relation(rng);
    const double s1 = r.s_ref * std::exp(rng.uniform(-1.5, 1.5));
    const double exact = core::ge_source(r, s1);
    worst = std::max(worst, rel_err(core::ode_oracle(r, r.s_ref, s1, r.d_ref, 10000), exact));
    const double e1 = std::abs(core::ode_oracle(r, r.s_ref, s1, r.d_ref, 200) - exact);
    const double e2 = std::abs(core::ode_oracle(r, r.s_ref, s1, r.d_ref, 400) - exact);
    // Halving is only measurable above the rounding floor.
    if (e2 > 1e-11 * std::abs(exact)) min_ratio = std::min(min_ratio, e1 / e2);
  }
  o.require(worst <= 1e-8, "ODE disagreement " + fmt("%.3g", worst));
  o.require(min_ratio >= 15.0, "step-halving reduction only " + fmt("%.3g", min_ratio));
  if (o.ok)
    o.detail = "50 relations, max rel err " + fmt("%.2g", worst) + ", min halving ratio " +
               fmt("%.2f", min_ratio);
  return o;
}

Outcome curve_geometry() {
  Outcome o;
  testutil::Lcg rng(303);
  double lo = INFINITY, hi = 0;
  for (int i = 0; i < 50; ++i) {
    auto r = random_relation(rng);
    const double d0 = std::exp(rng.uniform(-2, 2)), s0 = std::exp(rng.uniform(-2, 2));
    double pd = -INFINITY, pp = INFINITY, sd = -INFINITY, sp = -INFINITY;
    for (int j = 0; j <= 200; ++j) {
      const double f = std::exp(-2.0 + 4.0 * j / 200.0);
      auto dc = core::demand_curve(r, d0, r.s_ref * f);
      o.require(dc.delta > pd && dc.price < pp, "demand curve not strictly decreasing");
      pd = dc.delta;
      pp = dc.price;
      auto sc = core::supply_curve(r, s0, r.d_ref * f);
      o.require(sc.delta > sd && sc.price > sp, "supply curve not strictly increasing");
      sd = sc.delta;
      sp = sc.price;
    }
    const auto c = core::linearize(r, d0, s0);
    auto demand_err = [&](double ds) {
      auto p = core::demand_curve(r, d0, r.s_ref + ds);
      return std::abs((c.alpha - c.beta * p.price) - (r.d_ref + p.delta));
    };
    auto supply_err = [&](double dd) {
      auto p = core::supply_curve(r, s0, r.d_ref + dd);
      return std::abs((c.gamma + c.delta * p.price) - (r.s_ref + p.delta));
    };
    const std::function<double(double)> errs[2] = {demand_err, supply_err};
    const double refs[2] = {r.s_ref, r.d_ref};
    for (int side = 0; side < 2; ++side) {
      double h = 0.02 * refs[side];
      double prev = errs[side](h);
      for (int step = 0; step < 4; ++step) {
        h /= 2;
        const double e = errs[side](h);
        if (e > 1e-12 * (1 + std::abs(refs[side]))) {
          lo = std::min(lo, prev / e);
          hi = std::max(hi, prev / e);
        }
        prev = e;
      }
    }
  }
  o.require(lo >= 3.5 && hi <= 4.5, "linearisation halving ratios in [" + fmt("%.3g", lo) + ", " +
                                        fmt("%.3g", hi) + "]");
  if (o.ok) o.detail = "halving ratios in [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "]";
  return o;
}

Outcome price_level_limit() {
  Outcome o;
  const auto p = macro::PriceLevelParams::make(0.641, 5.93e-4, 603.8);
  const double c0 = p.scale();
  const double want = 2 * p.alpha / p.m0;
  double worst = 0;
  for (double m : logspace(1.0, 1e6, 400)) {
    const double n = c0 * std::pow(m / c0, 2.0);
    worst = std::max(worst, rel_err(macro::price_level(n, m, p) / m, want));
  }
  o.require(worst <= 1e-12, "P/m varies by " + fmt("%.3g", worst));

  const auto gdp = snapshot("gdp_us.csv"), cur = snapshot("mbcurrcir_us.csv");
  double worst_d = 0;
  for (double t : linspace(1950, 2014, 65)) {
    const double n = interp_linear(gdp, t), m = interp_linear(cur, t);
    const auto d = macro::k_index_partials(n, m, p);
    const double hn = 1e-5 * n, hm = 1e-5 * m;
    const double fn = (macro::k_index(n + hn, m, p) - macro::k_index(n - hn, m, p)) / (2 * hn);
    const double fm = (macro::k_index(n, m + hm, p) - macro::k_index(n, m - hm, p)) / (2 * hm);
    worst_d = std::max({worst_d, rel_err(d.dk_dn, fn), rel_err(d.dk_dm, fm)});
  }
  o.require(worst_d <= 1e-6, "k partials differ from finite differences by " + fmt("%.3g", worst_d));
  if (o.ok)
    o.detail = "P/m spread " + fmt("%.2g", worst) + ", partials vs FD " + fmt("%.2g", worst_d);
  return o;
}

Outcome ensemble_suite() {
  Outcome o;
  auto parsed = ensemble::load_mc_config((testutil::data_dir() / "ensemble_reference.conf").string());
  auto cfg = parsed.config;
  cfg.seed = 20150101;
  o.require(cfg.n0 == 100 && cfg.runs == 500 && cfg.a_mean == 1.5 && cfg.a_sd == 0.5,
            "bundled config differs from the reference setup");
  o.require(cfg.m_grid.front() == 1.0 && cfg.m_grid.back() == 1000.0, "grid must span [1, 1000]");
  const auto res = ensemble::monte_carlo(cfg, 0);
  std::size_t within = 0;
  double first = 0, last = 0;
  for (const auto& run : res.runs) {
    o.require(run.avg_n.front() == static_cast<double>(cfg.n0), "<N(1)> != N0");
    for (std::size_t j = 1; j < run.avg_a.size(); ++j)
      o.require(run.avg_a[j] <= run.avg_a[j - 1], "<a> increased along the grid");
    if (std::abs(run.avg_a.front() - 1.5) <= 0.15) ++within;
    first += run.avg_a.front();
    last += run.avg_a.back();
  }
  const double frac = static_cast<double>(within) / static_cast<double>(res.runs.size());
  first /= static_cast<double>(res.runs.size());
  last /= static_cast<double>(res.runs.size());
  o.require(frac >= 0.99, "only " + fmt("%.3f", frac) + " of runs start within 1.5 +- 0.15");
  o.require(last < first, "mean <a> did not fall from m=1 to m=1000");
  if (o.ok)
    o.detail = "500 runs, " + fmt("%.1f", 100 * frac) + "% start in band, mean <a> " +
               fmt("%.4f", first) + " -> " + fmt("%.4f", last);
  return o;
}

Outcome entropy_suite() {
  Outcome o;
  const auto p = ensemble::EntropyParams::make(1.3, 5.93e-4, 603.8);
  const double c0 = p.gamma * p.m0;
  double prev = -INFINITY;
  for (double x : logspace(1.0, 1e9, 500)) {
    const double s = ensemble::entropy(x * c0, p);
    o.require(s > prev, "entropy not strictly increasing");
    prev = s;
  }
  double worst_stirling = 0;
  for (double x : logspace(100.0, 1e9, 200))
    worst_stirling = std::max(worst_stirling, rel_err(ensemble::entropy_stirling(x * c0, p),
                                                      ensemble::entropy(x * c0, p)));
  o.require(worst_stirling <= 0.01, "Stirling form off by " + fmt("%.3g", worst_stirling));

  double lo = INFINITY, hi = 0;
  for (double x : {1e4, 1e5, 1e6}) {
    const double n = x * c0;
    auto err = [&](double dn) {
      const double exact = ensemble::entropy(n + dn, p) - ensemble::entropy(n, p);
      return std::abs(ensemble::entropy_delta(n, dn, p) - exact) / std::abs(exact);
    };
    double dn = 0.05 * n;
    double e_prev = err(dn);
    for (int i = 0; i < 4; ++i) {
      dn /= 2;
      const double e = err(dn);
      lo = std::min(lo, e_prev / e);
      hi = std::max(hi, e_prev / e);
      e_prev = e;
    }
  }
  o.require(lo >= 1.8 && hi <= 2.2,
            "first-order error ratios in [" + fmt("%.3g", lo) + ", " + fmt("%.3g", hi) + "]");
  if (o.ok)
    o.detail = "Stirling max rel err " + fmt("%.2g", worst_stirling) + ", halving ratios [" +
               fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "]";
  return o;
}

long double ridge_price_ld(long double sigma, long double n_over_c0, long double gamma) {
  const long double k = std::log(n_over_c0) / std::log(sigma / gamma);
  return k * std::pow(sigma, k - 1.0L);
}

Outcome ridge_suite() {
  Outcome o;
  double worst = 0;
  for (double kappa : {1.1, 1.5, 2.0, 3.0})
    for (double g : {1e-4, 1e-2, 1.0}) {
      const double s = macro::ridge_sigma(kappa, g);
      const double r = macro::ridge_source_ratio(kappa, g);
      const long double h = 1e-7L * s;
      const long double d = (ridge_price_ld(s + h, r, g) - ridge_price_ld(s - h, r, g)) / (2 * h);
      worst = std::max(worst, static_cast<double>(std::fabs(d)));
    }
  o.require(worst <= 1e-6, "|dP/dsigma| = " + fmt("%.3g", worst));
  if (o.ok) o.detail = "max |dP/dsigma| " + fmt("%.2g", worst) + " over 12 points";
  return o;
}

// Multiplicative log-normal noise of relative size `level`.
std::vector<double> noisy(std::vector<double> v, double level, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, level);
  if (level > 0)
    for (double& x : v) x *= std::exp(nd(gen));
  return v;
}

Outcome fitting_suite() {
  Outcome o;
  const auto gdp = snapshot("gdp_us.csv"), cur = snapshot("mbcurrcir_us.csv"),
             base = snapshot("ambsl_us.csv");
  const auto quarterly = make_grid({1960.0, 2014.0, 217, false});
  // Capital and labour vary independently here. With trending, nearly
  // collinear inputs the intercept A is poorly determined under noise.
  const auto cd_grid = make_grid({1950.0, 2014.0, 257, false});
  std::vector<double> kv, lv;
  for (double t : cd_grid) {
    kv.push_back(300.0 * std::exp(0.1 * (t - 1950) + 0.3 * std::sin(0.8 * t)));
    lv.push_back(2e4 * std::exp(0.02 * (t - 1950) + 0.5 * std::sin(0.37 * t)));
  }
  auto sample = [](const TimeSeries& ts, const std::vector<double>& g) {
    std::vector<double> v;
    for (double t : g) v.push_back(interp_linear(ts, t));
    return TimeSeries::from_columns(g, v);
  };
  const auto n = sample(gdp, quarterly), m = sample(cur, quarterly), mb = sample(base, quarterly);
  const auto k = TimeSeries::from_columns(cd_grid, kv), l = TimeSeries::from_columns(cd_grid, lv);

  const auto pl = macro::PriceLevelParams::make(0.641, 5.93e-4, 603.8);
  const auto ir = macro::InterestParams::make(3.49, 0.124);
  const auto cd = macro::CobbDouglasParams::make(0.0024, 0.44, 0.84);
  std::vector<double> p0, il0, is0, y0;
  for (std::size_t i = 0; i < quarterly.size(); ++i) {
    p0.push_back(macro::price_level(n[i].v, m[i].v, pl));
    il0.push_back(macro::interest_rate(n[i].v, m[i].v, ir));
    is0.push_back(macro::interest_rate(n[i].v, mb[i].v, ir));
  }
  for (std::size_t i = 0; i < cd_grid.size(); ++i) y0.push_back(macro::cobb_douglas(k[i].v, l[i].v, cd));

  double worst[2] = {0, 0};
  const double level[2] = {0.0, 0.001};
  const double tol[2] = {0.01, 0.02};
  int fits = 0;
  for (int noise = 0; noise < 2; ++noise) {
    const auto p = TimeSeries::from_columns(quarterly, noisy(p0, level[noise], 1));
    const auto il = TimeSeries::from_columns(quarterly, noisy(il0, level[noise], 2));
    const auto is = TimeSeries::from_columns(quarterly, noisy(is0, level[noise], 3));
    const auto y = TimeSeries::from_columns(cd_grid, noisy(y0, level[noise], 4));
    for (int signs = 0; signs < 8; ++signs) {
      auto f = [&](int bit) { return (signs >> bit) & 1 ? 1.2 : 0.8; };
      auto r1 = fit::fit_price_level(
          n, m, p, quarterly, macro::PriceLevelParams::make(0.641 * f(0), 5.93e-4 * f(1), 603.8 * f(2)));
      auto r3 = fit::fit_cobb_douglas(y, k, l, cd_grid,
                                      macro::CobbDouglasParams::make(0.0024 * f(0), 0.44 * f(1), 0.84 * f(2)));
      double e = std::max({rel_err(r1.param("alpha"), 0.641), rel_err(r1.param("gamma"), 5.93e-4),
                           rel_err(r1.param("M0"), 603.8), rel_err(r3.param("A"), 0.0024),
                           rel_err(r3.param("k1"), 0.44), rel_err(r3.param("k2"), 0.84)});
      fits += 2;
      if (signs < 4) {
        auto r2 = fit::fit_interest(n, m, mb, il, is, quarterly,
                                    macro::InterestParams::make(3.49 * f(0), 0.124 * f(1)));
        e = std::max({e, rel_err(r2.param("k_i"), 3.49), rel_err(r2.param("k_p"), 0.124)});
        ++fits;
      }
      worst[noise] = std::max(worst[noise], e);
    }
    o.require(worst[noise] <= tol[noise],
              (noise ? "noisy" : "zero-noise") + std::string(" refit off by ") +
                  fmt("%.3g", worst[noise]));
  }
  if (o.ok)
    o.detail = std::to_string(fits) + " fits, max rel err " + fmt("%.2g", worst[0]) +
               " (exact) / " + fmt("%.2g", worst[1]) + " (0.1% noise)";
  return o;
}

Outcome loess_suite() {
  Outcome o;
  std::vector<double> t;
  testutil::Lcg rng(404);
  double x = 1947.0;
  for (int i = 0; i < 120; ++i) t.push_back(x += rng.uniform(0.05, 0.5));
  double worst_poly = 0;
  for (int degree : {1, 2})
    for (int order = 0; order <= degree; ++order)
      for (double span : {0.1, 0.3, 0.75, 1.0}) {
        std::vector<double> v;
        for (double u : t) {
          const double z = u - 1980.0;
          v.push_back(order == 0 ? 3.5 : order == 1 ? 2.0 - 0.4 * z : 1.0 + 0.3 * z - 0.02 * z * z);
        }
        const auto ts = TimeSeries::from_columns(t, v);
        const auto sm = loess_smooth(ts, {degree, span});
        for (std::size_t i = 0; i < t.size(); ++i)
          worst_poly = std::max(worst_poly, std::abs(sm[i].v - v[i]));
      }
  o.require(worst_poly <= 1e-10, "polynomial reproduction error " + fmt("%.3g", worst_poly));

  double worst_oracle = 0;
  std::vector<TimeSeries> cases;
  std::vector<double> noise;
  for (double u : t) noise.push_back(std::sin(u) + rng.uniform(-0.5, 0.5));
  cases.push_back(TimeSeries::from_columns(t, noise));
  const auto gdp = snapshot("gdp_us.csv");
  cases.push_back(gdp);
  for (const auto& ts : cases)
    for (int degree : {1, 2})
      for (double span : {0.2, 0.5, 1.0}) {
        const auto got = loess_smooth(ts, {degree, span});
        const auto want = oracles::loess_oracle(ts, degree, span);
        for (std::size_t i = 0; i < ts.size(); ++i)
          worst_oracle = std::max(worst_oracle, std::abs(got[i].v - want[i]) /
                                                    std::max(1.0, std::abs(want[i])));
      }
  o.require(worst_oracle <= 1e-10, "oracle disagreement " + fmt("%.3g", worst_oracle));
  if (o.ok)
    o.detail = "polynomial error " + fmt("%.2g", worst_poly) + ", oracle error " +
               fmt("%.2g", worst_oracle);
  return o;
}

Outcome fluctuation_suite() {
  Outcome o;
  const auto gdp = snapshot("gdp_us.csv");
  const auto changes = ensemble::quarterly_changes(gdp);
  const auto a = ensemble::fluctuation_comparison(changes, 40);
  const auto b = ensemble::fluctuation_comparison(ensemble::quarterly_changes(snapshot("gdp_us.csv")), 40);
  o.require(a.total_count() == changes.size() && changes.size() == gdp.size() - 1,
            "histogram mass differs from sample count");
  const std::size_t nb = a.bins.size();
  for (std::size_t j = 0; j < nb; ++j) {
    o.require(std::memcmp(&a.bins[j].theory, &b.bins[j].theory, sizeof(double)) == 0,
              "theory curve differs between reruns");
    if (2 * j + 1 < nb) {
      const auto& pos = a.bins[nb - 1 - j];
      const double want = static_cast<double>(pos.count) * std::exp(-0.5 * (pos.left + pos.right));
      o.require(a.bins[j].theory == want, "theory bin is not count x e^-delta");
    }
  }
  if (o.ok) o.detail = std::to_string(changes.size()) + " changes in " + std::to_string(nb) + " bins";
  return o;
}

Outcome snapshot_fit_report() {
  Outcome o;
  const auto gdp = snapshot("gdp_us.csv"), cur = snapshot("mbcurrcir_us.csv"),
             base = snapshot("ambsl_us.csv"), pce = snapshot("pcepilfe_us.csv"),
             gs10 = snapshot("gs10_us.csv"), tb3 = snapshot("tb3ms_us.csv");
  const auto grid = make_grid({1960.0, 2014.0, 217, false});
  auto r1 = fit::fit_price_level(gdp, cur, pce, grid, macro::PriceLevelParams::make(0.641, 5.93e-4, 603.8));
  auto r2 = fit::fit_interest(gdp, cur, base, gs10, tb3, grid, macro::InterestParams::make(3.49, 0.124));
  o.require(r1.converged && r2.converged, "snapshot fits did not converge");
  std::ostringstream d;
  d.precision(4);
  d << "ungated: price level alpha=" << r1.param("alpha") << " gamma=" << r1.param("gamma")
    << " M0=" << r1.param("M0") << " rmse(log)=" << r1.stats().rmse
    << "; interest k_i=" << r2.param("k_i") << " k_p=" << r2.param("k_p")
    << " rmse(log)=" << r2.stats().rmse;
  if (o.ok) o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"equivalence relations", 1.0, equivalence_suite},
      {"closed form vs ODE oracle", 10.0, ode_oracle_suite},
      {"curve geometry and linearisation", 0, curve_geometry},
      {"price-level quantity-theory limit", 0, price_level_limit},
      {"ensemble", 30.0, ensemble_suite},
      {"entropy", 0, entropy_suite},
      {"ridge line", 0, ridge_suite},
      {"fitting round trips", 60.0, fitting_suite},
      {"LOESS", 0, loess_suite},
      {"fluctuation histogram", 0, fluctuation_suite},
      {"bundled snapshot fit report", 0, snapshot_fit_report},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.ok = false;
      o.detail += " (over the " + fmt("%.0f", c.time_limit) + " s budget)";
    }
    std::printf("%s  %-36s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
