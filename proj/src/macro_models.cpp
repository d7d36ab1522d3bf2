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

#include "infoeq/macro_models.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <limits>

#include "infoeq/errors.hpp"
#include "infoeq/table.hpp"

namespace infoeq::macro {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    fail(ErrorKind::kDomain,
         std::string(what) + " must be positive and finite, got " + format_double(x));
}

// Evaluates fn on every grid point, tagging model-domain failures with the
// offending abscissa.
template <class Fn>
TimeSeries on_grid(const std::vector<double>& grid, const std::string& name, Fn&& fn) {
  std::vector<double> v;
  v.reserve(grid.size());
  for (double t : grid) {
    try {
      v.push_back(fn(t));
    } catch (const ModelDomainError& e) {
      throw ModelDomainError(std::string(e.what()) + " at t=" + format_double(t), t,
                             true);
    }
  }
  return TimeSeries::from_columns(grid, v, name);
}

// Root of a decreasing function by bracket expansion then bisection.
double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi,
                         double lo_limit, double tol) {
  for (int i = 0; i < 200 && !(f(lo) > 0.0); ++i) {
    const double step = hi - lo;
    lo = std::isfinite(lo_limit) ? lo - 0.5 * (lo - lo_limit) : lo - step;
  }
  for (int i = 0; i < 200 && !(f(hi) < 0.0); ++i) hi += 2.0 * (hi - lo);
  if (!(f(lo) > 0.0) || !(f(hi) < 0.0))
    fail(ErrorKind::kDomain, "curves do not cross inside the search bracket");
  for (int i = 0; i < 400 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PriceLevelParams PriceLevelParams::make(double alpha, double gamma, double m0) {
  require_positive(alpha, "alpha");
  require_positive(gamma, "gamma");
  require_positive(m0, "M0");
  return {alpha, gamma, m0};
}

double k_index(double n, double m, const PriceLevelParams& p) {
  const double c0 = p.scale();
  const double ln = std::log(n / c0);
  const double lm = std::log(m / c0);
  if (!(n > 0.0) || !(m > 0.0) || !(ln > 0.0) || !(lm > 0.0))
    throw ModelDomainError("price-level model invalid: N/(gamma M0)=" +
                           format_double(n / c0) + ", M/(gamma M0)=" +
                           format_double(m / c0) + " (both must exceed 1)");
  return ln / lm;
}

KIndexPartials k_index_partials(double n, double m, const PriceLevelParams& p) {
  const double k = k_index(n, m, p);
  const double lm = std::log(m / p.scale());
  return {1.0 / (n * lm), -k / (m * lm)};
}

double price_level(double n, double m, const PriceLevelParams& p) {
  const double k = k_index(n, m, p);
  return p.alpha * k * std::exp((k - 1.0) * std::log(m / p.m0));
}

TimeSeries price_level_series(const TimeSeries& n, const TimeSeries& m,
                              const PriceLevelParams& p,
                              const std::vector<double>& grid) {
  return on_grid(grid, "price_level", [&](double t) {
    return price_level(interp_linear(n, t), interp_linear(m, t), p);
  });
}

TimeSeries inflation_model(const TimeSeries& n, const TimeSeries& m,
                           const PriceLevelParams& p,
                           const std::vector<double>& grid) {
  auto g = log_growth(price_level_series(n, m, p, grid));
  return TimeSeries(g.points(), "inflation");
}

GrowthRelations growth_relations(double k, double m_growth) {
  return {(k - 1.0) * m_growth, k * m_growth};
}

InterestParams InterestParams::make(double k_i, double k_p) {
  require_positive(k_i, "k_i");
  require_positive(k_p, "k_p");
  return {k_i, k_p};
}

double interest_rate(double n, double m, const InterestParams& ip) {
  require_positive(n, "N");
  require_positive(m, "M");
  return std::exp((std::log(n / m) - std::log(ip.k_p)) / ip.k_i);
}

TimeSeries interest_series(const TimeSeries& n, const TimeSeries& m,
                           const InterestParams& ip,
                           const std::vector<double>& grid) {
  return on_grid(grid, "interest_rate", [&](double t) {
    return interest_rate(interp_linear(n, t), interp_linear(m, t), ip);
  });
}

OkunResult okun_hours(const TimeSeries& n, const TimeSeries& p, double k_h,
                      const std::vector<double>& grid) {
  require_positive(k_h, "k_H");
  std::vector<double> real(grid.size()), hours(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double nv = interp_linear(n, grid[i]);
    const double pv = interp_linear(p, grid[i]);
    if (!(nv > 0.0) || !(pv > 0.0))
      throw ModelDomainError("Okun model needs positive N and P at t=" +
                                 format_double(grid[i]),
                             grid[i], true);
    real[i] = nv / pv;
    hours[i] = real[i] / k_h;
  }
  OkunResult out;
  out.hours = TimeSeries::from_columns(grid, hours, "hours");
  out.hours_growth = log_growth(out.hours);
  out.real_growth = log_growth(TimeSeries::from_columns(grid, real, "real_output"));
  return out;
}

CobbDouglasParams CobbDouglasParams::make(double a_tfp, double k1, double k2) {
  require_positive(a_tfp, "A");
  if (!std::isfinite(k1) || !std::isfinite(k2))
    fail(ErrorKind::kDomain, "Cobb-Douglas exponents must be finite");
  return {a_tfp, k1, k2};
}

double cobb_douglas(double capital, double labor, const CobbDouglasParams& cd) {
  require_positive(capital, "K");
  require_positive(labor, "L");
  return cd.a_tfp * std::pow(capital, cd.k1) * std::pow(labor, cd.k2);
}

TimeSeries cobb_douglas_series(const TimeSeries& capital, const TimeSeries& labor,
                               const CobbDouglasParams& cd,
                               const std::vector<double>& grid) {
  return on_grid(grid, "output", [&](double t) {
    return cobb_douglas(interp_linear(capital, t), interp_linear(labor, t), cd);
  });
}

SolowCapitalParams SolowCapitalParams::make(double k0, double i0, double d0,
                                            double sigma, double delta) {
  require_positive(k0, "K0");
  require_positive(i0, "I0");
  require_positive(d0, "D0");
  require_positive(sigma, "sigma");
  require_positive(delta, "delta");
  return {k0, i0, d0, sigma, delta};
}

double solow_equilibrium(const SolowCapitalParams& sp) {
  if (sp.sigma == sp.delta)
    fail(ErrorKind::kDegenerateEquilibrium,
         "sigma == delta: investment and depreciation never cross");
  return sp.k0 * std::exp(sp.sigma * sp.delta * std::log(sp.i0 / sp.d0) /
                          (sp.sigma - sp.delta));
}

double solow_investment(double capital, const SolowCapitalParams& sp) {
  if (!(capital > 0.0)) throw ModelDomainError("capital must be positive", capital, true);
  return sp.i0 * std::exp(std::log(capital / sp.k0) / sp.sigma);
}

double solow_depreciation(double capital, const SolowCapitalParams& sp) {
  if (!(capital > 0.0)) throw ModelDomainError("capital must be positive", capital, true);
  return sp.d0 * std::exp(std::log(capital / sp.k0) / sp.delta);
}

AdasParams AdasParams::make(double k_a, double n0, double n_ref, double s0,
                            double s_ref) {
  require_positive(k_a, "k_A");
  require_positive(n0, "N0");
  require_positive(n_ref, "N_ref");
  require_positive(s0, "S0");
  require_positive(s_ref, "S_ref");
  return {k_a, n0, n_ref, s0, s_ref};
}

double ad_price(const AdasParams& p, double delta_n) {
  return p.n0 / (p.k_a * p.s_ref) * std::exp(-p.k_a * delta_n / p.n0);
}

double sras_price(const AdasParams& p, double delta_s) {
  return p.n_ref / (p.k_a * p.s0) * std::exp(delta_s / (p.k_a * p.s0));
}

double lras_price(const AdasParams& p, double s) {
  return core::ge_price(core::Relation::make(p.k_a, p.n_ref, p.s_ref), s);
}

core::Relation adas_relation(const AdasParams& p) {
  core::Relation rel = core::Relation::make(1.0, p.n_ref, p.s_ref, "P");
  rel.index_den = p.k_a;
  rel.source = "N";
  rel.destination = "S";
  return rel;
}

AdasCurves adas_curves(const AdasParams& p, const std::vector<double>& sweep,
                       double supply_shift) {
  AdasCurves out;
  for (double x : sweep) {
    out.ad.push_back({x, ad_price(p, x)});
    out.sras.push_back({x, sras_price(p, x - supply_shift)});
    const double s = p.s_ref + x;
    if (s > 0.0) out.lras.push_back({s, lras_price(p, s)});
  }
  return out;
}

Equilibrium adas_equilibrium(const AdasParams& p, double supply_shift) {
  auto gap = [&](double x) {
    return std::log(ad_price(p, x)) - std::log(sras_price(p, x - supply_shift));
  };
  const double scale = std::max(p.n0, p.s0);
  const double x = bisect_decreasing(gap, -scale, scale,
                                     -std::numeric_limits<double>::infinity(), 1e-13);
  return {x, ad_price(p, x)};
}

IslmParams IslmParams::make(double n0, double m_ref, double s_ref, double k_p,
                            double k_s, double k_i) {
  require_positive(n0, "N0");
  require_positive(m_ref, "M_ref");
  require_positive(s_ref, "S_ref");
  require_positive(k_p, "k_p");
  require_positive(k_s, "k_S");
  require_positive(k_i, "k_i");
  return {n0, m_ref, s_ref, k_p, k_s, k_i};
}

double lm_rate(const IslmParams& p, double delta_n, double delta_m) {
  const double n = p.n0 + delta_n;
  if (!(n > 0.0))
    throw ModelDomainError("N0 + dN must be positive", delta_n, true);
  return std::exp((std::log(n / (p.k_p * p.m_ref)) - p.k_p * delta_m / n) / p.k_i);
}

double is_rate(const IslmParams& p, double delta_n, double demand_shift) {
  const double n = p.n0 + demand_shift;
  if (!(n > 0.0))
    throw ModelDomainError("N0 + shift must be positive", demand_shift, true);
  return std::exp((std::log(n / (p.k_s * p.s_ref)) - p.k_s * delta_n / n) / p.k_i);
}

IslmCurves islm_curves(const IslmParams& p, const CurveShift& shift,
                       const std::vector<double>& sweep) {
  IslmCurves out;
  for (double x : sweep) {
    out.lm_money.push_back({x, lm_rate(p, shift.delta_n, x)});
    out.is.push_back({x, is_rate(p, x, shift.delta_n)});
    if (p.n0 + x > 0.0) out.lm_output.push_back({x, lm_rate(p, x, shift.delta_m)});
  }
  return out;
}

Equilibrium islm_equilibrium(const IslmParams& p, const CurveShift& shift) {
  // Compare i^k_i on both sides; the 1/k_i root is monotone.
  auto gap = [&](double x) {
    const double n_is = p.n0 + shift.delta_n;
    const double is_log = std::log(n_is / (p.k_s * p.s_ref)) - p.k_s * x / n_is;
    const double n_lm = p.n0 + x;
    const double lm_log = std::log(n_lm / (p.k_p * p.m_ref)) - p.k_p * shift.delta_m / n_lm;
    return is_log - lm_log;
  };
  const double x = bisect_decreasing(gap, -0.5 * p.n0, p.n0, -p.n0, 1e-10);
  return {x, lm_rate(p, x, shift.delta_m)};
}

double money_mediation(double k, double k_s) {
  require_positive(k_s, "k_s");
  return k / k_s;
}

double ridge_sigma(double kappa, double gamma) {
  require_positive(kappa, "kappa");
  require_positive(gamma, "gamma");
  return gamma * std::exp(-(kappa + std::log(gamma)) / kappa);
}

double ridge_price(double sigma, double n_over_c0, double gamma) {
  require_positive(sigma, "sigma");
  require_positive(n_over_c0, "N/C0");
  require_positive(gamma, "gamma");
  const double denom = std::log(sigma / gamma);
  if (denom == 0.0) throw ModelDomainError("sigma == gamma: index undefined", sigma, true);
  const double k = std::log(n_over_c0) / denom;
  return k * std::exp((k - 1.0) * std::log(sigma));
}

double ridge_source_ratio(double kappa, double gamma) {
  const double sigma = ridge_sigma(kappa, gamma);
  return std::exp(std::log(sigma / gamma) / kappa);
}

}  // namespace infoeq::macro
