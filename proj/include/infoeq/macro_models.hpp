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

#include <vector>

#include "infoeq/ie_core.hpp"
#include "infoeq/timeseries.hpp"

namespace infoeq::macro {

// ---------------------------------------------------------------------------
// Price level with a slowly varying index k(N, M).

struct PriceLevelParams {
  double alpha = 1.0;
  double gamma = 1.0;
  double m0 = 1.0;

  static PriceLevelParams make(double alpha, double gamma, double m0);
  double scale() const noexcept { return gamma * m0; }  // C0 = gamma M0
};

// log(N/(gamma M0)) / log(M/(gamma M0)); both logs must be positive.
double k_index(double n, double m, const PriceLevelParams& p);

struct KIndexPartials {
  double dk_dn;
  double dk_dm;
};

// Analytic partial derivatives of k_index.
KIndexPartials k_index_partials(double n, double m, const PriceLevelParams& p);

// alpha k (M/M0)^(k-1)
double price_level(double n, double m, const PriceLevelParams& p);

TimeSeries price_level_series(const TimeSeries& n, const TimeSeries& m,
                              const PriceLevelParams& p,
                              const std::vector<double>& grid);

// price_level on grid followed by log_growth.
TimeSeries inflation_model(const TimeSeries& n, const TimeSeries& m,
                           const PriceLevelParams& p,
                           const std::vector<double>& grid);

struct GrowthRelations {
  double inflation;  // (k - 1) m
  double nominal;    // k m
};

GrowthRelations growth_relations(double k, double m_growth);

// ---------------------------------------------------------------------------
// Interest rates: i^k_i = (1/k_p) N/M.

struct InterestParams {
  double k_i = 1.0;
  double k_p = 1.0;

  static InterestParams make(double k_i, double k_p);
};

double interest_rate(double n, double m, const InterestParams& ip);

TimeSeries interest_series(const TimeSeries& n, const TimeSeries& m,
                           const InterestParams& ip,
                           const std::vector<double>& grid);

// ---------------------------------------------------------------------------
// Labour market: H = (1/k_H) N/P.

struct OkunResult {
  TimeSeries hours;
  TimeSeries hours_growth;  // log_growth(hours)
  TimeSeries real_growth;   // log_growth(N/P)
};

OkunResult okun_hours(const TimeSeries& n, const TimeSeries& p, double k_h,
                      const std::vector<double>& grid);

// ---------------------------------------------------------------------------
// Production and capital.

struct CobbDouglasParams {
  double a_tfp = 1.0;
  double k1 = 1.0;
  double k2 = 1.0;

  static CobbDouglasParams make(double a_tfp, double k1, double k2);
};

double cobb_douglas(double capital, double labor, const CobbDouglasParams& cd);

TimeSeries cobb_douglas_series(const TimeSeries& capital, const TimeSeries& labor,
                               const CobbDouglasParams& cd,
                               const std::vector<double>& grid);

// K <-> I with K/K0 = (I/I0)^sigma and K <-> Dep with K/K0 = (Dep/D0)^delta.
struct SolowCapitalParams {
  double k0 = 1.0;
  double i0 = 1.0;
  double d0 = 1.0;
  double sigma = 2.0;
  double delta = 1.0;

  static SolowCapitalParams make(double k0, double i0, double d0, double sigma,
                                 double delta);
  bool stable() const noexcept { return sigma > delta; }
};

// K* = K0 exp(sigma delta log(I0/D0) / (sigma - delta))
double solow_equilibrium(const SolowCapitalParams& sp);
double solow_investment(double capital, const SolowCapitalParams& sp);
double solow_depreciation(double capital, const SolowCapitalParams& sp);

// ---------------------------------------------------------------------------
// Curve generators.

struct XY {
  double x;
  double y;
};

// P : N <-> S in partial equilibrium.
struct AdasParams {
  double k_a = 1.0;
  double n0 = 1.0;     // demand held for the AD curve
  double n_ref = 1.0;
  double s0 = 1.0;     // supply held for the SRAS curve
  double s_ref = 1.0;

  static AdasParams make(double k_a, double n0, double n_ref, double s0,
                         double s_ref);
};

// P = N0/(k_A S_ref) exp(-k_A dN/N0)
double ad_price(const AdasParams& p, double delta_n);
// P = N_ref/(k_A S0) exp(+dS/(k_A S0))
double sras_price(const AdasParams& p, double delta_s);
// General-equilibrium locus P = k_A (N_ref/S_ref)(S/S_ref)^(k_A - 1).
double lras_price(const AdasParams& p, double s);

// The exponential AD and SRAS curves are the ie_core demand and supply
// curves of this relation (index 1/k_A, references N_ref and S_ref).
core::Relation adas_relation(const AdasParams& p);

struct AdasCurves {
  std::vector<XY> ad;    // (dN, P)
  std::vector<XY> sras;  // (dS, P); shifted right by supply_shift
  std::vector<XY> lras;  // (S, P) with S = S_ref + sweep value
};

AdasCurves adas_curves(const AdasParams& p, const std::vector<double>& sweep,
                       double supply_shift = 0.0);

struct Equilibrium {
  double quantity;
  double level;  // price or interest rate
};

// Crossing of AD(x) and SRAS(x - supply_shift).
Equilibrium adas_equilibrium(const AdasParams& p, double supply_shift = 0.0);

struct CurveShift {
  double delta_n = 0.0;
  double delta_m = 0.0;
  double delta_s = 0.0;
};

// (i <-> p) : N <-> M and i : N <-> S.
struct IslmParams {
  double n0 = 1.0;
  double m_ref = 1.0;
  double s_ref = 1.0;
  double k_p = 1.0;
  double k_s = 1.0;
  double k_i = 1.0;

  static IslmParams make(double n0, double m_ref, double s_ref, double k_p,
                         double k_s, double k_i);
};

// i = [ (N0 + dN)/(k_p M_ref) exp(-k_p dM/(N0 + dN)) ]^(1/k_i)
double lm_rate(const IslmParams& p, double delta_n, double delta_m);
// i = [ N0'/(k_S S_ref) exp(-k_S dN/N0') ]^(1/k_i) with N0' = N0 + demand_shift
double is_rate(const IslmParams& p, double delta_n, double demand_shift = 0.0);

struct IslmCurves {
  std::vector<XY> lm_money;   // (dM, i) at shift.delta_n
  std::vector<XY> is;         // (dN, i) with the IS source shifted by shift.delta_n
  std::vector<XY> lm_output;  // (dN, i) at shift.delta_m
};

IslmCurves islm_curves(const IslmParams& p, const CurveShift& shift,
                       const std::vector<double>& sweep);

// Crossing, in dN, of the IS curve (source shifted by shift.delta_n) with
// the LM curve at shift.delta_m. Bisection to 1e-10.
Equilibrium islm_equilibrium(const IslmParams& p, const CurveShift& shift);

// ---------------------------------------------------------------------------
// Money mediation and the cross-country ridge line.

// k_n = k / k_s
double money_mediation(double k, double k_s);

// sigma = gamma exp(-(kappa + log gamma)/kappa) where dP/dsigma = 0.
double ridge_sigma(double kappa, double gamma);

// Normalised price P/alpha = k sigma^(k-1) with
// k = log(N/C0) / log(sigma/gamma), sigma = M/M0, gamma = C0/M0.
double ridge_price(double sigma, double n_over_c0, double gamma);

// N/C0 for which the ridge point of `kappa` has index exactly 1/kappa.
double ridge_source_ratio(double kappa, double gamma);

}  // namespace infoeq::macro
