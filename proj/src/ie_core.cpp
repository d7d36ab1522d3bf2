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

#include "infoeq/ie_core.hpp"

#include <cmath>

#include "infoeq/errors.hpp"
#include "infoeq/table.hpp"

namespace infoeq::core {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    fail(ErrorKind::kDomain, std::string(what) + " must be positive and finite, got " +
                                 format_double(x));
}

}  // namespace

Relation Relation::make(double k, double d_ref, double s_ref, std::string detector) {
  require_positive(k, "information transfer index k");
  require_positive(d_ref, "d_ref");
  require_positive(s_ref, "s_ref");
  Relation r;
  r.index_num = k;
  r.index_den = 1.0;
  r.d_ref = d_ref;
  r.s_ref = s_ref;
  r.detector = std::move(detector);
  return r;
}

double ge_source(const Relation& rel, double s) {
  require_positive(s, "s");
  return std::exp(std::log(rel.d_ref) + rel.k() * (std::log(s) - std::log(rel.s_ref)));
}

double ge_price(const Relation& rel, double s) {
  require_positive(s, "s");
  return std::exp(std::log(rel.k()) + std::log(rel.d_ref) - std::log(rel.s_ref) +
                  (rel.k() - 1.0) * (std::log(s) - std::log(rel.s_ref)));
}

CurvePoint demand_curve(const Relation& rel, double d0, double s) {
  require_positive(s, "s");
  require_positive(d0, "d0");
  return {rel.k() * d0 / s, rel.k() * d0 * std::log(s / rel.s_ref)};
}

CurvePoint supply_curve(const Relation& rel, double s0, double d) {
  require_positive(d, "d");
  require_positive(s0, "s0");
  return {rel.k() * d / s0, (s0 / rel.k()) * std::log(d / rel.d_ref)};
}

CurvePoint partial_curve(const Relation& rel, const PartialEquilibrium& pe, double x) {
  return pe.side == HeldSide::kDemand ? demand_curve(rel, pe.level, x)
                                      : supply_curve(rel, pe.level, x);
}

LinearCoeffs linearize(const Relation& rel, double d0, double s0) {
  require_positive(d0, "d0");
  require_positive(s0, "s0");
  const double k = rel.k();
  return {rel.d_ref + k * d0, rel.s_ref, rel.s_ref - s0 / k,
          s0 * s0 / (k * k * rel.d_ref)};
}

Elasticities elasticities(const Relation& rel, double d0, double s0) {
  require_positive(d0, "d0");
  require_positive(s0, "s0");
  return {-rel.k() * d0 / rel.d_ref, s0 / (rel.k() * rel.s_ref)};
}

double constant_price(const Relation& rel, double d0, double s0) {
  require_positive(d0, "d0");
  require_positive(s0, "s0");
  return rel.k() * d0 / s0;
}

Relation invert(const Relation& rel) {
  Relation out = rel;
  out.index_num = rel.index_den;
  out.index_den = rel.index_num;
  out.d_ref = rel.s_ref;
  out.s_ref = rel.d_ref;
  out.source = rel.destination;
  out.destination = rel.source;
  return out;
}

Relation compose(const Relation& ab, const Relation& bc) {
  if (!ab.destination.empty() && !bc.source.empty() && ab.destination != bc.source)
    fail(ErrorKind::kInvalidArgument, "cannot compose: '" + ab.destination +
                                          "' does not match '" + bc.source + "'");
  Relation out;
  out.index_num = ab.index_num * bc.index_num;
  out.index_den = ab.index_den * bc.index_den;
  out.s_ref = bc.s_ref;
  if (ab.s_ref == bc.d_ref) {
    out.d_ref = ab.d_ref;
  } else {
    out.d_ref = std::exp(std::log(ab.d_ref) +
                         ab.k() * (std::log(bc.d_ref) - std::log(ab.s_ref)));
  }
  out.source = ab.source;
  out.destination = bc.destination;
  return out;
}

Relation identity_relation(double ref) { return Relation::make(1.0, ref, ref); }

double ode_oracle(const Relation& rel, double s_start, double s_end,
                  double d_start, int steps) {
  require_positive(s_start, "s_start");
  require_positive(s_end, "s_end");
  require_positive(d_start, "d_start");
  if (steps < 1) fail(ErrorKind::kInvalidArgument, "steps must be >= 1");
  const double k = rel.k();
  auto f = [k](double s, double d) { return k * d / s; };
  const double h = (s_end - s_start) / steps;
  double s = s_start;
  double d = d_start;
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(s, d);
    const double k2 = f(s + 0.5 * h, d + 0.5 * h * k1);
    const double k3 = f(s + 0.5 * h, d + 0.5 * h * k2);
    const double k4 = f(s + h, d + h * k3);
    d += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s = s_start + (i + 1) * h;
  }
  return d;
}

}  // namespace infoeq::core
