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

#include <string>

namespace infoeq::core {

// dD/dS = k D/S with integration constants (d_ref, s_ref) fixed per market.
//
// The index is held as the ratio index_num / index_den (source over
// destination information per symbol) so that inversion swaps two numbers
// and is an exact involution, and composing a relation with its inverse
// yields exactly k = 1. `source` and `destination` are optional labels used
// only to sanity-check composition.
struct Relation {
  double index_num = 1.0;
  double index_den = 1.0;
  double d_ref = 1.0;
  double s_ref = 1.0;
  std::string detector;
  std::string source;
  std::string destination;

  // Validates k, d_ref, s_ref > 0 (throws kDomain).
  static Relation make(double k, double d_ref, double s_ref,
                       std::string detector = {});

  double k() const noexcept { return index_num / index_den; }

  friend bool operator==(const Relation&, const Relation&) = default;
};

enum class HeldSide { kDemand, kSupply };

struct PartialEquilibrium {
  HeldSide side;
  double level;  // D0 or S0
};

struct CurvePoint {
  double price;
  double delta;  // Delta D along a demand curve, Delta S along a supply curve
};

// D = alpha - beta P, S = gamma + delta P near the reference point.
struct LinearCoeffs {
  double alpha;
  double beta;
  double gamma;
  double delta;
};

struct Elasticities {
  double demand;
  double supply;
};

// General equilibrium: D = d_ref (s/s_ref)^k.
double ge_source(const Relation& rel, double s);

// General equilibrium price: k (d_ref/s_ref) (s/s_ref)^(k-1) = k D/S.
double ge_price(const Relation& rel, double s);

// Demand held at d0: P = k d0/s, Delta D = k d0 log(s/s_ref).
CurvePoint demand_curve(const Relation& rel, double d0, double s);

// Supply held at s0: P = k d/s0, Delta S = (s0/k) log(d/d_ref).
CurvePoint supply_curve(const Relation& rel, double s0, double d);

// Evaluates whichever curve `pe` describes at the free variable x
// (S for a held demand, D for a held supply).
CurvePoint partial_curve(const Relation& rel, const PartialEquilibrium& pe,
                         double x);

LinearCoeffs linearize(const Relation& rel, double d0, double s0);

// Leading-order price elasticities at the reference point.
Elasticities elasticities(const Relation& rel, double d0, double s0);

// Both sides slow: P = Delta D / Delta S = k d0/s0.
double constant_price(const Relation& rel, double d0, double s0);

// B in equilibrium with A: k' = 1/k, references swapped.
Relation invert(const Relation& rel);

// (A <-> B) then (B <-> C) gives A <-> C with k = ab.k() * bc.k(). The source
// reference is rescaled when ab.s_ref != bc.d_ref so that
// ge_source(compose(ab, bc), s) == ge_source(ab, ge_source(bc, s)).
Relation compose(const Relation& ab, const Relation& bc);

// Identity element for compose: k = 1, d_ref = s_ref = ref.
Relation identity_relation(double ref = 1.0);

// Fixed-step classical RK4 integration of dD/dS = k D/S from
// (s_start, d_start) to s_end. Independent of the closed forms above.
double ode_oracle(const Relation& rel, double s_start, double s_end,
                  double d_start, int steps);

}  // namespace infoeq::core
