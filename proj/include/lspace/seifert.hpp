// Copyright (c) 2026 The lspace Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lspace/interval.hpp"
#include "lspace/slope.hpp"

namespace lspace {

// (p*, q*) with p* p - q* q = 1 and 0 <= q* < p.
std::pair<Int, Int> pstar_qstar(const Int& p, const Int& q);

struct SeifertVertex {
  Int p = 1, q = 1;
  int n = 1;
  Int p_star = 1, q_star = 0;

  static SeifertVertex make(const Int& p, const Int& q, int n);
};

// Data of a Seifert fibered piece over the disk with some boundary tori
// filled in: the slopes of its fibers, and one SF-basis interval per
// boundary-incompressible glued-in summand.
struct FiberExteriorInput {
  std::vector<Slope> seifert_slopes;
  std::vector<SlopeInterval> bi_intervals;
};

struct FiberIntervalResult {
  SlopeInterval interval;
  Slope y_minus, y_plus;
  bool minus_attained = false;
  bool plus_attained = false;
  bool is_bc = false;
  // Smallest k realizing each extremum; 0 when unattained or infinite.
  int64_t k_minus = 0, k_plus = 0;
};

struct Extremum {
  Slope value;
  bool attained = false;
  int64_t k = 0;
};

// Endpoint pair (y-, y+) of a BI interval.
std::pair<Slope, Slope> bi_endpoints(const SlopeInterval& i);

Slope y_minus_of_k(const FiberExteriorInput& in, const Int& k);
Slope y_plus_of_k(const FiberExteriorInput& in, const Int& k);

// sup over k > 0 of y_minus_of_k and inf of y_plus_of_k, found by a search
// over one period of the fractional parts. Throws Resource when the period
// exceeds period_cap().
Extremum y_minus_sup(const FiberExteriorInput& in);
Extremum y_plus_inf(const FiberExteriorInput& in);

FiberIntervalResult fiber_exterior_interval(const FiberExteriorInput& in);

// -sum of the slopes, or inf when any slope is inf.
Slope rational_longitude(const std::vector<Slope>& seifert_slopes);

struct SpecialSlopeFlags {
  bool in_R = false;
  bool in_Z = false;
  bool in_R0 = false;
};

SpecialSlopeFlags classify_special_slope(const std::vector<Slope>& vec,
                                         bool has_exceptional_fibers = false);

struct LambdaCanonical {
  std::vector<Slope> rep;
  std::vector<Int> shift;  // sums to zero; vec = rep + shift
};

LambdaCanonical lambda_canonicalize(const std::vector<Slope>& vec);

}  // namespace lspace
