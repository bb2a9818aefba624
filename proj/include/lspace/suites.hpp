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
#include <random>
#include <string>
#include <vector>

#include "lspace/interval.hpp"
#include "lspace/tree.hpp"

namespace lspace {

struct SuiteOptions {
  uint64_t seed = 20260101;
  // Negative control: the grid comparison uses a closed form with the
  // endpoint correction term removed, so the suite must fail.
  bool inject_bug = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long count = 0;    // instances checked
  long skipped = 0;  // instances outside the classified cases
  std::string detail;
};

std::vector<std::string> suite_names();
// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

// Shared random generators, also used by the tests.
Slope random_slope(std::mt19937_64& g, long max_num, long max_den, int inf_one_in = 0);
SlopeInterval random_interval(std::mt19937_64& g);
// Iterated tree with unknot companion, 1-3 vertices, smooth edges only.
SatelliteTree random_iterated_tree(std::mt19937_64& g);
SlopeAssignment random_assignment(const SatelliteTree& t, std::mt19937_64& g, int inf_one_in = 0);

// Fixed trees used by several suites.
SatelliteTree torus_cable_g5_tree();      // genus 5 companion, (2,23,2)
SatelliteTree algebraic_pair_tree();      // (2,3) <- (2,13), edge determinant 1
SatelliteTree iterated_negative_tree();   // (3,-2) <- (2,5)

}  // namespace lspace
