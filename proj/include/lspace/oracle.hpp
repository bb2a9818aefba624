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

#include <string>
#include <unordered_map>
#include <vector>

#include "lspace/seifert.hpp"
#include "lspace/tree.hpp"

namespace lspace {

// L-space interval of the subtree below v, in SF_v coordinates at the
// outgoing boundary, together with the bookkeeping of the incoming pieces.
struct VertexIntervalState {
  SlopeInterval interval;
  bool is_bc = false;
  std::vector<int> J_bc, J_bi, J_biZ_plus, J_biZ_minus;
  // Some child had an empty or one-point interval; v is then empty too.
  bool degenerate = false;
  bool has_exceptional_child = false;
  bool exceptional_child_bc = false;
  FiberExteriorInput input;
  FiberIntervalResult fiber;
  // BC child slopes and BI child endpoints in SF_v coordinates, by slot.
  std::vector<std::pair<int, Slope>> bc_slopes;
  std::vector<std::pair<int, SlopeInterval>> bi_intervals;
};

// Memo of vertex states keyed by the slopes inside each subtree. Not
// thread-safe; use one per worker.
class OracleCache {
 public:
  const VertexIntervalState* find(const std::string& key) const;
  void store(const std::string& key, const VertexIntervalState& s);
  size_t size() const { return map_.size(); }
  void clear() { map_.clear(); }

 private:
  std::unordered_map<std::string, VertexIntervalState> map_;
};

VertexIntervalState vertex_interval(const SatelliteTree& t, int v, const SlopeAssignment& a,
                                    OracleCache* cache = nullptr);
VertexIntervalState vertex_interval(const SatelliteTree& t, const std::string& v,
                                    const SlopeAssignment& a, OracleCache* cache = nullptr);

// Companion's S3 interval pulled into the root SF basis.
IntMatrix2 companion_to_root_matrix(const SeifertVertex& root);
SlopeInterval companion_root_interval(const SatelliteTree& t);

struct FillingResult {
  bool lspace = false;
  VertexIntervalState root;
  SlopeInterval companion_sf;
};

FillingResult is_lspace_filling(const SatelliteTree& t, const SlopeAssignment& a,
                                OracleCache* cache = nullptr);

// Same question answered by drilling a regular fiber of the root piece,
// treating the companion as one more summand there, and asking whether the
// trivial refilling slope 0 lies in the resulting interval.
bool lspace_by_drilling(const SatelliteTree& t, const SlopeAssignment& a);

// Interval of L-space fillings of the free root slot `slot` (SF_root basis)
// with every other slot filled as in `a`.
FiberIntervalResult root_slot_interval(const SatelliteTree& t, const SlopeAssignment& a, int slot);

struct YBar {
  bool defined = false;  // false when some slope is inf
  Rat minus, plus;
};

// The endpoint values with the integer parts of every incoming slope added
// back, so that they only depend on fractional parts.
YBar ybar(const SatelliteTree& t, int v, const VertexIntervalState& s, const SlopeAssignment& a);

// Fractional-part sums at k used by the bounds below; zero if any slope is inf.
Int ybar_sigma_minus(const VertexIntervalState& s, const std::vector<Slope>& free_slopes, const Int& k);
Int ybar_sigma_plus(const VertexIntervalState& s, const std::vector<Slope>& free_slopes, const Int& k);

// Range of ybar for BI results, and the integrality criterion for ybar at
// q*/p. Vertices with an exceptional child are skipped.
bool ybar_range_check(const SatelliteTree& t, int v, const SlopeAssignment& a, std::string* why = nullptr);
// Upper bound on ybar minus and lower bound on ybar plus driven by the
// residue of p modulo q.
bool ybar_residue_bound_check(const SatelliteTree& t, int v, const SlopeAssignment& a, std::string* why = nullptr);

}  // namespace lspace
