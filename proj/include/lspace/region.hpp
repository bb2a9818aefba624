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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lspace/oracle.hpp"
#include "lspace/slope.hpp"
#include "lspace/tree.hpp"

namespace lspace {

// S3 slope of an SF slope on a torus-link component: pq + 1/y.
Slope psi(const Slope& y, const Int& pq);
Slope psi_inv(const Slope& alpha, const Int& pq);

// (np, nq) torus-link satellite of a companion of the given genus; genus 0
// is the unknot, genus >= 1 a positive L-space knot.
struct TorusSatelliteSpec {
  int genus = 0;
  Int p = 1, q = 1;
  int n = 1;

  Int N() const { return Int(2 * genus - 1); }
  Int pq() const { return p * q; }
  // p + q - 2 g p, the distance from N_pq to pq.
  Int c1() const { return p + q - Int(2 * genus) * p; }

  void validate() const;
  SatelliteTree tree() const;
};

Int n_pq(const TorusSatelliteSpec& spec);

enum class TorusCase {
  LatticeOnly,      // nontrivial, N > q/p, p > 1
  LatticePlusArc,   // nontrivial, N > q/p, p = 1
  Generic,          // nontrivial with N <= q/p, or unknot with p, q > 1
  UnknotCable,      // unknot, p = 1, q > 0
  MirrorGeneric,    // unknot, p > 1, q < -1
  MirrorUnknotCable,  // unknot, p = 1, q < 0
  OracleOnly,       // unknot, p > 1, q = +-1
};

TorusCase torus_case(const TorusSatelliteSpec& spec);
const char* torus_case_name(TorusCase c);

struct RegionLabel {
  bool lspace = false;
  bool in_R = false, in_Z = false, in_B = false;
  // Raw fundamental-domain flags; only set where the stratum L* is defined.
  bool in_L_minus = false, in_L_plus = false;
  bool in_lambda_orbit_of_Lstar = false;
  // Which orbit a point of the lattice orbit of L* lies in.
  bool in_orbit_L_minus = false, in_orbit_L_plus = false;
  std::optional<bool> monotone;
};

// Closed-form L-space test in SF coordinates.
bool torus_lspace_sf(const TorusSatelliteSpec& spec, const std::vector<Slope>& y);

RegionLabel torus_region_label(const TorusSatelliteSpec& spec, const std::vector<Slope>& alpha);
RegionLabel torus_region_label_sf(const TorusSatelliteSpec& spec, const std::vector<Slope>& y);

// Per-vertex data of the product inner approximation.
struct VertexInnerRegion {
  int vertex = -1;
  Int m_plus = 0, m_minus = 0;
  // When set, points with sum floor(y) = 0 (resp. sum ceil(y) = 0) and
  // sum floor(r [y]) = 0 (resp. sum floor(r [-y]) = 0) are removed.
  bool plus_cut = false, minus_cut = false;
  Int plus_r = 0, minus_r = 0;

  bool in_L_min_plus(const std::vector<Slope>& y) const;
  bool in_L_min_minus(const std::vector<Slope>& y) const;
  static bool in_R_minus_Z(const std::vector<Slope>& y);
  bool member(const std::vector<Slope>& y) const;
  std::string str() const;
};

enum class InnerVariant { Auto, Iterated, Algebraic };

struct InnerRegions {
  InnerVariant variant = InnerVariant::Iterated;
  std::vector<VertexInnerRegion> vertices;  // indexed like the tree
  // Root slot tuples in L_min_minus are removed (p_r = 1, q_r = 2g - 1).
  bool drop_root_minus = false;
  // Nontrivial companion on a leaf root: the printed leaf cut does not keep
  // the root interval clear of the companion for genus >= 2, so root tuples
  // that rely on L_min_minus are also checked against the exact torus region.
  std::optional<TorusSatelliteSpec> root_exact_minus;

  // Free-slot tuple of vertex v in a, ordered by slot.
  static std::vector<Slope> tuple(const SatelliteTree& t, int v, const SlopeAssignment& a);
  bool contains(const SatelliteTree& t, const SlopeAssignment& a) const;
};

// Throws Hypothesis when the companion and root data fall outside the range
// where the product is known to consist of L-space slopes. The p_r = 1,
// q_r = 2g - 1 case is accepted only with allow_boundary_fallback.
InnerRegions inner_min_regions(const SatelliteTree& t, InnerVariant variant = InnerVariant::Auto,
                               bool allow_boundary_fallback = false);

bool monotone_at(const SatelliteTree& t, int v, const SlopeAssignment& a, OracleCache* cache = nullptr);
bool monotone_stratum_member(const SatelliteTree& t, const SlopeAssignment& a, OracleCache* cache = nullptr);

enum class Retract { Lattice, Torus, ContractibleDim1, ContractibleDimN };
const char* retract_name(Retract r);

struct TopologyReport {
  std::string case_label;
  std::optional<long> h1_rank;
  std::optional<Retract> retract;
  int n = 1;
  std::string epsilon_generators;
};

TopologyReport topology_classify(const TorusSatelliteSpec& spec);

// Lattice orbit of ([-inf, N_pq> ^n minus [-inf, N_pq - p> ^n), in SF
// coordinates.
bool in_rectangle_difference_orbit(const TorusSatelliteSpec& spec, const std::vector<Slope>& y);

enum class LoCtfCase { Exact, LowerBound };

struct LoCtfRegions {
  LoCtfCase kind = LoCtfCase::Exact;
  // Both take S3 slope vectors.
  std::function<bool(const std::vector<Slope>&)> lo_lower_bound;
  std::function<bool(const std::vector<Slope>&)> f_region;
};

// Requires a nontrivial companion and p > 1. Throws OpenCase when
// q/p <= 2g - 1 <= (q + 1)/p.
LoCtfRegions lo_ctf_regions(const TorusSatelliteSpec& spec);

}  // namespace lspace
