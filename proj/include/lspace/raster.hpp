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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lspace/oracle.hpp"
#include "lspace/region.hpp"
#include "lspace/tree.hpp"

namespace lspace {

enum class Basis { SF, S3 };

Basis parse_basis(const std::string& text);

struct SlotRef {
  std::string vertex;
  int slot = 0;
};

// "v:i"
SlotRef parse_slot_ref(const std::string& text);
// "v:i=a/b,v:j=c" in the given basis, returned in SF coordinates.
SlopeAssignment parse_assignment(const SatelliteTree& t, const std::string& text, Basis basis);

// SF slope of an input slope at a free slot of vertex v.
Slope to_sf(const SatelliteTree& t, int v, const Slope& s, Basis basis);

// The single-vertex torus-link data of t, when t has that shape.
std::optional<TorusSatelliteSpec> torus_spec_of(const SatelliteTree& t);

// Oracle label of an SF assignment. B and the L* flags come from the closed
// form and are only filled for single-vertex trees.
RegionLabel tree_region_label(const SatelliteTree& t, const SlopeAssignment& a, OracleCache* cache = nullptr);

struct RasterWindow {
  Rat x0, x1, y0, y1;
  Rat step = 1;

  // "x0:x1:y0:y1"
  static RasterWindow parse(const std::string& window, const std::string& step);
  void validate() const;
  long columns() const;
  long rows() const;
};

struct RasterRequest {
  SatelliteTree tree;
  SlotRef free1, free2;
  SlopeAssignment pins;  // SF coordinates
  Basis basis = Basis::SF;
  RasterWindow window;
  int jobs = 1;
  bool compare_closed_form = false;
};

struct RasterCell {
  Rat a1, a2;  // in the request basis
  bool error = false;
  std::string error_text;
  RegionLabel label;
  std::optional<bool> closed_form_lspace;
};

// Cells in order a1 ascending, then a2 ascending.
std::vector<RasterCell> raster_region(const RasterRequest& req);

std::string cell_flags(const RasterCell& c);
long closed_form_mismatches(const std::vector<RasterCell>& cells);

void write_csv(const std::vector<RasterCell>& cells, std::ostream& os);
void write_svg(const std::vector<RasterCell>& cells, const RasterWindow& w, std::ostream& os);
void write_pgm(const std::vector<RasterCell>& cells, const RasterWindow& w, std::ostream& os);

}  // namespace lspace
