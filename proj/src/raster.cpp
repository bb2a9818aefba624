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

#include "lspace/raster.hpp"

#include <ostream>
#include <thread>

#include "lspace/errors.hpp"

namespace lspace {

Basis parse_basis(const std::string& text) {
  if (text == "sf") return Basis::SF;
  if (text == "s3") return Basis::S3;
  fail(ErrorKind::Parse, "unknown basis '" + text + "' (expected sf or s3)");
}

SlotRef parse_slot_ref(const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    fail(ErrorKind::Parse, "malformed slot '" + text + "' (expected vertex:slot)");
  }
  SlotRef r;
  r.vertex = text.substr(0, colon);
  std::string idx = text.substr(colon + 1);
  for (char c : idx) {
    if (c < '0' || c > '9') fail(ErrorKind::Parse, "malformed slot index in '" + text + "'");
  }
  r.slot = std::stoi(idx);
  return r;
}

Slope to_sf(const SatelliteTree& t, int v, const Slope& s, Basis basis) {
  if (basis == Basis::SF) return s;
  return psi_inv(s, t.sv(v).p * t.sv(v).q);
}

SlopeAssignment parse_assignment(const SatelliteTree& t, const std::string& text, Basis basis) {
  SlopeAssignment a;
  if (text.empty()) return a;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Parse, "malformed slope entry '" + item + "' (expected v:i=a/b)");
    SlotRef ref = parse_slot_ref(item.substr(0, eq));
    int v = t.index_of(ref.vertex);
    if (v < 0) fail(ErrorKind::InvalidArgument, "unknown vertex '" + ref.vertex + "'");
    a.set(ref.vertex, ref.slot, to_sf(t, v, Slope::parse(item.substr(eq + 1)), basis));
    start = comma + 1;
  }
  return a;
}

std::optional<TorusSatelliteSpec> torus_spec_of(const SatelliteTree& t) {
  if (t.vertices.size() != 1) return std::nullopt;
  TorusSatelliteSpec s;
  switch (t.companion.kind) {
    case CompanionKind::Unknot: s.genus = 0; break;
    case CompanionKind::PositiveLSpaceKnot: s.genus = t.companion.genus; break;
    case CompanionKind::FloerSimple: return std::nullopt;
  }
  s.p = t.sv(0).p;
  s.q = t.sv(0).q;
  s.n = t.sv(0).n;
  return s;
}

RegionLabel tree_region_label(const SatelliteTree& t, const SlopeAssignment& a, OracleCache* cache) {
  RegionLabel l;
  if (auto spec = torus_spec_of(t)) {
    l = torus_region_label_sf(*spec, InnerRegions::tuple(t, 0, a));
  } else {
    for (size_t v = 0; v < t.vertices.size(); ++v) {
      int n_inf = 0;
      for (const auto& s : InnerRegions::tuple(t, static_cast<int>(v), a)) n_inf += s.is_infinite() ? 1 : 0;
      l.in_R = l.in_R || n_inf >= 1;
      l.in_Z = l.in_Z || n_inf >= 2;
    }
    l.in_B = l.in_Z;
  }
  l.lspace = is_lspace_filling(t, a, cache).lspace;
  l.monotone = l.lspace && monotone_stratum_member(t, a, cache);
  return l;
}

namespace {

Rat parse_rat(const std::string& text) {
  Slope s = Slope::parse(text);
  if (s.is_infinite()) fail(ErrorKind::Parse, "window bound must be finite: '" + text + "'");
  return s.value();
}

}  // namespace

RasterWindow RasterWindow::parse(const std::string& window, const std::string& step) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t c = window.find(':', start);
    parts.push_back(window.substr(start, c == std::string::npos ? std::string::npos : c - start));
    if (c == std::string::npos) break;
    start = c + 1;
  }
  if (parts.size() != 4) fail(ErrorKind::Parse, "window must be x0:x1:y0:y1, got '" + window + "'");
  RasterWindow w;
  w.x0 = parse_rat(parts[0]);
  w.x1 = parse_rat(parts[1]);
  w.y0 = parse_rat(parts[2]);
  w.y1 = parse_rat(parts[3]);
  w.step = parse_rat(step);
  w.validate();
  return w;
}

void RasterWindow::validate() const {
  if (step <= 0) fail(ErrorKind::InvalidArgument, "step must be positive");
  if (x1 < x0 || y1 < y0) fail(ErrorKind::InvalidArgument, "window bounds must be ascending");
  if (Rat(columns()) * Rat(rows()) > Rat(4000000)) fail(ErrorKind::Resource, "raster has more than 4e6 cells");
}

long RasterWindow::columns() const {
  Rat c = (x1 - x0) / step;
  return floor_of(c).get_si() + 1;
}

long RasterWindow::rows() const {
  Rat c = (y1 - y0) / step;
  return floor_of(c).get_si() + 1;
}

std::vector<RasterCell> raster_region(const RasterRequest& req) {
  const RasterWindow& w = req.window;
  w.validate();
  const SatelliteTree& t = req.tree;
  int v1 = t.index_of(req.free1.vertex), v2 = t.index_of(req.free2.vertex);
  if (v1 < 0) fail(ErrorKind::InvalidArgument, "unknown vertex '" + req.free1.vertex + "'");
  if (v2 < 0) fail(ErrorKind::InvalidArgument, "unknown vertex '" + req.free2.vertex + "'");
  if (req.free1.vertex == req.free2.vertex && req.free1.slot == req.free2.slot) {
    fail(ErrorKind::InvalidArgument, "the two free coordinates must differ");
  }
  // Every other free slot must be pinned.
  SlopeAssignment probe = req.pins;
  probe.set(req.free1.vertex, req.free1.slot, Slope(0));
  probe.set(req.free2.vertex, req.free2.slot, Slope(0));
  auto diags = validate_assignment(t, probe);
  if (!diags.empty()) fail(ErrorKind::InvalidArgument, diags.front().where + ": " + diags.front().message);

  std::optional<TorusSatelliteSpec> spec;
  if (req.compare_closed_form) {
    spec = torus_spec_of(t);
    if (!spec) fail(ErrorKind::InvalidArgument, "closed-form comparison needs a single-vertex torus-link tree");
  }

  const long nx = w.columns(), ny = w.rows();
  std::vector<RasterCell> cells(static_cast<size_t>(nx * ny));
  auto work = [&](size_t begin, size_t end) {
    OracleCache cache;
    for (size_t idx = begin; idx < end; ++idx) {
      long i = static_cast<long>(idx) / ny, j = static_cast<long>(idx) % ny;
      RasterCell& c = cells[idx];
      c.a1 = w.x0 + w.step * i;
      c.a2 = w.y0 + w.step * j;
      try {
        SlopeAssignment a = req.pins;
        a.set(req.free1.vertex, req.free1.slot, to_sf(t, v1, Slope(c.a1), req.basis));
        a.set(req.free2.vertex, req.free2.slot, to_sf(t, v2, Slope(c.a2), req.basis));
        c.label = tree_region_label(t, a, &cache);
        if (spec) c.closed_form_lspace = torus_lspace_sf(*spec, InnerRegions::tuple(t, 0, a));
      } catch (const Error& e) {
        c.error = true;
        c.error_text = std::string(error_kind_name(e.kind())) + ": " + e.what();
      }
    }
  };

  size_t total = cells.size();
  size_t jobs = static_cast<size_t>(std::max(1, req.jobs));
  if (jobs > total) jobs = std::max<size_t>(1, total);
  if (jobs == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (total + jobs - 1) / jobs;
    for (size_t k = 0; k < jobs; ++k) {
      size_t b = k * chunk, e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return cells;
}

std::string cell_flags(const RasterCell& c) {
  if (c.error) return "";
  const RegionLabel& l = c.label;
  std::vector<const char*> f;
  if (l.in_R) f.push_back("R");
  if (l.in_Z) f.push_back("Z");
  if (l.in_B) f.push_back("B");
  if (l.in_L_minus || l.in_L_plus) f.push_back("LSTAR");
  if (l.monotone.value_or(false)) f.push_back("MONO");
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += '|';
    out += f[i];
  }
  return out;
}

long closed_form_mismatches(const std::vector<RasterCell>& cells) {
  long n = 0;
  for (const auto& c : cells) {
    if (c.error || (c.closed_form_lspace && *c.closed_form_lspace != c.label.lspace)) ++n;
  }
  return n;
}

namespace {

std::string rat_str(const Rat& r) { return Slope(r).str(); }

const char* cell_label(const RasterCell& c) {
  if (c.error) return "ERR";
  return c.label.lspace ? "L" : "NL";
}

enum class Shade { NL, LMinus, LPlus, LOther, Reducible, Exceptional, Error };

Shade shade_of(const RasterCell& c) {
  if (c.error) return Shade::Error;
  const RegionLabel& l = c.label;
  if (l.in_Z) return Shade::Exceptional;
  if (l.in_R) return Shade::Reducible;
  if (!l.lspace) return Shade::NL;
  if (l.in_orbit_L_minus) return Shade::LMinus;
  if (l.in_orbit_L_plus) return Shade::LPlus;
  return Shade::LOther;
}

const char* svg_fill(Shade s) {
  switch (s) {
    case Shade::NL: return "#ffffff";
    case Shade::LMinus: return "#595959";
    case Shade::LPlus: return "#bfbfbf";
    case Shade::LOther: return "#8c8c8c";
    case Shade::Reducible: return "#000000";
    case Shade::Exceptional: return "#000000";
    case Shade::Error: return "#d62728";
  }
  return "#ffffff";
}

int pgm_value(Shade s) {
  switch (s) {
    case Shade::NL: return 255;
    case Shade::LMinus: return 89;
    case Shade::LPlus: return 191;
    case Shade::LOther: return 140;
    case Shade::Reducible: return 0;
    case Shade::Exceptional: return 32;
    case Shade::Error: return 220;
  }
  return 255;
}

}  // namespace

void write_csv(const std::vector<RasterCell>& cells, std::ostream& os) {
  os << "a1,a2,label,flags\n";
  for (const auto& c : cells) {
    os << rat_str(c.a1) << ',' << rat_str(c.a2) << ',' << cell_label(c) << ',' << cell_flags(c) << '\n';
  }
}

void write_svg(const std::vector<RasterCell>& cells, const RasterWindow& w, std::ostream& os) {
  const long nx = w.columns(), ny = w.rows();
  const int px = 8;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nx * px << "\" height=\"" << ny * px
     << "\" viewBox=\"0 0 " << nx * px << ' ' << ny * px << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (size_t idx = 0; idx < cells.size(); ++idx) {
    const RasterCell& c = cells[idx];
    long i = static_cast<long>(idx) / ny, j = static_cast<long>(idx) % ny;
    long x = i * px, y = (ny - 1 - j) * px;
    Shade s = shade_of(c);
    if (s == Shade::NL && !c.label.in_B) continue;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << px << "\" height=\"" << px << "\" fill=\""
       << svg_fill(s) << "\"/>\n";
    if (s == Shade::Exceptional) {
      os << "<circle cx=\"" << x + px / 2 << "\" cy=\"" << y + px / 2 << "\" r=\"2\" fill=\"#ffffff\"/>\n";
    } else if (c.label.in_B && !c.error) {
      os << "<circle cx=\"" << x + px / 2 << "\" cy=\"" << y + px / 2 << "\" r=\"1\" fill=\"#000000\"/>\n";
    }
  }
  os << "</svg>\n";
}

void write_pgm(const std::vector<RasterCell>& cells, const RasterWindow& w, std::ostream& os) {
  const long nx = w.columns(), ny = w.rows();
  os << "P2\n" << nx << ' ' << ny << "\n255\n";
  for (long row = 0; row < ny; ++row) {
    long j = ny - 1 - row;
    for (long i = 0; i < nx; ++i) {
      if (i) os << ' ';
      os << pgm_value(shade_of(cells[static_cast<size_t>(i * ny + j)]));
    }
    os << '\n';
  }
}

}  // namespace lspace
