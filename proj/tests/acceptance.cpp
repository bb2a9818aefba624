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

// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lspace/errors.hpp"
#include "lspace/raster.hpp"
#include "lspace/region.hpp"
#include "lspace/seifert.hpp"
#include "lspace/suites.hpp"

using namespace lspace;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RasterRequest cable_window(int jobs) {
  RasterRequest req;
  req.tree = torus_cable_g5_tree();
  req.free1 = {"v1", 1};
  req.free2 = {"v1", 2};
  req.basis = Basis::S3;
  req.window = RasterWindow::parse("20:70:20:70", "1/2");
  req.jobs = jobs;
  req.compare_closed_form = true;
  return req;
}

std::string render(const std::vector<RasterCell>& cells, const RasterWindow& w) {
  std::ostringstream os;
  write_csv(cells, os);
  write_svg(cells, w, os);
  write_pgm(cells, w, os);
  return os.str();
}

std::string first_render;  // filled by criterion 1, reused by criterion 9

Outcome figure_window() {
  RasterRequest req = cable_window(1);
  auto cells = raster_region(req);
  first_render = render(cells, req.window);
  long mism = closed_form_mismatches(cells);
  TorusSatelliteSpec spec{5, 2, 23, 2};
  struct Point {
    long a1, a2;
    bool lspace;
  } points[] = {{47, 47, true}, {41, 45, true}, {46, 10, true}, {46, 46, false}, {40, 40, false}};
  int bad_points = 0;
  for (const auto& p : points) {
    SlopeAssignment a;
    a.set("v1", 1, psi_inv(Slope(p.a1), 46));
    a.set("v1", 2, psi_inv(Slope(p.a2), 46));
    bool oracle = is_lspace_filling(req.tree, a).lspace;
    bool closed = torus_region_label(spec, {Slope(p.a1), Slope(p.a2)}).lspace;
    if (oracle != p.lspace || closed != p.lspace) ++bad_points;
  }
  std::ostringstream d;
  d << cells.size() << " cells, " << mism << " mismatches, " << bad_points << " bad named points";
  return {cells.size() == 101u * 101u && mism == 0 && bad_points == 0, d.str()};
}

Outcome cable_recovery() {
  std::mt19937_64 g(20260101);
  int wide = 0, narrow = 0, bad = 0;
  while (wide < 20 || narrow < 20) {
    int genus = 1 + static_cast<int>(g() % 8);
    long p = 1 + static_cast<long>(g() % 6);
    long q = 1 + static_cast<long>(g() % 80);
    TorusSatelliteSpec spec{genus, p, q, 1};
    if (gcd(spec.p, spec.q) != 1) continue;
    bool is_wide = spec.N() * spec.p <= spec.q;
    if (is_wide ? wide >= 20 : (p == 1 || narrow >= 20)) continue;
    (is_wide ? wide : narrow) += 1;
    SatelliteTree t = spec.tree();
    FiberIntervalResult r = root_slot_interval(t, SlopeAssignment(), 1);
    // psi as a matrix: y -> (pq y + 1) / y.
    SlopeInterval s3 = map_interval(IntMatrix2(spec.pq(), 1, 1, 0), r.interval);
    SlopeInterval expect = is_wide ? SlopeInterval::arc(Slope(n_pq(spec)), Slope::infinity())
                                   : SlopeInterval::point(Slope::infinity());
    if (s3 != expect) ++bad;
  }
  return {bad == 0, std::to_string(wide) + " wide and " + std::to_string(narrow) + " narrow cables, " +
                        std::to_string(bad) + " wrong"};
}

Outcome trefoil_fiber() {
  FiberIntervalResult r = fiber_exterior_interval({{Slope::parse("-1/2"), Slope::parse("2/3")}, {}});
  SlopeInterval s3 = map_interval(IntMatrix2(6, 1, 1, 0), r.interval);
  bool ok = s3 == SlopeInterval::arc(1L, Slope::infinity()) && contains(s3, Slope::infinity());
  return {ok, "SF " + r.interval.str() + " -> S3 " + s3.str()};
}

Outcome floor_sum_sweep() {
  long checked = 0, bad = 0;
  for (long p = 2; p <= 20; ++p) {
    for (long q = 2; q <= 20; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      auto [ps, qs] = pstar_qstar(p, q);
      for (long k = 1; k <= 500; ++k) {
        Int lhs_num = 1 + floor_div(qs * k, p) + k / (p + q);
        // lhs_num / k >= p* / q
        if (lhs_num * q < ps * k) ++bad;
        ++checked;
      }
    }
  }
  return {bad == 0 && checked > 0, std::to_string(checked) + " (p,q,k) triples, " + std::to_string(bad) + " violations"};
}

Outcome from_suites(std::initializer_list<const char*> names, long min_count) {
  bool ok = true;
  std::string d;
  for (const char* n : names) {
    SuiteResult r = run_suite(n);
    ok = ok && r.passed && r.count >= min_count;
    if (!d.empty()) d += "; ";
    d += std::string(n) + " " + (r.passed ? "ok" : "FAILED") + " " + std::to_string(r.count) + " checks";
    if (!r.detail.empty()) d += " (" + r.detail + ")";
  }
  return {ok, d};
}

Outcome topology() {
  struct Case {
    TorusSatelliteSpec spec;
    const char* label;
    long h1;
  } cases[] = {{{5, 2, 23, 2}, "ii.a", 1}, {{5, 1, 8, 4}, "i.b", 5}, {{1, 2, 1, 3}, "i.a", 0}};
  std::string d;
  bool ok = true;
  for (const auto& c : cases) {
    TopologyReport r = topology_classify(c.spec);
    ok = ok && r.case_label == c.label && r.h1_rank == c.h1;
    d += (d.empty() ? "" : ", ") + r.case_label;
  }
  TopologyReport ia = topology_classify(cases[2].spec);
  ok = ok && ia.retract == Retract::Lattice;
  TopologyReport ii = topology_classify(cases[0].spec);
  ok = ok && ii.retract == Retract::Torus;
  return {ok, d};
}

Outcome determinism() {
  if (first_render.empty()) return {false, "criterion 1 produced no output"};
  RasterRequest req = cable_window(1);
  std::string again = render(raster_region(req), req.window);
  req.jobs = 8;
  std::string eight = render(raster_region(req), req.window);
  bool ok = again == first_render && eight == first_render;
  return {ok, std::to_string(first_render.size()) + " bytes, repeat " + (again == first_render ? "same" : "differs") +
                  ", 8 jobs " + (eight == first_render ? "same" : "differs")};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cable window reproduction", figure_window},
      {"cable recovery", cable_recovery},
      {"trefoil as fiber exterior", trefoil_fiber},
      {"floor-sum sweep", floor_sum_sweep},
      {"structure cases", [] { return from_suites({"structure-cases"}, 1000); }},
      {"inner approximation containment", [] { return from_suites({"inner-containment"}, 2000); }},
      {"symmetries", [] { return from_suites({"lattice-invariance", "mirror-symmetry", "interval-laws", "fiber-symmetries"}, 1); }},
      {"topology classifier", topology},
      {"raster determinism", determinism},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
         << o.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
