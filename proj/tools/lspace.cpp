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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lspace/errors.hpp"
#include "lspace/kernel.hpp"
#include "lspace/oracle.hpp"
#include "lspace/raster.hpp"
#include "lspace/region.hpp"
#include "lspace/suites.hpp"
#include "lspace/tree.hpp"

using namespace lspace;

namespace {

constexpr int kExitL = 0;
constexpr int kExitNL = 1;
constexpr int kExitError = 2;

void print_diagnostics(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) std::cerr << "error: " << d.where << ": " << d.message << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SatelliteTree load_valid_tree(const std::string& path) {
  SatelliteTree t = load_tree(path);
  auto ds = validate_tree(t);
  if (!ds.empty()) {
    print_diagnostics(ds);
    fail(ErrorKind::InvalidTree, "tree '" + path + "' failed validation");
  }
  return t;
}

const char* interval_kind_name(IntervalKind k) {
  switch (k) {
    case IntervalKind::Empty: return "empty";
    case IntervalKind::Point: return "point";
    case IntervalKind::LongitudeComplement: return "longitude-complement";
    case IntervalKind::Arc: return "arc";
    case IntervalKind::FullCircle: return "full";
  }
  return "?";
}

struct QueryArgs {
  std::string tree, slope, basis = "sf";
};

int cmd_query(const QueryArgs& q) {
  SatelliteTree t = load_valid_tree(q.tree);
  SlopeAssignment a = parse_assignment(t, q.slope, parse_basis(q.basis));
  auto ds = validate_assignment(t, a);
  if (!ds.empty()) {
    print_diagnostics(ds);
    fail(ErrorKind::InvalidArgument, "slopes do not cover the free slots");
  }
  FillingResult fr = is_lspace_filling(t, a);
  RasterCell cell;
  cell.label = tree_region_label(t, a);
  // The verdict always comes from the oracle run above.
  cell.label.lspace = fr.lspace;
  std::string flags = cell_flags(cell);
  std::cout << (fr.lspace ? "L" : "NL") << "\n";
  std::cout << "root_interval " << fr.root.interval.str() << " ("
            << interval_kind_name(fr.root.interval.kind()) << ")\n";
  std::cout << "root_state " << (fr.root.is_bc ? "BC" : "BI") << "\n";
  std::cout << "companion_interval " << fr.companion_sf.str() << "\n";
  std::cout << "flags " << (flags.empty() ? "-" : flags) << "\n";
  return fr.lspace ? kExitL : kExitNL;
}

struct RegionArgs {
  std::string tree, free, window, step = "1", format = "csv", out, basis = "sf";
  std::vector<std::string> pins;
  int jobs = 1;
  bool compare = false;
};

int cmd_region(const RegionArgs& r) {
  RasterRequest req;
  req.tree = load_valid_tree(r.tree);
  req.basis = parse_basis(r.basis);
  auto refs = split(r.free, ',');
  if (refs.size() != 2) fail(ErrorKind::InvalidArgument, "--free needs exactly two slots v:i,v:j");
  req.free1 = parse_slot_ref(refs[0]);
  req.free2 = parse_slot_ref(refs[1]);
  std::string pin_text;
  for (const auto& p : r.pins) pin_text += (pin_text.empty() ? "" : ",") + p;
  if (!pin_text.empty()) req.pins = parse_assignment(req.tree, pin_text, req.basis);
  req.window = RasterWindow::parse(r.window, r.step);
  req.window.validate();
  if (r.jobs < 1) fail(ErrorKind::InvalidArgument, "--jobs must be positive");
  req.jobs = r.jobs;
  req.compare_closed_form = r.compare;
  if (r.format != "csv" && r.format != "svg" && r.format != "pgm") {
    fail(ErrorKind::InvalidArgument, "unknown format '" + r.format + "'");
  }

  auto cells = raster_region(req);

  std::ofstream file;
  if (!r.out.empty()) {
    file.open(r.out, std::ios::binary);
    if (!file) fail(ErrorKind::InvalidArgument, "cannot open '" + r.out + "' for writing");
  }
  std::ostream& os = r.out.empty() ? std::cout : file;
  if (r.format == "csv") write_csv(cells, os);
  else if (r.format == "svg") write_svg(cells, req.window, os);
  else write_pgm(cells, req.window, os);
  os.flush();
  if (!os) fail(ErrorKind::Resource, "write failed");

  long errors = std::count_if(cells.begin(), cells.end(), [](const RasterCell& c) { return c.error; });
  std::cerr << "cells " << cells.size() << ", errors " << errors << "\n";
  if (r.compare) {
    long mism = closed_form_mismatches(cells);
    std::cerr << "closed-form mismatches " << mism << "\n";
    for (const auto& c : cells) {
      if (c.closed_form_lspace && !c.error && *c.closed_form_lspace != c.label.lspace) {
        std::cerr << "  mismatch at (" << c.a1.get_str() << "," << c.a2.get_str() << "): oracle "
                  << (c.label.lspace ? "L" : "NL") << ", closed form "
                  << (*c.closed_form_lspace ? "L" : "NL") << "\n";
      }
    }
    if (mism != 0) return 1;
  }
  return 0;
}

struct CheckArgs {
  std::vector<std::string> suites;
  uint64_t seed = SuiteOptions{}.seed;
  bool inject_bug = false;
  int jobs = 1;
};

int cmd_check(const CheckArgs& c) {
  std::vector<std::string> names = c.suites.empty() ? suite_names() : c.suites;
  auto known = suite_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      fail(ErrorKind::InvalidArgument, "unknown suite '" + n + "'");
    }
  }
  SuiteOptions opts;
  opts.seed = c.seed;
  opts.inject_bug = c.inject_bug;
  if (c.jobs < 1) fail(ErrorKind::InvalidArgument, "--jobs must be positive");

  // Suites are independent; run them in batches and report in order.
  std::vector<SuiteResult> results(names.size());
  for (size_t start = 0; start < names.size(); start += c.jobs) {
    size_t end = std::min(names.size(), start + static_cast<size_t>(c.jobs));
    std::vector<std::future<SuiteResult>> fs;
    for (size_t i = start; i < end; ++i) {
      fs.push_back(std::async(c.jobs == 1 ? std::launch::deferred : std::launch::async,
                              [&, i] { return run_suite(names[i], opts); }));
    }
    for (size_t i = start; i < end; ++i) results[i] = fs[i - start].get();
  }

  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.name << " " << (r.passed ? "PASS" : "FAIL") << " checked=" << r.count
              << " skipped=" << r.skipped;
    if (!r.detail.empty()) std::cout << " : " << r.detail;
    std::cout << "\n";
    ok = ok && r.passed;
  }
  std::cout << "seed " << c.seed << (c.inject_bug ? " (injected bug)" : "") << "\n";
  return ok ? 0 : 1;
}

int cmd_validate(const std::string& path) {
  SatelliteTree t = load_tree(path);
  auto ds = validate_tree(t);
  if (!ds.empty()) {
    print_diagnostics(ds);
    return kExitError;
  }
  std::cout << "ok: " << t.vertices.size() << " vertices, " << t.edges.size() << " edges, root "
            << t.vertex(t.root).id << ", companion " << t.companion.str() << "\n";
  AlgebraicityReport ar = algebraicity_check(t);
  std::cout << "algebraic " << (ar.is_algebraic ? "yes" : "no") << "\n";
  for (const auto& [e, d] : ar.deltas) {
    std::cout << "  edge " << t.vertex(t.edges[e].from).id << "->" << t.vertex(t.edges[e].to).id
              << " delta " << d.get_str() << "\n";
  }
  return 0;
}

struct TopologyArgs {
  std::string tree;
  int genus = -1;
  long p = 0, q = 0;
  int n = 0;
};

int cmd_topology(const TopologyArgs& a) {
  TorusSatelliteSpec spec;
  if (!a.tree.empty()) {
    auto s = torus_spec_of(load_valid_tree(a.tree));
    if (!s) fail(ErrorKind::InvalidArgument, "topology needs a single-vertex tree with an unknot or L-space knot companion");
    spec = *s;
  } else {
    if (a.genus < 0 || a.n < 1) fail(ErrorKind::InvalidArgument, "give --tree or all of --genus --p --q --n");
    spec.genus = a.genus;
    spec.p = a.p;
    spec.q = a.q;
    spec.n = a.n;
  }
  spec.validate();
  TopologyReport r = topology_classify(spec);
  std::cout << "case " << r.case_label << "\n";
  std::cout << "h1_rank " << (r.h1_rank ? std::to_string(*r.h1_rank) : "-") << "\n";
  std::cout << "retract " << (r.retract ? retract_name(*r.retract) : "-") << "\n";
  if (!r.epsilon_generators.empty()) std::cout << "generators " << r.epsilon_generators << "\n";
  std::cout << "torus_case " << torus_case_name(torus_case(spec)) << "\n";
  if (spec.genus >= 1 && spec.p > 1) {
    try {
      LoCtfRegions lo = lo_ctf_regions(spec);
      std::cout << "lo_ctf " << (lo.kind == LoCtfCase::Exact ? "exact" : "lower-bound") << "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OpenCase) throw;
      std::cout << "lo_ctf open\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-space Dehn filling regions of satellite graph manifolds"};
  app.require_subcommand(1);
  uint64_t period_cap_flag = 0;
  app.add_option("--period-cap", period_cap_flag, "Largest k-period searched (overrides LSPACE_PERIOD_CAP)");

  QueryArgs qa;
  auto* query = app.add_subcommand("query", "Decide one filling");
  query->add_option("--tree", qa.tree, "Tree JSON file")->required();
  query->add_option("--slope", qa.slope, "v:i=a/b,... for every free slot")->required();
  query->add_option("--basis", qa.basis, "sf or s3");

  RegionArgs ra;
  auto* region = app.add_subcommand("region", "Rasterize a two-slot window");
  region->add_option("--tree", ra.tree, "Tree JSON file")->required();
  region->add_option("--free", ra.free, "v:i,v:j")->required();
  region->add_option("--pin", ra.pins, "v:i=a/b for the remaining slots");
  region->add_option("--window", ra.window, "x0:x1:y0:y1")->required();
  region->add_option("--step", ra.step, "Grid step, a/b");
  region->add_option("--format", ra.format, "csv, svg or pgm");
  region->add_option("--out", ra.out, "Output file (default stdout)");
  region->add_option("--jobs", ra.jobs, "Worker threads");
  region->add_option("--basis", ra.basis, "sf or s3");
  region->add_flag("--compare", ra.compare, "Report cells where the closed form disagrees");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run the property suites");
  check->add_option("--suite", ca.suites, "Suite name (repeatable; default all)");
  check->add_option("--seed", ca.seed, "Generator seed");
  check->add_flag("--inject-bug", ca.inject_bug, "Negative control");
  check->add_option("--jobs", ca.jobs, "Suites run at once");
  check->add_flag_callback("--list", [] {
    for (const auto& n : suite_names()) std::cout << n << "\n";
    std::exit(0);
  }, "List suite names");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a tree file");
  validate->add_option("--tree", validate_path, "Tree JSON file")->required();

  TopologyArgs ta;
  auto* topology = app.add_subcommand("topology", "Topology of the non-L-space region");
  topology->add_option("--tree", ta.tree, "Single-vertex tree JSON file");
  topology->add_option("--genus", ta.genus, "Companion genus (0 for the unknot)");
  topology->add_option("--p", ta.p);
  topology->add_option("--q", ta.q);
  topology->add_option("--n", ta.n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (period_cap_flag != 0) set_period_cap(period_cap_flag);
    if (*query) return cmd_query(qa);
    if (*region) return cmd_region(ra) == 0 ? 0 : kExitNL;
    if (*check) return cmd_check(ca);
    if (*validate) return cmd_validate(validate_path);
    if (*topology) return cmd_topology(ta);
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
