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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lspace/errors.hpp"
#include "lspace/region.hpp"
#include "lspace/suites.hpp"

using namespace lspace;

namespace {

Slope S(const char* s) { return Slope::parse(s); }
const Slope kInf = Slope::infinity();

TorusSatelliteSpec spec(int genus, long p, long q, int n) {
  TorusSatelliteSpec s;
  s.genus = genus;
  s.p = p;
  s.q = q;
  s.n = n;
  return s;
}

std::vector<Slope> alpha(long a1, long a2) { return {Slope(a1), Slope(a2)}; }

SlopeAssignment as_assignment(const std::vector<Slope>& y) {
  SlopeAssignment a;
  for (size_t i = 0; i < y.size(); ++i) a.set("v1", static_cast<int>(i) + 1, y[i]);
  return a;
}

}  // namespace

TEST_CASE("basis change") {
  CHECK(psi(kInf, 46) == Slope(46L));
  CHECK(psi(1L, 46) == Slope(47L));
  CHECK(psi(-1L, 46) == Slope(45L));
  CHECK(psi(S("-1/6"), 6) == Slope(0L));
  CHECK(psi(0L, 6).is_infinite());
  std::mt19937_64 g(71);
  for (int i = 0; i < 2000; ++i) {
    Slope y = random_slope(g, 40, 9, 10);
    CHECK(psi_inv(psi(y, 46), 46) == y);
    CHECK(psi(psi_inv(y, -15), -15) == y);
  }
  // Nonzero lattice points land within distance one of pq.
  for (long l = -30; l <= 30; ++l) {
    if (l == 0) continue;
    Rat a = psi(l, 46).value();
    CHECK(a >= 45);
    CHECK(a <= 47);
    CHECK(a != 46);
  }
}

TEST_CASE("N_pq") {
  CHECK(n_pq(spec(5, 2, 23, 2)) == 41);
  CHECK(n_pq(spec(0, 2, 3, 1)) == 1);
  for (int g = 1; g < 6; ++g) CHECK(n_pq(spec(g, 1, 9, 1)) == 2 * g - 1);
}

TEST_CASE("genus five cable labels") {
  TorusSatelliteSpec s = spec(5, 2, 23, 2);
  RegionLabel l = torus_region_label(s, alpha(46, 10));
  CHECK(l.lspace);
  CHECK(l.in_R);
  CHECK_FALSE(l.in_Z);
  l = torus_region_label(s, alpha(92, 23));
  CHECK(l.in_B);
  CHECK_FALSE(l.lspace);
  l = torus_region_label(s, alpha(46, 46));
  CHECK(l.in_Z);
  CHECK(l.in_B);
  CHECK_FALSE(l.lspace);
  l = torus_region_label(s, alpha(47, 47));
  CHECK(l.lspace);
  CHECK(l.in_L_plus);
  CHECK(l.in_lambda_orbit_of_Lstar);
  l = torus_region_label(s, alpha(41, 45));
  CHECK(l.lspace);
  CHECK(l.in_L_minus);
  CHECK_FALSE(torus_region_label(s, alpha(40, 40)).lspace);
}

TEST_CASE("trefoil lattice case") {
  TorusSatelliteSpec s = spec(1, 2, 1, 2);
  CHECK(torus_case(s) == TorusCase::LatticeOnly);
  CHECK(torus_lspace_sf(s, {1L, -1L}));
  CHECK_FALSE(torus_lspace_sf(s, {S("1/2"), S("-1/2")}));
  CHECK_FALSE(torus_lspace_sf(s, {kInf, 0L}));
}

TEST_CASE("closed form matches the oracle") {
  std::mt19937_64 g(72);
  std::uniform_int_distribution<int> gen(0, 3), pd(1, 4), qd(-12, 30), nd(1, 3);
  int compared = 0;
  for (int i = 0; i < 1500; ++i) {
    TorusSatelliteSpec s = spec(gen(g), pd(g), qd(g), nd(g));
    if (s.q == 0 || gcd(s.p, s.q) != 1) continue;
    if (s.genus >= 1 && s.q < 0) continue;
    std::vector<Slope> y;
    for (int j = 0; j < s.n; ++j) y.push_back(random_slope(g, 12, 6, 8));
    bool closed, oracle;
    try {
      closed = torus_lspace_sf(s, y);
      oracle = is_lspace_filling(s.tree(), as_assignment(y)).lspace;
    } catch (const Error&) {
      continue;
    }
    CAPTURE(s.genus);
    CAPTURE(s.p.get_str());
    CAPTURE(s.q.get_str());
    CHECK(closed == oracle);
    ++compared;
  }
  CHECK(compared > 700);
}

TEST_CASE("lattice invariance of labels") {
  std::mt19937_64 g(73);
  std::uniform_int_distribution<long> sh(-4, 4);
  const TorusSatelliteSpec specs[] = {spec(5, 2, 23, 2), spec(0, 2, 5, 3), spec(2, 1, 9, 2), spec(1, 3, 2, 2)};
  for (const auto& s : specs) {
    for (int i = 0; i < 200; ++i) {
      std::vector<Slope> y;
      for (int j = 0; j < s.n; ++j) y.push_back(random_slope(g, 20, 6, 10));
      std::vector<Slope> z = y;
      long total = 0;
      for (int j = 0; j + 1 < s.n; ++j) {
        long l = sh(g);
        total += l;
        if (z[j].is_finite()) z[j] = Slope(Rat(z[j].value() + l));
        else total -= l;
      }
      if (z.back().is_finite()) z.back() = Slope(Rat(z.back().value() - total));
      else continue;
      RegionLabel a = torus_region_label_sf(s, y), b = torus_region_label_sf(s, z);
      CHECK(a.lspace == b.lspace);
      CHECK(a.in_R == b.in_R);
      CHECK(a.in_Z == b.in_Z);
      CHECK(a.in_B == b.in_B);
      CHECK(a.in_lambda_orbit_of_Lstar == b.in_lambda_orbit_of_Lstar);
    }
  }
}

TEST_CASE("exceptional slopes are never fillings for nontrivial companions") {
  std::mt19937_64 g(74);
  for (int i = 0; i < 500; ++i) {
    TorusSatelliteSpec s = spec(1 + static_cast<int>(g() % 4), 1 + g() % 3, 1 + g() % 40, 2 + static_cast<int>(g() % 2));
    if (gcd(s.p, s.q) != 1) continue;
    std::vector<Slope> y(s.n, kInf);
    if (s.n > 2) y[0] = random_slope(g, 10, 4, 3);
    RegionLabel l = torus_region_label_sf(s, y);
    CHECK(l.in_Z);
    CHECK(l.in_B);
    CHECK_FALSE(l.lspace);
  }
}

TEST_CASE("cable recovery") {
  // n = 1: the region is [N_pq, inf] when 2g - 1 <= q/p, and {inf} otherwise.
  const TorusSatelliteSpec wide = spec(2, 2, 7, 1), narrow = spec(5, 2, 7, 1);
  for (long a = 0; a <= 40; ++a) {
    CHECK(torus_region_label(wide, {Slope(a)}).lspace == (a >= n_pq(wide)));
    CHECK_FALSE(torus_region_label(narrow, {Slope(a)}).lspace);
  }
  CHECK(torus_region_label(wide, {kInf}).lspace);
  CHECK(torus_region_label(narrow, {kInf}).lspace);
  CHECK_FALSE(torus_region_label(narrow, {S("29/2")}).lspace);
}

TEST_CASE("inner regions") {
  SatelliteTree single = SatelliteTree::single_vertex(2, 3, 2, CompanionKnot::unknot());
  InnerRegions r = inner_min_regions(single);
  REQUIRE(r.vertices.size() == 1);
  CHECK(r.vertices[0].m_plus == 0);
  CHECK(r.vertices[0].m_minus == 0);

  // Hypothesis: q_r must exceed 2g - 1 for a nontrivial companion.
  SatelliteTree low = SatelliteTree::single_vertex(1, 3, 2, CompanionKnot::lspace_knot(3));
  CHECK_THROWS_AS(inner_min_regions(low), Error);
  SatelliteTree edge = SatelliteTree::single_vertex(1, 5, 2, CompanionKnot::lspace_knot(3));
  CHECK_THROWS_AS(inner_min_regions(edge), Error);
  InnerRegions fb = inner_min_regions(edge, InnerVariant::Auto, true);
  CHECK(fb.drop_root_minus);

  for (const SatelliteTree& t : {algebraic_pair_tree(), iterated_negative_tree(), torus_cable_g5_tree()}) {
    InnerRegions inner = inner_min_regions(t);
    std::mt19937_64 g(75);
    int inside = 0;
    for (int i = 0; i < 4000 && inside < 300; ++i) {
      SlopeAssignment a = random_assignment(t, g, 15);
      if (!inner.contains(t, a)) continue;
      ++inside;
      CHECK(is_lspace_filling(t, a).lspace);
      CHECK(monotone_stratum_member(t, a));
    }
    CHECK(inside > 50);
  }
}

TEST_CASE("monotone stratum excludes points past an asymptote") {
  SatelliteTree t = iterated_negative_tree();
  SlopeAssignment a;
  a.set("v1", 2, Slope::parse("1/3"));
  a.set("v2", 1, -3L);
  a.set("v2", 2, Slope::parse("-8/5"));
  // An L-space filling whose child interval does not reach inf on the
  // parent side after splicing.
  CHECK(is_lspace_filling(t, a).lspace);
  CHECK_FALSE(monotone_stratum_member(t, a));
  bool some_vertex_fails = false;
  for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
    if (!monotone_at(t, v, a)) some_vertex_fails = true;
  }
  CHECK(some_vertex_fails);
  // Off the L-space locus the stratum is empty by definition.
  std::mt19937_64 g(11);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    SlopeAssignment b = random_assignment(t, g);
    if (is_lspace_filling(t, b).lspace) continue;
    ++seen;
    CHECK_FALSE(monotone_stratum_member(t, b));
  }
  CHECK(seen > 0);
  SatelliteTree empty_t = SatelliteTree::single_vertex(2, 3, 3, CompanionKnot::unknot());
  SlopeAssignment e;
  e.set("v1", 1, kInf);
  e.set("v1", 2, kInf);
  e.set("v1", 3, 0L);
  CHECK_FALSE(monotone_at(empty_t, 0, e));
}

TEST_CASE("topology classifier") {
  TopologyReport r = topology_classify(spec(5, 2, 23, 2));
  CHECK(r.case_label == "ii.a");
  REQUIRE(r.retract);
  CHECK(*r.retract == Retract::Torus);
  CHECK(r.h1_rank == 1);

  r = topology_classify(spec(5, 1, 8, 4));
  CHECK(r.case_label == "i.b");
  CHECK(r.h1_rank == 5);
  CHECK_FALSE(r.epsilon_generators.empty());

  r = topology_classify(spec(1, 2, 1, 3));
  CHECK(r.case_label == "i.a");
  REQUIRE(r.retract);
  CHECK(*r.retract == Retract::Lattice);

  CHECK(topology_classify(spec(0, 2, 3, 2)).case_label == "ii.b");
  CHECK_THROWS_AS(topology_classify(spec(1, 2, -3, 2)), Error);
}

TEST_CASE("LO and CTF regions") {
  TorusSatelliteSpec s = spec(5, 2, 23, 2);
  LoCtfRegions r = lo_ctf_regions(s);
  CHECK(r.kind == LoCtfCase::LowerBound);
  CHECK_FALSE(torus_region_label(s, alpha(40, 40)).lspace);
  CHECK(in_rectangle_difference_orbit(s, {psi_inv(40L, 46), psi_inv(40L, 46)}));
  CHECK_FALSE(r.lo_lower_bound(alpha(40, 40)));
  CHECK_FALSE(r.f_region(alpha(46, 46)));
  CHECK(r.lo_lower_bound(alpha(30, 30)));

  TorusSatelliteSpec big = spec(20, 2, 23, 2);
  LoCtfRegions e = lo_ctf_regions(big);
  CHECK(e.kind == LoCtfCase::Exact);
  std::mt19937_64 g(76);
  for (int i = 0; i < 500; ++i) {
    std::vector<Slope> a{random_slope(g, 90, 3, 8), random_slope(g, 90, 3, 8)};
    RegionLabel l = torus_region_label(big, a);
    CHECK(e.f_region(a) == (!l.lspace && !l.in_R));
    CHECK(e.lo_lower_bound(a) == !l.lspace);
  }
  CHECK_THROWS_AS(lo_ctf_regions(spec(6, 2, 21, 2)), Error);
  CHECK_THROWS_AS(lo_ctf_regions(spec(0, 2, 3, 2)), Error);
}
