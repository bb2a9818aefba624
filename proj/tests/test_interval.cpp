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
#include <set>

#include "lspace/interval.hpp"
#include "lspace/suites.hpp"

using namespace lspace;

namespace {

const Slope kInf = Slope::infinity();

Slope S(const char* s) { return Slope::parse(s); }

// Endpoints of both intervals, points between consecutive ones, and inf.
std::vector<Slope> probes(const SlopeInterval& a, const SlopeInterval& b) {
  std::set<Rat> pts;
  for (const auto* i : {&a, &b}) {
    for (const auto* s : {&i->lo(), &i->hi()}) {
      if (s->is_finite()) pts.insert(s->value());
    }
  }
  std::vector<Slope> out{kInf};
  if (pts.empty()) {
    out.push_back(Slope(0L));
    return out;
  }
  out.push_back(Slope(Rat(*pts.begin() - 1)));
  out.push_back(Slope(Rat(*pts.rbegin() + 1)));
  Rat prev;
  bool first = true;
  for (const auto& p : pts) {
    out.push_back(Slope(p));
    if (!first) out.push_back(Slope(Rat((prev + p) / 2)));
    prev = p;
    first = false;
  }
  return out;
}

}  // namespace

TEST_CASE("interior") {
  CHECK(interval_interior(SlopeInterval::point(S("3/2"))).is_empty());
  CHECK(interval_interior(SlopeInterval::longitude_complement(0L)) == SlopeInterval::longitude_complement(0L));
  CHECK(interval_interior(SlopeInterval::arc(S("1/2"), S("3/5"))) ==
        SlopeInterval::arc(S("1/2"), S("3/5"), false, false));
  CHECK(interval_interior(SlopeInterval::full()) == SlopeInterval::full());
}

TEST_CASE("complement") {
  CHECK(interval_complement(SlopeInterval::arc(41L, 46L, true, false)) ==
        SlopeInterval::arc(46L, 41L, true, false));
  CHECK(interval_complement(SlopeInterval::longitude_complement(S("2/7"))) == SlopeInterval::point(S("2/7")));
  CHECK(interval_complement(SlopeInterval::empty()) == SlopeInterval::full());
  CHECK(interval_complement(SlopeInterval::arc(0L, 1L)) == SlopeInterval::arc(1L, 0L, false, false));
}

TEST_CASE("closed constructor") {
  CHECK(SlopeInterval::closed(3L, 3L) == SlopeInterval::longitude_complement(3L));
  CHECK(SlopeInterval::closed(1L, 3L).kind() == IntervalKind::Arc);
  CHECK_THROWS(SlopeInterval::arc(2L, 2L));
}

TEST_CASE("membership") {
  CHECK(contains(SlopeInterval::arc(0L, -1L), kInf));
  CHECK_FALSE(contains(SlopeInterval::arc(0L, -1L), S("-1/2")));
  CHECK(contains(SlopeInterval::point(S("1/2")), S("1/2")));
  CHECK_FALSE(contains(SlopeInterval::longitude_complement(S("1/2")), S("1/2")));
  CHECK(contains(SlopeInterval::longitude_complement(S("1/2")), kInf));
  CHECK_FALSE(contains(SlopeInterval::arc(0L, 1L, false, true), 0L));
  CHECK(contains(SlopeInterval::arc(0L, 1L, false, true), 1L));
}

TEST_CASE("covering the circle") {
  Slope l = S("5/3");
  CHECK(covers_circle(SlopeInterval::longitude_complement(l), SlopeInterval::arc(1L, 2L)));
  CHECK_FALSE(covers_circle(SlopeInterval::arc(0L, 1L, false, false), SlopeInterval::arc(1L, 0L, false, false)));
  CHECK(covers_circle(SlopeInterval::full(), SlopeInterval::empty()));
  CHECK(covers_circle(SlopeInterval::arc(0L, 1L, true, false), SlopeInterval::arc(1L, 0L, true, false)));
}

TEST_CASE("interval laws on random intervals") {
  std::mt19937_64 g(21);
  for (int i = 0; i < 10000; ++i) {
    SlopeInterval a = random_interval(g), b = random_interval(g);
    CAPTURE(a.str());
    CAPTURE(b.str());
    SlopeInterval ca = interval_complement(a);
    CHECK(interval_complement(ca) == a);
    CHECK(covers_circle(a, ca));
    CHECK_FALSE(intersects(a, ca));

    bool cover = true, meet = false, sub = true;
    for (const auto& s : probes(a, b)) {
      bool in_a = contains(a, s), in_b = contains(b, s);
      CHECK(contains(ca, s) != in_a);
      cover = cover && (in_a || in_b);
      meet = meet || (in_a && in_b);
      sub = sub && (!in_a || in_b);
    }
    CHECK(covers_circle(a, b) == cover);
    CHECK(intersects(a, b) == meet);
    CHECK(is_subset(a, b) == sub);
  }
}

TEST_CASE("image under a linear fractional map") {
  std::mt19937_64 g(22);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int i = 0; i < 2000; ++i) {
    IntMatrix2 m;
    for (int j = 0; j < 3; ++j) m = m * IntMatrix2(1, e(g), 0, 1) * IntMatrix2(1, 0, e(g), 1);
    if (i % 3 == 0) m = m * IntMatrix2(-1, 0, 0, 1);
    SlopeInterval a = random_interval(g);
    SlopeInterval img = map_interval(m, a);
    CAPTURE(a.str());
    CAPTURE(m.str());
    CHECK(img.kind() == a.kind());
    for (const auto& s : probes(a, a)) CHECK(contains(img, lft_apply(m, s)) == contains(a, s));
  }
}
