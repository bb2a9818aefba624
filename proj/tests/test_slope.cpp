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
#include "lspace/matrix.hpp"
#include "lspace/slope.hpp"

using namespace lspace;

namespace {

Rat random_rat(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  Rat r(num(g), den(g));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("slope construction is canonical") {
  CHECK(Slope(Int(10), Int(4)).str() == "5/2");
  CHECK(Slope(Int(3), Int(-6)).str() == "-1/2");
  CHECK(Slope(Int(-7), Int(0)).is_infinite());
  CHECK(Slope(Int(0), Int(5)) == Slope(0L));
  CHECK(Slope(Rat(10, 4)) == Slope(Int(5), Int(2)));
  CHECK_THROWS_AS(Slope(Int(0), Int(0)), Error);
}

TEST_CASE("slope text round trip") {
  for (const char* s : {"0", "7", "-3", "5/2", "-11/13", "inf"}) {
    CHECK(Slope::parse(s).str() == s);
  }
  CHECK(Slope::parse(" 4/6 ").str() == "2/3");
  CHECK(Slope::parse("1/0").is_infinite());
  CHECK(Slope::parse("-inf").is_infinite());
  for (const char* bad : {"", "3/0x", "a", "1/", "/2", "0/0", "1.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Slope::parse(bad), Error);
  }
  auto list = parse_slope_list("1/2,inf,-3");
  REQUIRE(list.size() == 3);
  CHECK(list[1].is_infinite());
  CHECK(list[2] == Slope(-3L));
}

TEST_CASE("floor, ceiling and fractional part") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 10000; ++i) {
    Rat x = random_rat(g);
    CAPTURE(x.get_str());
    Rat fx = frac(x);
    CHECK(Rat(floor_of(x)) + fx == x);
    CHECK(Rat(ceil_of(x)) - frac(Rat(-x)) == x);
    CHECK(fx >= 0);
    CHECK(fx < 1);
  }
  CHECK(floor_of(Rat(-1, 2)) == -1);
  CHECK(ceil_of(Rat(-1, 2)) == 0);
  CHECK(frac(Rat(-1, 3)) == Rat(2, 3));
}

TEST_CASE("least nonnegative residue") {
  std::mt19937_64 g(12);
  std::uniform_int_distribution<long> a(-1000, 1000), b(-40, 40);
  for (int i = 0; i < 10000; ++i) {
    long bb = b(g);
    if (bb == 0) continue;
    Int aa = a(g);
    Int r = mod_abs(aa, bb);
    CHECK(r >= 0);
    CHECK(r < abs(Int(bb)));
    CHECK((aa - r) % bb == 0);
  }
  CHECK(mod_abs(23, 2) == 1);
  CHECK(mod_abs(-2, -3) == 1);
  CHECK_THROWS_AS(mod_abs(1, 0), Error);
}

TEST_CASE("linear fractional action") {
  IntMatrix2 m(2, -1, 3, -2);
  CHECK(lft_apply(m, Slope::infinity()) == Slope(Int(2), Int(3)));
  CHECK(lft_apply(IntMatrix2::identity(), Slope(Int(5), Int(7))) == Slope(Int(5), Int(7)));
  CHECK(lft_apply(m, Slope(Int(2), Int(3))).is_infinite());
  CHECK(m.det() == -1);
  CHECK(m * m.inverse() == IntMatrix2::identity());
  CHECK_THROWS_AS(IntMatrix2(2, 0, 0, 2), Error);

  std::mt19937_64 g(13);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int i = 0; i < 2000; ++i) {
    // Random unimodular matrix as a product of elementary moves.
    IntMatrix2 a;
    for (int j = 0; j < 4; ++j) a = a * IntMatrix2(1, e(g), 0, 1) * IntMatrix2(1, 0, e(g), 1);
    if (i % 2) a = a * IntMatrix2(0, 1, 1, 0);
    Slope s = Slope(Rat(e(g), 1 + std::abs(e(g))));
    CHECK(lft_apply(a.inverse(), lft_apply(a, s)) == s);
    CHECK(lft_apply(a.inverse() * a, s) == s);
  }
}

TEST_CASE("circular betweenness") {
  Slope inf = Slope::infinity();
  CHECK(ccw_between(0L, 1L, inf));
  CHECK(ccw_between(0L, inf, -1L));
  CHECK_FALSE(ccw_between(0L, -1L, inf));
  CHECK(ccw_between(inf, -5L, 0L));
  CHECK_FALSE(ccw_between(1L, 1L, 2L));

  std::mt19937_64 g(14);
  for (int i = 0; i < 3000; ++i) {
    Slope a = random_rat(g), b = random_rat(g), c = random_rat(g);
    if (a == b || b == c || a == c) continue;
    // Exactly one of the two cyclic orders holds, and it is rotation invariant.
    CHECK(ccw_between(a, b, c) != ccw_between(a, c, b));
    CHECK(ccw_between(a, b, c) == ccw_between(b, c, a));
    // Orientation-reversing maps flip the order.
    IntMatrix2 neg(-1, 0, 0, 1);
    CHECK(ccw_between(lft_apply(neg, a), lft_apply(neg, b), lft_apply(neg, c)) == ccw_between(a, c, b));
  }
}
