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
#include "lspace/suites.hpp"
#include "lspace/tree.hpp"

using namespace lspace;

namespace {

SatelliteTree parse(const std::string& text) { return tree_from_json_text(text); }

const char* kPair = R"({
  "companion": {"kind": "unknot"},
  "vertices": [{"id": "a", "p": 2, "q": 3, "n": 2}, {"id": "b", "p": 2, "q": 13, "n": 2}],
  "root": "a",
  "edges": [{"from": "b", "to": "a", "j": 1}]
})";

}  // namespace

TEST_CASE("json round trip") {
  SatelliteTree t = parse(kPair);
  REQUIRE(t.vertices.size() == 2);
  CHECK(t.vertex(t.root).id == "a");
  CHECK(t.J(0) == std::vector<int>{1});
  CHECK(t.I(0) == std::vector<int>{2});
  CHECK(t.I(1) == std::vector<int>{1, 2});
  CHECK(t.outgoing(0) == -1);
  CHECK(t.outgoing(1) == 0);
  CHECK(t.subtree(0) == std::vector<int>{1, 0});
  SatelliteTree back = parse(tree_to_json_text(t));
  CHECK(tree_to_json_text(back) == tree_to_json_text(t));

  SatelliteTree k = parse(R"({"companion": {"kind": "lspace_knot", "genus": 3},
                              "vertices": [{"id": "v", "p": 1, "q": 8, "n": 4}]})");
  CHECK(k.companion.kind == CompanionKind::PositiveLSpaceKnot);
  CHECK(k.companion.s3_interval() == SlopeInterval::arc(5L, Slope::infinity()));
  CHECK(CompanionKnot::unknot().s3_interval() == SlopeInterval::longitude_complement(0L));
}

TEST_CASE("malformed json is a parse error") {
  for (const char* bad : {"{", "[]", R"({"vertices": 3})", R"({"vertices": [{"id": "a", "p": "x", "q": 1}]})",
                          R"({"companion": {"kind": "mystery"}, "vertices": [{"id": "a", "p": 1, "q": 1}]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad), Error);
  }
}

TEST_CASE("validation") {
  CHECK(validate_tree(SatelliteTree::single_vertex(2, 3, 1, CompanionKnot::unknot())).empty());
  CHECK(validate_tree(parse(kPair)).empty());

  auto bad_exc = parse(R"({"vertices": [{"id": "a", "p": 1, "q": 3}, {"id": "b", "p": 2, "q": 5}],
                            "root": "a", "edges": [{"from": "b", "to": "a", "j": -1}]})");
  auto ds = validate_tree(bad_exc);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].message.find("p > 1") != std::string::npos);

  // q = 0 and non-coprime data are rejected at load or validation time.
  bool rejected = false;
  try {
    rejected = !validate_tree(parse(R"({"vertices": [{"id": "a", "p": 2, "q": 0}]})")).empty();
  } catch (const Error&) {
    rejected = true;
  }
  CHECK(rejected);
  rejected = false;
  try {
    rejected = !validate_tree(parse(R"({"vertices": [{"id": "a", "p": 4, "q": 6}]})")).empty();
  } catch (const Error&) {
    rejected = true;
  }
  CHECK(rejected);

  CHECK_FALSE(validate_tree(parse(R"({"vertices": [{"id": "a", "p": 2, "q": 3, "n": 1},
                                                   {"id": "b", "p": 2, "q": 5}, {"id": "c", "p": 2, "q": 7}],
                                      "root": "a", "edges": [{"from": "b", "to": "a", "j": 1},
                                                             {"from": "c", "to": "a", "j": 1}]})")).empty());
  CHECK_FALSE(validate_tree(parse(R"({"vertices": [{"id": "a", "p": 2, "q": 3}, {"id": "b", "p": 2, "q": 5}],
                                      "root": "a", "edges": []})")).empty());
  CHECK_FALSE(validate_tree(parse(R"({"vertices": [{"id": "a", "p": 2, "q": 3}, {"id": "b", "p": 2, "q": 5}],
                                      "root": "a", "edges": [{"from": "b", "to": "a", "j": 2}]})")).empty());
}

TEST_CASE("assignment coverage") {
  SatelliteTree t = parse(kPair);
  SlopeAssignment a;
  a.set("a", 2, Slope(1L));
  a.set("b", 1, Slope(0L));
  CHECK_FALSE(validate_assignment(t, a).empty());
  a.set("b", 2, Slope(3L));
  CHECK(validate_assignment(t, a).empty());
  a.set("a", 1, Slope(3L));
  CHECK_FALSE(validate_assignment(t, a).empty());
}

TEST_CASE("algebraicity") {
  auto r = algebraicity_check(parse(kPair));
  CHECK(r.is_algebraic);
  CHECK(r.deltas.at(0) == 1);
  auto swapped = parse(R"({"vertices": [{"id": "a", "p": 2, "q": 13, "n": 2}, {"id": "b", "p": 2, "q": 3, "n": 2}],
                           "root": "a", "edges": [{"from": "b", "to": "a", "j": 1}]})");
  r = algebraicity_check(swapped);
  CHECK_FALSE(r.is_algebraic);
  CHECK(r.deltas.at(0) == 3 - 2 * 2 * 13);
  CHECK(algebraicity_check(SatelliteTree::single_vertex(3, 7, 3, CompanionKnot::unknot())).is_algebraic);
  CHECK_FALSE(algebraicity_check(SatelliteTree::single_vertex(3, -7, 3, CompanionKnot::unknot())).is_algebraic);
}

TEST_CASE("splice matrices") {
  CHECK(smooth_splice_matrix(SeifertVertex::make(2, 3, 1)) == IntMatrix2(2, -1, 3, -2));
  CHECK(smooth_splice_matrix(SeifertVertex::make(1, 5, 1)) == IntMatrix2(1, 0, 5, -1));
  // Exceptional splice of (3,2) into (2,3): [[2,-1],[-3,2]] times [[3,-1],[2,-1]].
  IntMatrix2 m = exceptional_splice_matrix(SeifertVertex::make(2, 3, 1), SeifertVertex::make(3, 2, 1));
  CHECK(m == IntMatrix2(4, -1, -5, 1));
  CHECK(m.det() == -1);

  auto t = parse(R"({"vertices": [{"id": "a", "p": 2, "q": 3}, {"id": "b", "p": 3, "q": 2}],
                     "root": "a", "edges": [{"from": "b", "to": "a", "j": -1}]})");
  CHECK(validate_tree(t).empty());
  CHECK(splice_matrix(t, 0) == m);
  CHECK(edge_delta(t, 0) == 2 * 2 - 3 * 3);
  CHECK(outgoing_matrix(t, 1) == m);
  CHECK(outgoing_matrix(t, 0) == IntMatrix2(2, -1, 3, -2));
}

TEST_CASE("asymptotes") {
  auto single = [](long p, long q) {
    return parse(R"({"vertices": [{"id": "a", "p": 2, "q": 3}, {"id": "b", "p": )" + std::to_string(p) +
                 R"(, "q": )" + std::to_string(q) + R"(}], "root": "a", "edges": [{"from": "b", "to": "a", "j": 1}]})");
  };
  auto as = asymptotes(single(2, 3), 0);
  CHECK(as.xi == Slope::parse("2/3"));
  CHECK(as.eta == Slope::parse("2/3"));
  as = asymptotes(single(2, 23), 0);
  CHECK(as.xi == Slope::parse("2/23"));
  CHECK(as.eta == Slope::parse("12/23"));

  std::mt19937_64 g(51);
  for (int i = 0; i < 500; ++i) {
    SatelliteTree t = random_iterated_tree(g);
    for (size_t e = 0; e < t.edges.size(); ++e) {
      Asymptotes a = asymptotes(t, static_cast<int>(e)), c = asymptotes_closed_form(t, static_cast<int>(e));
      CHECK(a.xi == c.xi);
      CHECK(a.eta == c.eta);
      IntMatrix2 m = splice_matrix(t, static_cast<int>(e));
      CHECK(lft_apply(m, Slope::infinity()) == a.xi);
      CHECK(lft_apply(m, a.eta).is_infinite());
    }
  }
  // Exceptional edges too.
  for (long p1 = 2; p1 < 7; ++p1) {
    for (long q1 = -9; q1 < 10; ++q1) {
      if (q1 == 0 || gcd(Int(p1), Int(q1)) != 1) continue;
      auto t = parse(R"({"vertices": [{"id": "a", "p": 2, "q": 5}, {"id": "b", "p": )" + std::to_string(p1) +
                     R"(, "q": )" + std::to_string(q1) + R"(}], "root": "a", "edges": [{"from": "b", "to": "a", "j": -1}]})");
      Asymptotes a = asymptotes(t, 0), c = asymptotes_closed_form(t, 0);
      CHECK(a.xi == c.xi);
      CHECK(a.eta == c.eta);
    }
  }
}
