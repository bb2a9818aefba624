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

#include "lspace/matrix.hpp"
#include "lspace/slope.hpp"

namespace lspace {

enum class IntervalKind { Empty, Point, LongitudeComplement, Arc, FullCircle };

// A subset of the circle Q u {inf} of one of five shapes.
//
// Arc(lo, hi) is the set met walking counterclockwise (increasing slope,
// wrapping through inf) from lo to hi; lo != hi always. Point and
// LongitudeComplement use `lo` as their single slope.
class SlopeInterval {
 public:
  SlopeInterval() = default;

  static SlopeInterval empty() { return SlopeInterval(); }
  static SlopeInterval full();
  static SlopeInterval point(const Slope& s);
  static SlopeInterval longitude_complement(const Slope& l);
  static SlopeInterval arc(const Slope& lo, const Slope& hi, bool left_closed = true,
                           bool right_closed = true);
  // [[lo, hi]]: the closed arc, or all but lo when lo == hi.
  static SlopeInterval closed(const Slope& lo, const Slope& hi);

  IntervalKind kind() const { return kind_; }
  const Slope& lo() const { return lo_; }
  const Slope& hi() const { return hi_; }
  bool left_closed() const { return left_closed_; }
  bool right_closed() const { return right_closed_; }

  bool is_empty() const { return kind_ == IntervalKind::Empty; }
  bool operator==(const SlopeInterval& o) const;
  bool operator!=(const SlopeInterval& o) const { return !(*this == o); }

  std::string str() const;

 private:
  IntervalKind kind_ = IntervalKind::Empty;
  Slope lo_, hi_;
  bool left_closed_ = false;
  bool right_closed_ = false;
};

bool contains(const SlopeInterval& i, const Slope& s);
SlopeInterval interval_interior(const SlopeInterval& i);
SlopeInterval interval_complement(const SlopeInterval& i);
bool intersects(const SlopeInterval& a, const SlopeInterval& b);
bool is_subset(const SlopeInterval& a, const SlopeInterval& b);
bool covers_circle(const SlopeInterval& i1, const SlopeInterval& i2);

// Image of an interval under a linear fractional map. Orientation reversing
// maps (det = -1) swap the arc endpoints.
SlopeInterval map_interval(const IntMatrix2& m, const SlopeInterval& i);

}  // namespace lspace
