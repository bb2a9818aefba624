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

#include "lspace/interval.hpp"

#include "lspace/errors.hpp"

namespace lspace {

SlopeInterval SlopeInterval::full() {
  SlopeInterval i;
  i.kind_ = IntervalKind::FullCircle;
  return i;
}

SlopeInterval SlopeInterval::point(const Slope& s) {
  SlopeInterval i;
  i.kind_ = IntervalKind::Point;
  i.lo_ = s;
  i.hi_ = s;
  i.left_closed_ = i.right_closed_ = true;
  return i;
}

SlopeInterval SlopeInterval::longitude_complement(const Slope& l) {
  SlopeInterval i;
  i.kind_ = IntervalKind::LongitudeComplement;
  i.lo_ = l;
  i.hi_ = l;
  return i;
}

SlopeInterval SlopeInterval::arc(const Slope& lo, const Slope& hi, bool left_closed,
                                 bool right_closed) {
  if (lo == hi) {
    fail(ErrorKind::InvalidArgument, "arc endpoints coincide at " + lo.str());
  }
  SlopeInterval i;
  i.kind_ = IntervalKind::Arc;
  i.lo_ = lo;
  i.hi_ = hi;
  i.left_closed_ = left_closed;
  i.right_closed_ = right_closed;
  return i;
}

SlopeInterval SlopeInterval::closed(const Slope& lo, const Slope& hi) {
  if (lo == hi) return longitude_complement(lo);
  return arc(lo, hi, true, true);
}

bool SlopeInterval::operator==(const SlopeInterval& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case IntervalKind::Empty:
    case IntervalKind::FullCircle:
      return true;
    case IntervalKind::Point:
    case IntervalKind::LongitudeComplement:
      return lo_ == o.lo_;
    case IntervalKind::Arc:
      return lo_ == o.lo_ && hi_ == o.hi_ && left_closed_ == o.left_closed_ &&
             right_closed_ == o.right_closed_;
  }
  return false;
}

std::string SlopeInterval::str() const {
  switch (kind_) {
    case IntervalKind::Empty: return "empty";
    case IntervalKind::FullCircle: return "all";
    case IntervalKind::Point: return "{" + lo_.str() + "}";
    case IntervalKind::LongitudeComplement: return "[[" + lo_.str() + "," + lo_.str() + "]]";
    case IntervalKind::Arc:
      return std::string(left_closed_ ? "[" : "(") + lo_.str() + "," + hi_.str() +
             (right_closed_ ? "]" : ")");
  }
  return "?";
}

bool contains(const SlopeInterval& i, const Slope& s) {
  switch (i.kind()) {
    case IntervalKind::Empty: return false;
    case IntervalKind::FullCircle: return true;
    case IntervalKind::Point: return s == i.lo();
    case IntervalKind::LongitudeComplement: return s != i.lo();
    case IntervalKind::Arc:
      if (s == i.lo()) return i.left_closed();
      if (s == i.hi()) return i.right_closed();
      return ccw_between(i.lo(), s, i.hi());
  }
  return false;
}

SlopeInterval interval_interior(const SlopeInterval& i) {
  switch (i.kind()) {
    case IntervalKind::Empty:
    case IntervalKind::Point:
      return SlopeInterval::empty();
    case IntervalKind::Arc:
      return SlopeInterval::arc(i.lo(), i.hi(), false, false);
    default:
      return i;
  }
}

SlopeInterval interval_complement(const SlopeInterval& i) {
  switch (i.kind()) {
    case IntervalKind::Empty: return SlopeInterval::full();
    case IntervalKind::FullCircle: return SlopeInterval::empty();
    case IntervalKind::Point: return SlopeInterval::longitude_complement(i.lo());
    case IntervalKind::LongitudeComplement: return SlopeInterval::point(i.lo());
    case IntervalKind::Arc:
      return SlopeInterval::arc(i.hi(), i.lo(), !i.right_closed(), !i.left_closed());
  }
  return SlopeInterval::empty();
}

namespace {

// Does arc `c` contain the start of arc `a`: the point a.lo itself when `a` is
// closed there, otherwise the points immediately after a.lo?
bool holds_start(const SlopeInterval& c, const SlopeInterval& a) {
  const Slope& x = a.lo();
  if (a.left_closed()) return contains(c, x);
  if (x == c.lo()) return true;
  if (x == c.hi()) return false;
  return ccw_between(c.lo(), x, c.hi());
}

}  // namespace

bool intersects(const SlopeInterval& a, const SlopeInterval& b) {
  using K = IntervalKind;
  if (a.kind() == K::Empty || b.kind() == K::Empty) return false;
  if (a.kind() == K::FullCircle) return true;
  if (b.kind() == K::FullCircle) return true;
  if (a.kind() == K::Point) return contains(b, a.lo());
  if (b.kind() == K::Point) return contains(a, b.lo());
  // Both remaining sets are infinite; a longitude complement misses one point.
  if (a.kind() == K::LongitudeComplement || b.kind() == K::LongitudeComplement) return true;
  // Two arcs meet iff one of them starts inside the other.
  return holds_start(b, a) || holds_start(a, b);
}

bool is_subset(const SlopeInterval& a, const SlopeInterval& b) {
  return !intersects(a, interval_complement(b));
}

bool covers_circle(const SlopeInterval& i1, const SlopeInterval& i2) {
  return is_subset(interval_complement(i1), i2);
}

SlopeInterval map_interval(const IntMatrix2& m, const SlopeInterval& i) {
  switch (i.kind()) {
    case IntervalKind::Empty:
    case IntervalKind::FullCircle:
      return i;
    case IntervalKind::Point:
      return SlopeInterval::point(lft_apply(m, i.lo()));
    case IntervalKind::LongitudeComplement:
      return SlopeInterval::longitude_complement(lft_apply(m, i.lo()));
    case IntervalKind::Arc: {
      Slope lo = lft_apply(m, i.lo()), hi = lft_apply(m, i.hi());
      if (m.det() > 0) return SlopeInterval::arc(lo, hi, i.left_closed(), i.right_closed());
      return SlopeInterval::arc(hi, lo, i.right_closed(), i.left_closed());
    }
  }
  return i;
}

}  // namespace lspace
