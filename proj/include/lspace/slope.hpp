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

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lspace {

using Int = mpz_class;
using Rat = mpq_class;

// Floor, ceiling and fractional part of an exact rational.
Int floor_of(const Rat& x);
Int ceil_of(const Rat& x);
Rat frac(const Rat& x);
// n/d in canonical form; d may be negative. Throws InvalidArgument when d = 0.
Rat ratio(const Int& n, const Int& d);  // [x] = x - floor(x), in [0,1)

// [a]_b = a - |b| floor(a/|b|), the least nonnegative residue mod |b|.
Int mod_abs(const Int& a, const Int& b);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// A point of Q u {inf}, stored as a coprime pair with den >= 0.
// Infinity is 1/0.
class Slope {
 public:
  Slope() : num_(0), den_(1) {}
  Slope(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Slope(const Int& n) : num_(n), den_(1) {}  // NOLINT
  Slope(const Rat& r);  // NOLINT
  Slope(const Int& num, const Int& den);

  static Slope infinity() { return Slope(Int(1), Int(0)); }
  static Slope parse(std::string_view text);

  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }
  bool is_integer() const { return den_ == 1; }
  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  // Throws InvalidArgument on infinity.
  Rat value() const;

  std::string str() const;

  bool operator==(const Slope& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Slope& o) const { return !(*this == o); }

 private:
  Int num_;
  Int den_;
};

// Linear order with infinity treated as +inf. Used for sorting and maps only.
bool linear_less(const Slope& a, const Slope& b);

struct SlopeLess {
  bool operator()(const Slope& a, const Slope& b) const {
    return linear_less(a, b);
  }
};

// Strict counterclockwise betweenness on the circle Q u {inf}: walking from a
// in the direction of increasing slope (wrapping through inf), b is met
// strictly before c. All three must be pairwise distinct for a true result.
bool ccw_between(const Slope& a, const Slope& b, const Slope& c);

std::ostream& operator<<(std::ostream& os, const Slope& s);

// Parse a comma separated list "a/b,c,inf".
std::vector<Slope> parse_slope_list(std::string_view text);

}  // namespace lspace
