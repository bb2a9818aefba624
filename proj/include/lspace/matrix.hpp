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

#include "lspace/slope.hpp"

namespace lspace {

// Integer 2x2 matrix [[a,b],[c,d]] with determinant +-1, acting on slopes by
// the linear fractional map x -> (a x + b)/(c x + d).
struct IntMatrix2 {
  Int a, b, c, d;

  IntMatrix2() : a(1), b(0), c(0), d(1) {}
  IntMatrix2(Int a_, Int b_, Int c_, Int d_);

  static IntMatrix2 identity() { return IntMatrix2(); }

  Int det() const { return a * d - b * c; }
  IntMatrix2 operator*(const IntMatrix2& o) const;
  IntMatrix2 inverse() const;
  bool operator==(const IntMatrix2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  std::string str() const;
};

Slope lft_apply(const IntMatrix2& m, const Slope& s);

}  // namespace lspace
