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

#include "lspace/matrix.hpp"

#include "lspace/errors.hpp"

namespace lspace {

IntMatrix2::IntMatrix2(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  Int dt = det();
  if (dt != 1 && dt != -1) {
    fail(ErrorKind::InvalidArgument, "matrix " + str() + " has determinant " + dt.get_str());
  }
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
  return IntMatrix2(a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d);
}

IntMatrix2 IntMatrix2::inverse() const {
  // det is +-1, so the adjugate divided by det stays integral.
  Int dt = det();
  return IntMatrix2(d * dt, -b * dt, -c * dt, a * dt);
}

std::string IntMatrix2::str() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

Slope lft_apply(const IntMatrix2& m, const Slope& s) {
  // (num, den) is a primitive vector; an invertible integer matrix maps it to
  // another primitive vector, so the result needs no zero check.
  return Slope(m.a * s.num() + m.b * s.den(), m.c * s.num() + m.d * s.den());
}

}  // namespace lspace
