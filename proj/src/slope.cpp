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

#include "lspace/slope.hpp"

#include <cctype>
#include <ostream>

#include "lspace/errors.hpp"

namespace lspace {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::InvalidTree: return "invalid tree";
    case ErrorKind::Resource: return "resource limit";
    case ErrorKind::UnclassifiedCase: return "unclassified structure case";
    case ErrorKind::GluingHypothesis: return "gluing hypotheses unmet";
    case ErrorKind::Hypothesis: return "hypothesis violation";
    case ErrorKind::OpenCase: return "open case";
  }
  return "error";
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_of(const Rat& x) {
  return floor_div(x.get_num(), x.get_den());
}

Int ceil_of(const Rat& x) {
  return ceil_div(x.get_num(), x.get_den());
}

Rat frac(const Rat& x) {
  Rat r = x - Rat(floor_of(x));
  r.canonicalize();
  return r;
}

Rat ratio(const Int& n, const Int& d) {
  if (d == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Int mod_abs(const Int& a, const Int& b) {
  if (b == 0) fail(ErrorKind::InvalidArgument, "mod_abs: zero modulus");
  Int m = abs(b);
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Slope::Slope(const Rat& r) : Slope(Int(r.get_num()), Int(r.get_den())) {}

Slope::Slope(const Int& num, const Int& den) {
  if (den == 0) {
    if (num == 0) fail(ErrorKind::InvalidArgument, "slope 0/0 is undefined");
    num_ = 1;
    den_ = 0;
    return;
  }
  Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rat Slope::value() const {
  if (is_infinite()) fail(ErrorKind::InvalidArgument, "slope is infinite");
  return Rat(num_, den_);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "+inf" || s == "-inf" || s == "oo") return infinity();
  auto slash = s.find('/');
  Int num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_int(s, num)) fail(ErrorKind::Parse, "malformed slope '" + std::string(text) + "'");
  } else {
    if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den)) {
      fail(ErrorKind::Parse, "malformed slope '" + std::string(text) + "'");
    }
    if (num == 0 && den == 0) fail(ErrorKind::Parse, "slope 0/0 is undefined");
  }
  return Slope(num, den);
}

bool linear_less(const Slope& a, const Slope& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.num() * b.den() < b.num() * a.den();
}

namespace {

// Position of x on the circle as seen walking counterclockwise from a.
// Returns a bucket and relies on linear_less inside the bucket.
int bucket(const Slope& a, const Slope& x) {
  if (a.is_infinite()) return 0;
  if (x.is_infinite()) return 1;
  return linear_less(a, x) ? 0 : 2;
}

}  // namespace

bool ccw_between(const Slope& a, const Slope& b, const Slope& c) {
  if (a == b || b == c || a == c) return false;
  int bb = bucket(a, b), bc = bucket(a, c);
  if (bb != bc) return bb < bc;
  return linear_less(b, c);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

std::vector<Slope> parse_slope_list(std::string_view text) {
  std::vector<Slope> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(Slope::parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

}  // namespace lspace
