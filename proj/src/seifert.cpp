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

#include "lspace/seifert.hpp"

#include <limits>

#include "lspace/errors.hpp"
#include "lspace/kernel.hpp"

namespace lspace {

std::pair<Int, Int> pstar_qstar(const Int& p, const Int& q) {
  if (p <= 0) fail(ErrorKind::InvalidArgument, "p must be positive, got " + p.get_str());
  if (gcd(p, q) != 1) {
    fail(ErrorKind::InvalidArgument, "p=" + p.get_str() + " and q=" + q.get_str() + " are not coprime");
  }
  if (p == 1) return {Int(1), Int(0)};
  Int inv;
  Int qm = mod_abs(q, p);
  mpz_invert(inv.get_mpz_t(), qm.get_mpz_t(), p.get_mpz_t());
  Int q_star = mod_abs(-inv, p);
  Int p_star = (1 + q_star * q) / p;
  return {p_star, q_star};
}

SeifertVertex SeifertVertex::make(const Int& p, const Int& q, int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "vertex needs n >= 1 boundary slots");
  if (q == 0) fail(ErrorKind::InvalidArgument, "q must be nonzero");
  SeifertVertex v;
  v.p = p;
  v.q = q;
  v.n = n;
  std::tie(v.p_star, v.q_star) = pstar_qstar(p, q);
  return v;
}

std::pair<Slope, Slope> bi_endpoints(const SlopeInterval& i) {
  switch (i.kind()) {
    case IntervalKind::Arc: return {i.lo(), i.hi()};
    case IntervalKind::LongitudeComplement: return {i.lo(), i.lo()};
    default:
      fail(ErrorKind::InvalidArgument, "BI interval must be an arc or a longitude complement, got " + i.str());
  }
}

namespace {

bool any_infinite(const std::vector<Slope>& v) {
  for (const auto& s : v) {
    if (s.is_infinite()) return true;
  }
  return false;
}

void split_bi(const FiberExteriorInput& in, std::vector<Slope>& minus, std::vector<Slope>& plus) {
  for (const auto& i : in.bi_intervals) {
    auto [m, p] = bi_endpoints(i);
    minus.push_back(m);
    plus.push_back(p);
  }
}

// Builds and solves the kernel problem
//   G(k) = P (n - 1) + sum_{x in pos} P{x k} - sum_{x in neg} P{x k}
// and returns (G*, k*) as a rational G*/(P k*) together with attainment.
struct RatioSearch {
  Rat best;  // max over k of G(k) / (P k)
  bool attained;
  int64_t k;
};

RatioSearch search(const std::vector<Rat>& pos, const std::vector<Rat>& neg, size_t n) {
  Int P = 1;
  for (const auto& x : pos) P = lcm(P, Int(x.get_den()));
  for (const auto& x : neg) P = lcm(P, Int(x.get_den()));
  uint64_t cap = period_cap();
  if (P > Int(std::to_string(cap))) {
    fail(ErrorKind::Resource, "k-search period " + P.get_str() + " exceeds cap " + std::to_string(cap));
  }
  Int terms = Int(static_cast<unsigned long>(pos.size() + neg.size() + 1));
  Int lim = Int(1);
  lim <<= 62;
  if (terms * P >= lim) fail(ErrorKind::Resource, "k-search problem too large for 64-bit residues");

  KernelProblem prob;
  prob.period = P.get_si();
  prob.base = prob.period * (static_cast<int64_t>(n) - 1);
  auto step = [&](const Rat& x) {
    Int den(x.get_den());
    Int s = (P / den) * mod_abs(Int(x.get_num()), den);
    return static_cast<int64_t>(s.get_si());
  };
  for (const auto& x : pos) prob.plus_steps.push_back(step(x));
  for (const auto& x : neg) prob.minus_steps.push_back(step(x));
  KernelResult r = best_ratio(prob);
  RatioSearch out;
  out.attained = r.g >= 0;
  out.k = r.k;
  out.best = Rat(Int(std::to_string(r.g)), P * Int(std::to_string(r.k)));
  out.best.canonicalize();
  return out;
}

}  // namespace

Slope y_minus_of_k(const FiberExteriorInput& in, const Int& k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "k must be positive");
  std::vector<Slope> minus, plus;
  split_bi(in, minus, plus);
  if (any_infinite(in.seifert_slopes) || any_infinite(plus)) return Slope::infinity();
  Int s = 1;
  for (const auto& y : in.seifert_slopes) s += floor_of(y.value() * k);
  for (const auto& c : plus) s += ceil_of(c.value() * k) - 1;
  return Slope(-s, k);
}

Slope y_plus_of_k(const FiberExteriorInput& in, const Int& k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "k must be positive");
  std::vector<Slope> minus, plus;
  split_bi(in, minus, plus);
  if (any_infinite(in.seifert_slopes) || any_infinite(minus)) return Slope::infinity();
  Int s = -1;
  for (const auto& y : in.seifert_slopes) s += ceil_of(y.value() * k);
  for (const auto& d : minus) s += floor_of(d.value() * k) + 1;
  return Slope(-s, k);
}

Extremum y_minus_sup(const FiberExteriorInput& in) {
  std::vector<Slope> minus, plus;
  split_bi(in, minus, plus);
  if (any_infinite(in.seifert_slopes) || any_infinite(plus)) return {Slope::infinity(), true, 1};
  // y-(k) = C + g(k)/k with g(k) = n - 1 + sum{f k} - sum{-c k}.
  Rat C = 0;
  std::vector<Rat> pos, neg;
  for (const auto& f : in.seifert_slopes) {
    C -= f.value();
    pos.push_back(f.value());
  }
  for (const auto& c : plus) {
    C -= c.value();
    neg.push_back(-c.value());
  }
  RatioSearch r = search(pos, neg, plus.size());
  if (!r.attained) return {Slope(C), false, 0};
  return {Slope(Rat(C + r.best)), true, r.k};
}

Extremum y_plus_inf(const FiberExteriorInput& in) {
  std::vector<Slope> minus, plus;
  split_bi(in, minus, plus);
  if (any_infinite(in.seifert_slopes) || any_infinite(minus)) return {Slope::infinity(), true, 1};
  // y+(k) = C - h(k)/k with h(k) = n - 1 + sum{-f k} - sum{d k}.
  Rat C = 0;
  std::vector<Rat> pos, neg;
  for (const auto& f : in.seifert_slopes) {
    C -= f.value();
    pos.push_back(-f.value());
  }
  for (const auto& d : minus) {
    C -= d.value();
    neg.push_back(d.value());
  }
  RatioSearch r = search(pos, neg, minus.size());
  if (!r.attained) return {Slope(C), false, 0};
  return {Slope(Rat(C - r.best)), true, r.k};
}

FiberIntervalResult fiber_exterior_interval(const FiberExteriorInput& in) {
  std::vector<Slope> minus, plus;
  split_bi(in, minus, plus);
  int n_inf = 0;
  for (const auto& y : in.seifert_slopes) n_inf += y.is_infinite() ? 1 : 0;
  int n_lt = 0;
  for (size_t j = 0; j < minus.size(); ++j) {
    if (minus[j].is_finite() && plus[j].is_finite() && linear_less(minus[j], plus[j])) ++n_lt;
  }
  bool inf_minus = any_infinite(minus), inf_plus = any_infinite(plus);

  FiberIntervalResult res;
  if (n_inf >= 1) {
    res.y_minus = res.y_plus = Slope::infinity();
    res.is_bc = true;
    if (inf_minus && inf_plus) {
      fail(ErrorKind::UnclassifiedCase, "infinite BI endpoints on both sides");
    }
    if (n_inf == 1 && n_lt == 0) {
      res.interval = SlopeInterval::longitude_complement(Slope::infinity());
    }
    return res;
  }

  if (inf_minus || inf_plus) {
    if (inf_minus && inf_plus) {
      fail(ErrorKind::UnclassifiedCase, "infinite BI endpoints on both sides");
    }
    Extremum lo = y_minus_sup(in), hi = y_plus_inf(in);
    res.y_minus = lo.value;
    res.y_plus = hi.value;
    res.minus_attained = lo.attained;
    res.plus_attained = hi.attained;
    res.k_minus = lo.k;
    res.k_plus = hi.k;
    if (n_lt == 0) res.interval = SlopeInterval::closed(lo.value, hi.value);
    return res;
  }

  Extremum lo = y_minus_sup(in), hi = y_plus_inf(in);
  res.y_minus = lo.value;
  res.y_plus = hi.value;
  res.minus_attained = lo.attained;
  res.plus_attained = hi.attained;
  res.k_minus = lo.k;
  res.k_plus = hi.k;
  res.is_bc = !lo.attained && !hi.attained;
  if (lo.attained != hi.attained) {
    fail(ErrorKind::UnclassifiedCase, "only one of the extrema is attained");
  }

  if (n_lt == 0) {
    if (res.is_bc) {
      res.interval = SlopeInterval::longitude_complement(lo.value);
    } else if (linear_less(hi.value, lo.value)) {
      res.interval = SlopeInterval::arc(lo.value, hi.value);
    } else if (lo.value == hi.value) {
      res.interval = SlopeInterval::longitude_complement(lo.value);
    } else {
      fail(ErrorKind::UnclassifiedCase,
           "y- = " + lo.value.str() + " < y+ = " + hi.value.str() + " with no spanning BI summand");
    }
  } else if (n_lt == 1) {
    if (linear_less(lo.value, hi.value)) {
      res.interval = SlopeInterval::arc(lo.value, hi.value);
    } else if (lo.value == hi.value) {
      res.interval = SlopeInterval::point(lo.value);
    }
  }
  return res;
}

Slope rational_longitude(const std::vector<Slope>& seifert_slopes) {
  Rat s = 0;
  for (const auto& y : seifert_slopes) {
    if (y.is_infinite()) return Slope::infinity();
    s -= y.value();
  }
  return Slope(s);
}

SpecialSlopeFlags classify_special_slope(const std::vector<Slope>& vec, bool has_exceptional_fibers) {
  SpecialSlopeFlags f;
  int n_inf = 0, n_zero = 0;
  for (const auto& y : vec) {
    if (y.is_infinite()) {
      ++n_inf;
    } else if (y.num() == 0) {
      ++n_zero;
    }
  }
  f.in_R = n_inf >= 1;
  f.in_Z = n_inf >= 2;
  const int n = static_cast<int>(vec.size());
  f.in_R0 = !has_exceptional_fibers && n_inf == 1 && n_zero >= n - 2;
  return f;
}

LambdaCanonical lambda_canonicalize(const std::vector<Slope>& vec) {
  LambdaCanonical out;
  out.rep = vec;
  out.shift.assign(vec.size(), Int(0));
  int last = -1;
  for (size_t i = 0; i < vec.size(); ++i) {
    if (vec[i].is_finite()) last = static_cast<int>(i);
  }
  Int total = 0;
  for (int i = 0; i < last; ++i) {
    if (vec[i].is_infinite()) continue;
    out.shift[i] = floor_of(vec[i].value());
    total += out.shift[i];
  }
  if (last >= 0) out.shift[last] = -total;
  for (size_t i = 0; i < vec.size(); ++i) {
    if (vec[i].is_finite()) out.rep[i] = Slope(Rat(vec[i].value() - Rat(out.shift[i])));
  }
  return out;
}

}  // namespace lspace
